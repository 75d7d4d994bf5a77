#include "qgrass/filtration.hpp"

#include <set>

#include "qgrass/errors.hpp"

namespace qgrass {

const char* to_string(FiltVerdict v) {
  switch (v) {
    case FiltVerdict::Yes:
      return "yes";
    case FiltVerdict::No:
      return "no";
    case FiltVerdict::CapExceeded:
      return "cap-exceeded";
  }
  return "?";
}

namespace {

class FiltSearch {
 public:
  FiltSearch(const std::vector<Representation>& layers, std::uint64_t cap, const IsoOptions& iso)
      : layers_(layers), budget_(cap), iso_(iso) {}

  // True on success with the steps appended to `chain`.
  bool search(const Representation& y, std::vector<FiltStep>& chain) {
    if (y.is_zero()) return true;
    const std::string key = y.to_string();
    if (failed_.count(key)) return false;

    for (std::size_t l = 0; l < layers_.size(); ++l) {
      const Representation& layer = layers_[l];
      if (layer.is_zero() || !layer.dims().fits_in(y.dims())) continue;
      const std::vector<SubrepPoint> subs = enumerate_subreps(y, layer.dims(), budget_);
      const std::uint64_t used = subs.size() + 1;
      if (used > budget_) throw CapExceeded("filtration search exhausted its candidate budget");
      budget_ -= used;
      candidates_ += subs.size();

      for (const auto& u : subs) {
        const SubQuotient parts = restrict_and_quotient(y, u);
        const IsoResult iso = are_isomorphic(parts.sub, layer, iso_);
        if (iso.verdict == IsoVerdict::ProbablyNotIsomorphic) inconclusive_ = true;
        if (iso.verdict != IsoVerdict::Isomorphic) continue;
        chain.push_back({l, u});
        if (search(parts.quotient, chain)) return true;
        chain.pop_back();
      }
    }
    failed_.insert(key);
    return false;
  }

  std::uint64_t candidates() const { return candidates_; }
  bool inconclusive() const { return inconclusive_; }

 private:
  const std::vector<Representation>& layers_;
  std::uint64_t budget_;
  IsoOptions iso_;
  std::uint64_t candidates_ = 0;
  bool inconclusive_ = false;
  std::set<std::string> failed_;
};

}  // namespace

FiltResult is_filtered_by(const Representation& x, const std::vector<Representation>& layers, std::uint64_t cap,
                          const IsoOptions& iso) {
  if (!x.field().is_finite()) throw PreconditionError("filtration search needs a finite field");
  for (const auto& l : layers) require_compatible(x, l, "is_filtered_by");

  FiltSearch search(layers, cap, iso);
  FiltResult result;
  try {
    result.verdict = search.search(x, result.certificate) ? FiltVerdict::Yes : FiltVerdict::No;
  } catch (const CapExceeded&) {
    result.verdict = FiltVerdict::CapExceeded;
    result.certificate.clear();
  }
  if (result.verdict != FiltVerdict::Yes) result.certificate.clear();
  result.candidates = search.candidates();
  result.inconclusive_iso = search.inconclusive();
  return result;
}

bool check_filtration_certificate(const Representation& x, const std::vector<Representation>& layers,
                                  const std::vector<FiltStep>& certificate, const IsoOptions& iso) {
  Representation y = x;
  for (const auto& step : certificate) {
    if (step.layer >= layers.size() || !is_stable(y, step.sub)) return false;
    const SubQuotient parts = restrict_and_quotient(y, step.sub);
    if (are_isomorphic(parts.sub, layers[step.layer], iso).verdict != IsoVerdict::Isomorphic) return false;
    y = parts.quotient;
  }
  return y.is_zero();
}

}  // namespace qgrass
