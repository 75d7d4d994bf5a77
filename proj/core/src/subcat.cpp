#include "qgrass/subcat.hpp"

#include <algorithm>

#include "qgrass/errors.hpp"
#include "qgrass/hom.hpp"

namespace qgrass {

namespace {

std::vector<int> checked_indices(std::vector<int> indices) {
  if (indices.empty()) throw PreconditionError("perp predicate needs at least one Ext index");
  for (int i : indices) {
    if (i != 0 && i != 1) throw PreconditionError("Ext index " + std::to_string(i) + " outside {0, 1}");
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

void check_modules(const std::vector<Representation>& modules) {
  for (std::size_t i = 1; i < modules.size(); ++i) require_compatible(modules[0], modules[i], "perp predicate");
}

std::size_t ext_dim(const Representation& a, const Representation& b, int index) {
  return index == 0 ? hom_dim(a, b) : ext1_dim(a, b);
}

}  // namespace

SubcatPredicate SubcatPredicate::all() { return SubcatPredicate{}; }

SubcatPredicate SubcatPredicate::left_perp(std::vector<Representation> modules, std::vector<int> ext_indices) {
  check_modules(modules);
  SubcatPredicate p;
  p.kind_ = Kind::LeftPerp;
  p.modules_ = std::move(modules);
  p.indices_ = checked_indices(std::move(ext_indices));
  return p;
}

SubcatPredicate SubcatPredicate::right_perp(std::vector<Representation> modules, std::vector<int> ext_indices) {
  SubcatPredicate p = left_perp(std::move(modules), std::move(ext_indices));
  p.kind_ = Kind::RightPerp;
  return p;
}

SubcatPredicate SubcatPredicate::pdim_at_most(int bound) {
  if (bound < 0) throw PreconditionError("pdim bound must be non-negative");
  SubcatPredicate p;
  p.kind_ = Kind::PdimAtMost;
  p.bound_ = bound;
  return p;
}

SubcatPredicate SubcatPredicate::intersection(std::vector<SubcatPredicate> parts) {
  if (parts.empty()) throw PreconditionError("intersection of no predicates");
  SubcatPredicate p;
  p.kind_ = Kind::Intersection;
  p.parts_ = std::move(parts);
  return p;
}

std::string SubcatPredicate::describe() const {
  auto idx = [&] {
    std::string s;
    for (int i : indices_) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
  };
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::LeftPerp:
      return "leftperp[" + idx() + "](" + std::to_string(modules_.size()) + " module(s))";
    case Kind::RightPerp:
      return "rightperp[" + idx() + "](" + std::to_string(modules_.size()) + " module(s))";
    case Kind::PdimAtMost:
      return "pdim<=" + std::to_string(bound_);
    case Kind::Intersection: {
      std::string s = "and(";
      for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ", " : "") + parts_[i].describe();
      return s + ")";
    }
  }
  return "?";
}

bool member(const SubcatPredicate& pred, const Representation& x) {
  switch (pred.kind()) {
    case SubcatPredicate::Kind::All:
      return true;
    case SubcatPredicate::Kind::LeftPerp:
      for (const auto& m : pred.modules()) {
        require_compatible(x, m, "member");
        for (int i : pred.ext_indices())
          if (ext_dim(x, m, i) != 0) return false;
      }
      return true;
    case SubcatPredicate::Kind::RightPerp:
      for (const auto& m : pred.modules()) {
        require_compatible(m, x, "member");
        for (int i : pred.ext_indices())
          if (ext_dim(m, x, i) != 0) return false;
      }
      return true;
    case SubcatPredicate::Kind::PdimAtMost:
      // Hereditary: every module has pdim <= 1.
      if (pred.bound() >= 1 || x.is_zero()) return true;
      return pdim(x) == 0;
    case SubcatPredicate::Kind::Intersection:
      return std::all_of(pred.parts().begin(), pred.parts().end(),
                         [&](const SubcatPredicate& p) { return member(p, x); });
  }
  return false;
}

std::vector<SubrepPoint> exact_grassmannian_points(const Representation& m, const DimVector& e,
                                                   const SubcatPredicate& pred, std::uint64_t cap) {
  if (!member(pred, m)) {
    throw PreconditionError("exact Grassmannian: the ambient representation is not in " + pred.describe());
  }
  std::vector<SubrepPoint> out;
  for (auto& u : enumerate_subreps(m, e, cap)) {
    if (pred.kind() == SubcatPredicate::Kind::All) {
      out.push_back(std::move(u));
      continue;
    }
    const auto parts = restrict_and_quotient(m, u);
    if (member(pred, parts.sub) && member(pred, parts.quotient)) out.push_back(std::move(u));
  }
  return out;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 of (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return Rng(z ^ (z >> 31));
}

Representation sample_member(const SubcatPredicate& pred, const Quiver& quiver, const FieldSpec& field, Rng& rng,
                             const ExtensionSampleOptions& options, std::size_t* rejected) {
  for (std::size_t attempt = 0; attempt < options.retries; ++attempt) {
    DimVector dims;
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
      dims.entries.push_back(uniform_below(rng, options.max_dim_per_vertex + 1));
    }
    Representation x = random_representation(quiver, field, dims, rng, options.int_range);
    if (member(pred, x)) return x;
    if (rejected) ++*rejected;
  }
  throw SamplerStarvation("no member of " + pred.describe() + " found in " + std::to_string(options.retries) +
                          " draws");
}

ExtensionSampleReport extension_closed_sample(const SubcatPredicate& pred, const Quiver& quiver,
                                              const FieldSpec& field, const ExtensionSampleOptions& options) {
  if (!field.is_finite()) throw PreconditionError("extension sampling needs a finite field");
  ExtensionSampleReport report;
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng = trial_rng(options.seed, t);
    Representation sub = sample_member(pred, quiver, field, rng, options, &report.rejected_draws);
    Representation quot = sample_member(pred, quiver, field, rng, options, &report.rejected_draws);
    auto cocycle = random_cocycle(sub, quot, rng, options.int_range);
    Extension ext = build_extension(sub, quot, cocycle);
    ++report.trials;
    if (!member(pred, ext.middle)) {
      report.violations.push_back({t, std::move(sub), std::move(quot), std::move(cocycle), std::move(ext.middle)});
    }
  }
  return report;
}

}  // namespace qgrass
