#include "qgrass/semicontinuity.hpp"

#include <algorithm>
#include <set>

#include "qgrass/errors.hpp"
#include "qgrass/hom.hpp"

namespace qgrass {

std::vector<long> default_pencil_samples(const Representation& m0, const Representation& x) {
  const std::size_t r = hom_unknowns(x, m0);
  std::vector<long> out;
  for (std::size_t t = 1; t <= r + 1; ++t) out.push_back(static_cast<long>(t));
  return out;
}

PencilReport pencil_hom_semicontinuity(const Representation& m0, const Representation& m1,
                                       const Representation& x, const std::vector<long>& samples,
                                       PencilSlot slot) {
  if (!m0.field().is_rational()) throw PreconditionError("pencil semicontinuity is checked over Q only");
  require_compatible(m0, m1, "pencil");
  require_compatible(m0, x, "pencil");
  if (m0.dims() != m1.dims()) throw DimensionMismatch("pencil members have different dimension vectors");

  PencilReport report;
  report.unknowns = hom_unknowns(x, m0);
  std::set<long> seen;
  for (long t : samples) {
    if (t == 0) throw PreconditionError("pencil samples must be nonzero");
    if (!seen.insert(t).second) throw PreconditionError("duplicate pencil sample " + std::to_string(t));
  }
  if (samples.size() < report.unknowns + 1) {
    throw PreconditionError("need at least r + 1 = " + std::to_string(report.unknowns + 1) + " samples, got " +
                            std::to_string(samples.size()));
  }

  auto h = [&](long t) {
    const Representation mt = pencil_point(m0, m1, Scalar(m0.field(), t));
    return slot == PencilSlot::Second ? hom_dim(x, mt) : hom_dim(mt, x);
  };
  report.at_zero = h(0);
  for (long t : samples) report.samples.push_back({t, h(t)});
  report.minimum = std::min_element(report.samples.begin(), report.samples.end(),
                                    [](const PencilSample& a, const PencilSample& b) { return a.hom_dim < b.hom_dim; })
                       ->hom_dim;
  report.holds = report.at_zero >= report.minimum;
  return report;
}

}  // namespace qgrass
