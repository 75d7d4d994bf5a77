#include "report.hpp"

#include <sstream>

namespace qgrass::cli {

using nlohmann::json;

void Report::check(const std::string& name, bool passed, json detail) {
  checks.push_back({name, passed});
  detail["record"] = "check";
  detail["check"] = name;
  detail["passed"] = passed;
  records.push_back(std::move(detail));
  if (!passed && exit_code == 0) exit_code = 1;
}

bool Report::ok() const {
  if (exit_code != 0) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json Report::summary() const {
  json checks_j = json::array();
  for (const auto& c : checks) checks_j.push_back({{"name", c.name}, {"passed", c.passed}});
  json s = {{"record", "summary"}, {"schema", kSchema}, {"command", command},
            {"checks", checks_j},  {"ok", ok()},        {"exit_code", exit_code}};
  if (elapsed_ms) s["elapsed_ms"] = *elapsed_ms;
  return s;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& r : records) os << r.dump() << '\n';
  os << summary().dump() << '\n';
  return os.str();
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const DimVector& d) { return d.entries; }

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back(json::array({a.source, a.target, a.label}));
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

json to_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

json to_json(const Representation& m) {
  return {{"field", m.field().to_string()}, {"dims", to_json(m.dims())}, {"maps", to_json(m.maps())}};
}

json to_json(const SubrepPoint& u) { return {{"dims", to_json(u.dims())}, {"bases", to_json(u.bases)}}; }

json to_json(const ProjPoint& x) {
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(to_json(c));
  return {{"point", x.to_string()}, {"coords", coords}};
}

json instance_digest(const EncodedInstance& inst) {
  json eqs = json::array(), ineqs = json::array();
  for (const auto& p : inst.normalized.equations) eqs.push_back(p.to_string());
  for (const auto& p : inst.normalized.inequations) ineqs.push_back(p.to_string());
  return {{"monomial_order", MonomialOrder::kId},
          {"field", inst.field.to_string()},
          {"n", inst.n},
          {"k", inst.k},
          {"degree", inst.degree},
          {"equation_powers", inst.normalized.equation_powers},
          {"inequation_powers", inst.normalized.inequation_powers},
          {"normalized_equations", eqs},
          {"normalized_inequations", ineqs},
          {"dims_v", to_json(inst.v.dims())},
          {"dims_w", to_json(inst.w.dims())}};
}

}  // namespace qgrass::cli
