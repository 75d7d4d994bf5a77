#include "commands.hpp"

#include <qgrass/errors.hpp>
#include <qgrass/filtration.hpp>
#include <qgrass/hom.hpp>
#include <qgrass/semicontinuity.hpp>
#include <qgrass/subcat.hpp>

#include "files.hpp"

namespace qgrass::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultTrials = 200;

struct Loaded {
  InstanceFile file;
  EncodedInstance inst;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
};

void header(const Options& o, Report& r, std::uint64_t cap, std::uint64_t seed) {
  r.add({{"record", "header"}, {"schema", kSchema}, {"command", o.command}, {"input", o.input},
         {"cap", cap}, {"seed", seed}});
}

Loaded load(const Options& o, Report& r) {
  Loaded l{load_instance(o.input, o.field), EncodedInstance{}, kDefaultEnumerationCap, 0, kDefaultTrials};
  l.cap = o.cap.value_or(l.file.enumeration_cap.value_or(kDefaultEnumerationCap));
  l.seed = o.seed.value_or(l.file.seed.value_or(0));
  l.trials = o.trials.value_or(l.file.trials.value_or(kDefaultTrials));
  header(o, r, l.cap, l.seed);
  l.inst = encode_instance(l.file, o.projective);
  json rec = instance_digest(l.inst);
  rec["record"] = "instance";
  r.add(std::move(rec));
  return l;
}

json points_json(const std::vector<ProjPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

json subreps_json(const std::vector<SubrepPoint>& us) {
  json out = json::array();
  for (const auto& u : us) out.push_back(to_json(u));
  return out;
}

// Moves a representation from a file onto the instance quiver (same shape,
// arrow labels ignored).
Representation onto(const Quiver& q, const Representation& m) {
  const Quiver& mq = m.quiver();
  bool same = mq.vertex_count() == q.vertex_count() && mq.arrow_count() == q.arrow_count();
  for (std::size_t a = 0; same && a < q.arrow_count(); ++a) {
    same = mq.arrow(a).source == q.arrow(a).source && mq.arrow(a).target == q.arrow(a).target;
  }
  if (!same) throw PreconditionError("representation file quiver does not match the instance quiver");
  return Representation(q, m.field(), m.dims(), m.maps());
}

SubcatPredicate resolve_pred(const std::string& spec, const EncodedInstance& inst) {
  const std::string prefix = "perp:";
  if (spec.rfind(prefix, 0) != 0) throw UsageError("--pred must be perp:W or perp:<file>#<name>, got " + spec);
  const std::string rest = spec.substr(prefix.size());
  if (rest == "W") return inst.perp_w();
  const auto hash = rest.rfind('#');
  if (hash == std::string::npos || hash == 0 || hash + 1 == rest.size()) {
    throw UsageError("--pred must be perp:W or perp:<file>#<name>, got " + spec);
  }
  const RepFile file = load_rep_file(rest.substr(0, hash), inst.field.to_string());
  return SubcatPredicate::left_perp({onto(inst.quiver, file.get(rest.substr(hash + 1)))}, {0});
}

void bijection_check(const Loaded& l, Report& r) {
  const auto b = verify_bijection(l.inst, l.cap);
  r.check("bijection", b.matched,
          {{"grass_count", b.grass_count},
           {"variety_count", b.variety_count},
           {"undecodable", subreps_json(b.undecodable)},
           {"off_variety", points_json(b.off_variety)},
           {"duplicates", points_json(b.duplicates)},
           {"missing", points_json(b.missing)}});
}

void lemma_checks(const Loaded& l, Report& r) {
  const auto h = verify_lemma_hom(l.inst, l.cap);
  r.check("lemma_hom_vw", h.part_i,
          {{"hom_v_w", h.hom_v_w}, {"hom_w_v", h.hom_w_v}, {"end_v", h.end_v}, {"end_w", h.end_w}});
  if (!h.ran_part_ii) {
    r.add({{"record", "skipped"}, {"check", "lemma_hom_ux"}, {"reason", "point sweep needs a finite field"}});
    return;
  }
  r.check("lemma_hom_ux", h.part_ii,
          {{"table",
            {{"hom_zero_h_nonzero", h.table[0][0]},
             {"hom_zero_h_zero", h.table[0][1]},
             {"hom_nonzero_h_nonzero", h.table[1][0]},
             {"hom_nonzero_h_zero", h.table[1][1]}}},
           {"violations", points_json(h.violations)}});
}

void quasi_checks(const Loaded& l, Report& r) {
  const auto q = verify_quasi_projective(l.inst, l.cap);
  r.check("ambient_in_E", q.ambient_in_e, {{"predicate", l.inst.perp_w().describe()}});
  r.check("quasi_projective", q.matched,
          {{"grass_count", q.grass_count}, {"open_count", q.open_count}, {"mismatches", points_json(q.mismatches)}});
  r.check("quotients_in_E", q.quotient_outside_e.empty(),
          {{"subreps_checked", q.subreps_checked}, {"quotient_outside_e", subreps_json(q.quotient_outside_e)}});
}

void extension_check(const Loaded& l, const SubcatPredicate& pred, Report& r) {
  ExtensionSampleOptions opt;
  opt.trials = l.trials;
  opt.seed = l.seed;
  const auto s = extension_closed_sample(pred, l.inst.quiver, l.inst.field, opt);
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"trial", v.trial},
                          {"sub", to_json(v.sub)},
                          {"quotient", to_json(v.quotient)},
                          {"cocycle", to_json(v.cocycle)},
                          {"middle", to_json(v.middle)}});
  }
  r.check("extension_closed", s.violations.empty(),
          {{"predicate", pred.describe()},
           {"trials", s.trials},
           {"rejected_draws", s.rejected_draws},
           {"violations", violations}});
}

RepFile load_reps(const Options& o, Report& r) {
  header(o, r, o.cap.value_or(kDefaultEnumerationCap), o.seed.value_or(0));
  return load_rep_file(o.input, o.field);
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value;
}

}  // namespace

void cmd_encode(const Options& o, Report& r) {
  const Loaded l = load(o, r);
  r.add({{"record", "encoding"},
         {"quiver", to_json(l.inst.quiver)},
         {"f_arrows", l.inst.f_arrows},
         {"g_arrows", l.inst.g_arrows},
         {"v", to_json(l.inst.v)},
         {"w", to_json(l.inst.w)}});
}

void cmd_verify_bijection(const Options& o, Report& r) { bijection_check(load(o, r), r); }

void cmd_verify_lemma(const Options& o, Report& r) { lemma_checks(load(o, r), r); }

void cmd_verify_quasi(const Options& o, Report& r) { quasi_checks(load(o, r), r); }

void cmd_grass(const Options& o, Report& r) {
  const Loaded l = load(o, r);
  const DimVector e = o.dims ? parse_dims(*o.dims) : l.inst.point_dims();
  std::vector<SubrepPoint> pts;
  json pred_j = nullptr;
  if (o.pred) {
    const auto pred = resolve_pred(*o.pred, l.inst);
    pred_j = pred.describe();
    pts = exact_grassmannian_points(l.inst.v, e, pred, l.cap);
  } else {
    pts = enumerate_subreps(l.inst.v, e, l.cap);
  }
  const bool decode = e == l.inst.point_dims();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    json rec = {{"record", "point"}, {"index", i}, {"subrep", to_json(pts[i])}};
    if (decode) {
      const auto x = subrep_to_point(l.inst, pts[i]);
      rec["decoded"] = x ? to_json(*x) : json(nullptr);
    }
    r.add(std::move(rec));
  }
  r.add({{"record", "grass"}, {"dims", to_json(e)}, {"predicate", pred_j}, {"count", pts.size()}});
}

void cmd_extension_sample(const Options& o, Report& r) {
  const Loaded l = load(o, r);
  extension_check(l, resolve_pred(o.pred.value_or("perp:W"), l.inst), r);
}

void cmd_report(const Options& o, Report& r) {
  const Loaded l = load(o, r);
  lemma_checks(l, r);
  if (!l.inst.field.is_finite()) {
    for (const char* c : {"bijection", "quasi_projective", "extension_closed"}) {
      r.add({{"record", "skipped"}, {"check", c}, {"reason", "exhaustive checks need a finite field"}});
    }
    return;
  }
  bijection_check(l, r);
  quasi_checks(l, r);
  extension_check(l, resolve_pred(o.pred.value_or("perp:W"), l.inst), r);
}

void cmd_hom(const Options& o, Report& r) {
  const RepFile f = load_reps(o, r);
  const auto& m = f.get(need(o.from, "--from"));
  const auto& n = f.get(need(o.to, "--to"));
  const auto basis = hom_basis(m, n);
  json morphisms = json::array();
  for (const auto& phi : basis.morphisms) morphisms.push_back(to_json(phi));
  r.add({{"record", "hom"}, {"from", o.from}, {"to", o.to}, {"dim", basis.dimension()}, {"basis", morphisms}});
}

void cmd_ext(const Options& o, Report& r) {
  const RepFile f = load_reps(o, r);
  const auto& m = f.get(need(o.from, "--from"));
  const auto& n = f.get(need(o.to, "--to"));
  r.add({{"record", "ext"},
         {"from", o.from},
         {"to", o.to},
         {"hom", hom_dim(m, n)},
         {"ext1", ext1_dim(m, n)},
         {"euler", euler_form(f.quiver, m.dims(), n.dims())}});
}

void cmd_filtcheck(const Options& o, Report& r) {
  const RepFile f = load_reps(o, r);
  const auto& x = f.get(need(o.target, "--target"));
  if (o.layers.empty()) throw UsageError("missing --layers");
  std::vector<Representation> layers;
  for (const auto& name : o.layers) layers.push_back(f.get(name));
  const auto res = is_filtered_by(x, layers, o.cap.value_or(kDefaultEnumerationCap));
  json cert = json::array();
  for (const auto& step : res.certificate) {
    cert.push_back({{"layer", o.layers[step.layer]}, {"sub", to_json(step.sub)}});
  }
  r.add({{"record", "filtration"},
         {"target", o.target},
         {"layers", o.layers},
         {"verdict", to_string(res.verdict)},
         {"candidates", res.candidates},
         {"inconclusive_iso", res.inconclusive_iso},
         {"certificate", cert}});
  if (res.verdict == FiltVerdict::Yes) {
    r.check("certificate_replays", check_filtration_certificate(x, layers, res.certificate));
  }
}

void cmd_semicont(const Options& o, Report& r) {
  const RepFile f = load_reps(o, r);
  const auto& m0 = f.get(need(o.base, "--base"));
  const auto& m1 = f.get(need(o.direction, "--direction"));
  const auto& x = f.get(need(o.probe, "--probe"));
  PencilSlot slot;
  if (o.slot == "second") {
    slot = PencilSlot::Second;
  } else if (o.slot == "first") {
    slot = PencilSlot::First;
  } else {
    throw UsageError("--slot must be first or second");
  }
  const auto samples = o.samples.empty() ? default_pencil_samples(m0, x) : o.samples;
  const auto p = pencil_hom_semicontinuity(m0, m1, x, samples, slot);
  json values = json::array();
  for (const auto& s : p.samples) values.push_back({{"t", s.t}, {"hom_dim", s.hom_dim}});
  r.check("semicontinuity", p.holds,
          {{"slot", o.slot},
           {"unknowns", p.unknowns},
           {"at_zero", p.at_zero},
           {"minimum", p.minimum},
           {"samples", values}});
}

}  // namespace qgrass::cli
