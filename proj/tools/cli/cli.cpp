#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include <qgrass/errors.hpp>

#include "commands.hpp"
#include "files.hpp"

namespace qgrass::cli {

using nlohmann::json;

namespace {

using Handler = std::function<void(const Options&, Report&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"encode", cmd_encode},
      {"verify-bijection", cmd_verify_bijection},
      {"verify-lemma", cmd_verify_lemma},
      {"verify-quasi", cmd_verify_quasi},
      {"grass", cmd_grass},
      {"hom", cmd_hom},
      {"ext", cmd_ext},
      {"filtcheck", cmd_filtcheck},
      {"extension-sample", cmd_extension_sample},
      {"semicont", cmd_semicont},
      {"report", cmd_report},
  };
  return table;
}

void fail(Report& r, int code, const char* kind, const std::string& message, json extra = json::object()) {
  extra["record"] = "error";
  extra["kind"] = kind;
  extra["message"] = message;
  r.add(std::move(extra));
  r.exit_code = code;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const Options& options) {
  Report r;
  r.command = options.command;
  const auto it = handlers().find(options.command);
  if (it == handlers().end()) {
    fail(r, kExitUsage, "usage", "unknown command " + options.command);
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(options, r);
  } catch (const UsageError& e) {
    fail(r, kExitUsage, "usage", e.what());
  } catch (const ParseError& e) {
    fail(r, kExitParse, "parse", e.what(), {{"position", e.position()}});
  } catch (const FormatError& e) {
    fail(r, kExitParse, "format", e.what());
  } catch (const json::exception& e) {
    fail(r, kExitParse, "json", e.what());
  } catch (const CapExceeded& e) {
    fail(r, kExitCap, "cap", e.what());
  } catch (const IoError& e) {
    fail(r, kExitIo, "io", e.what());
  } catch (const InternalInconsistency& e) {
    fail(r, kExitInternal, "internal", e.what());
  } catch (const Error& e) {
    // Precondition, field and dimension mismatches, sampler starvation.
    fail(r, kExitPrecondition, "precondition", e.what());
  } catch (const std::exception& e) {
    fail(r, kExitInternal, "internal", e.what());
  }
  if (options.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver Grassmannians of projective varieties: encoding and exhaustive checks"};
  app.set_version_flag("--version", "qgrass 0.1.0");
  Options o;
  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", o.command, "One of: " + commands)->required()->check(CLI::IsMember(command_names()));
  app.add_option("input", o.input, "Instance file, or representation file for hom/ext/filtcheck/semicont")
      ->required();
  app.add_option("--field", o.field, "Override the field: Q or Fp:<p>");
  app.add_option("--seed", o.seed, "Sampling seed (default 0)");
  app.add_option("--cap", o.cap, "Enumeration cap (default 10000000)");
  app.add_option("--trials", o.trials, "Extension-sampling trials (default 200)");
  app.add_option("--pred", o.pred, "Subcategory: perp:W or perp:<file>#<name>");
  app.add_option("--dims", o.dims, "Dimension vector for grass, e.g. 0,1,1");
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_flag("--timing", o.timing, "Add elapsed time to the summary");
  app.add_flag("--projective", o.projective, "Allow an empty inequation list (substitutes T_j^l)");
  app.add_option("--from", o.from, "hom/ext: source representation name");
  app.add_option("--to", o.to, "hom/ext: target representation name");
  app.add_option("--target", o.target, "filtcheck: representation to filter");
  app.add_option("--layers", o.layers, "filtcheck: layer names")->delimiter(',');
  app.add_option("--base", o.base, "semicont: M0");
  app.add_option("--direction", o.direction, "semicont: M1, the pencil is M0 + t*M1");
  app.add_option("--probe", o.probe, "semicont: the fixed argument X");
  app.add_option("--slot", o.slot, "semicont: which Hom argument varies (first|second)");
  app.add_option("--samples", o.samples, "semicont: distinct nonzero integers t")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qgrass: " << e.what() << '\n';
    return kExitUsage;
  }

  const Report report = run(o);
  const std::string text = report.text();
  if (o.out) {
    std::ofstream file(*o.out);
    if (!file || !(file << text)) {
      err << "qgrass: cannot write " << *o.out << '\n';
      return kExitIo;
    }
  } else {
    out << text;
  }
  for (const auto& rec : report.records) {
    if (rec.value("record", "") == "error") err << "qgrass: " << rec.value("message", "") << '\n';
  }
  return report.exit_code;
}

}  // namespace qgrass::cli
