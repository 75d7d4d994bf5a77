#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using namespace qgrass::cli;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  std::vector<json> records;

  const json& summary() const { return records.back(); }
  const json* find(const std::string& record, const std::string& check = "") const {
    for (const auto& r : records)
      if (r.value("record", "") == record && (check.empty() || r.value("check", "") == check)) return &r;
    return nullptr;
  }
};

std::string data(const std::string& name) { return std::string(QGRASS_DATA_DIR) + "/" + name; }

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qgrass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) r.records.push_back(json::parse(line));
  return r;
}

}  // namespace

TEST_CASE("verify-bijection on the conic") {
  const Run r = cli({"verify-bijection", data("conic_f3.json")});
  CHECK(r.code == kExitOk);
  REQUIRE(r.find("check", "bijection"));
  CHECK(r.find("check", "bijection")->at("grass_count") == 4);
  CHECK(r.find("check", "bijection")->at("variety_count") == 4);
  CHECK(r.summary().at("ok") == true);
  CHECK(r.summary().at("schema") == kSchema);
  CHECK(r.records.front().at("record") == "header");
  const json* inst = r.find("instance");
  REQUIRE(inst);
  CHECK(inst->at("monomial_order") == "desc-lex");
  CHECK(inst->at("dims_v") == json::array({1, 6, 3}));

  const Run r5 = cli({"verify-bijection", data("conic_f5.json")});
  CHECK(r5.code == kExitOk);
  CHECK(r5.find("check", "bijection")->at("grass_count") == 6);
  const Run over = cli({"verify-bijection", data("conic_f3.json"), "--field", "Fp:5"});
  CHECK(over.find("check", "bijection")->at("grass_count") == 6);
  const Run quadric = cli({"verify-bijection", data("quadric_f2.json")});
  CHECK(quadric.code == kExitOk);
  CHECK(quadric.find("check", "bijection")->at("grass_count") == 9);
  const Run cubic = cli({"verify-bijection", data("twisted_cubic_f3.json")});
  CHECK(cubic.code == kExitOk);
  CHECK(cubic.find("check", "bijection")->at("grass_count") == 4);
}

TEST_CASE("verify-lemma and verify-quasi") {
  const Run l = cli({"verify-lemma", data("conic_f3.json")});
  CHECK(l.code == kExitOk);
  const json* table = l.find("check", "lemma_hom_ux");
  REQUIRE(table);
  CHECK(table->at("table").at("hom_zero_h_nonzero") == 3);
  CHECK(table->at("table").at("hom_nonzero_h_zero") == 1);
  const Run lq = cli({"verify-lemma", data("conic_f3.json"), "--field", "Q"});
  CHECK(lq.code == kExitOk);
  CHECK(lq.find("skipped"));

  const Run q = cli({"verify-quasi", data("conic_f3.json")});
  CHECK(q.code == kExitOk);
  CHECK(q.find("check", "quasi_projective")->at("grass_count") == 3);
  const Run all = cli({"verify-quasi", data("conic_all_coords_f3.json")});
  CHECK(all.find("check", "quasi_projective")->at("grass_count") == 4);
}

TEST_CASE("grass") {
  Run r = cli({"grass", data("conic_f3.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.find("grass")->at("count") == 4);
  CHECK(r.find("point")->at("decoded").at("point").is_string());
  r = cli({"grass", data("conic_f3.json"), "--pred", "perp:W"});
  CHECK(r.find("grass")->at("count") == 3);
  r = cli({"grass", data("conic_f3.json"), "--pred", "perp:" + data("encoder_shape_k1_n2.json") + "#S1"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("grass")->at("count") == 4);
  r = cli({"grass", data("conic_f3.json"), "--dims", "0,0,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("grass")->at("count") == 13);
  CHECK_FALSE(r.find("point")->contains("decoded"));
  CHECK(cli({"grass", data("conic_f3.json"), "--pred", "left:W"}).code == kExitUsage);
  CHECK(cli({"grass", data("conic_f3.json"), "--dims", "0,x,1"}).code == kExitParse);
}

TEST_CASE("extension-sample and report") {
  const Run e = cli({"extension-sample", data("conic_f3.json"), "--trials", "20", "--seed", "5"});
  CHECK(e.code == kExitOk);
  CHECK(e.find("check", "extension_closed")->at("trials") == 20);
  const Run rep = cli({"report", data("conic_f3.json"), "--trials", "20"});
  CHECK(rep.code == kExitOk);
  CHECK(rep.summary().at("checks").size() == 7);
  const Run repq = cli({"report", data("conic_f3.json"), "--field", "Q"});
  CHECK(repq.code == kExitOk);
}

TEST_CASE("representation-file commands") {
  Run r = cli({"hom", data("kronecker.json"), "--from", "B", "--to", "B"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("hom")->at("dim") == 1);
  r = cli({"hom", data("kronecker.json"), "--from", "B", "--to", "B_other"});
  CHECK(r.find("hom")->at("dim") == 0);
  r = cli({"ext", data("kronecker.json"), "--from", "S_source", "--to", "S_sink"});
  CHECK(r.find("ext")->at("ext1") == 2);
  CHECK(r.find("ext")->at("euler") == -2);
  r = cli({"filtcheck", data("kronecker.json"), "--field", "Fp:3", "--target", "B", "--layers", "S_source"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("filtration")->at("verdict") == "no");
  r = cli({"filtcheck", data("kronecker.json"), "--field", "Fp:3", "--target", "B", "--layers", "S_source,S_sink"});
  CHECK(r.find("filtration")->at("verdict") == "yes");
  CHECK(r.find("check", "certificate_replays")->at("passed") == true);
  r = cli({"semicont", data("kronecker.json"), "--base", "B", "--direction", "B_other", "--probe", "B"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("check", "semicontinuity")->at("at_zero") == 1);
  CHECK(r.find("check", "semicontinuity")->at("minimum") == 0);
  r = cli({"semicont", data("kronecker.json"), "--base", "B", "--direction", "B_other", "--probe", "B",
           "--samples", "1,1,2"});
  CHECK(r.code == kExitPrecondition);
}

TEST_CASE("error exit codes") {
  Run r = cli({"verify-bijection", data("bad_poly.json")});
  CHECK(r.code == kExitParse);
  REQUIRE(r.find("error"));
  CHECK(r.find("error")->at("position") == 11);  // the second caret
  CHECK(r.summary().at("ok") == false);

  r = cli({"verify-quasi", data("guard_violation.json")});
  CHECK(r.code == kExitPrecondition);
  CHECK(r.find("error")->at("message").get<std::string>().find("scalar multiple") != std::string::npos);

  r = cli({"verify-bijection", data("conic_projective_f3.json")});
  CHECK(r.code == kExitPrecondition);
  r = cli({"verify-bijection", data("conic_projective_f3.json"), "--projective"});
  CHECK(r.code == kExitOk);
  CHECK(r.find("check", "bijection")->at("grass_count") == 4);

  CHECK(cli({"verify-bijection", data("conic_f5.json"), "--cap", "10"}).code == kExitCap);
  CHECK(cli({"verify-bijection", data("no_such_file.json")}).code == kExitIo);
  CHECK(cli({"frobnicate", data("conic_f3.json")}).code == kExitUsage);
  CHECK(cli({"hom", data("kronecker.json"), "--to", "B"}).code == kExitUsage);
  CHECK(cli({"hom", data("kronecker.json"), "--from", "nope", "--to", "B"}).code == kExitParse);
  CHECK(cli({"verify-bijection", data("conic_f3.json"), "--field", "Fp:4"}).code == kExitPrecondition);
  CHECK(cli({"verify-bijection", data("conic_f3.json"), "--field", "Q"}).code == kExitPrecondition);
  CHECK(cli({"filtcheck", data("kronecker.json"), "--field", "Fp:2", "--target", "B", "--layers", "B"}).code ==
        kExitPrecondition);  // 1/2 has no meaning in characteristic 2
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args = {"extension-sample", data("conic_f3.json"), "--trials", "30", "--seed", "9"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.summary().contains("elapsed_ms"));
  std::vector<std::string> timed = args;
  timed.push_back("--timing");
  CHECK(cli(timed).summary().contains("elapsed_ms"));
}

TEST_CASE("--out and the installed binary") {
  const auto dir = std::filesystem::temp_directory_path() / "qgrass_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "report.jsonl").string();
  const Run r = cli({"verify-quasi", data("conic_f5.json"), "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(json::parse(first).at("record") == "header");

  const std::string bin = QGRASS_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("verify-bijection " + data("conic_f3.json")) == 0);
  CHECK(status("verify-bijection " + data("bad_poly.json")) == kExitParse);
  CHECK(status("--bogus") == kExitUsage);
  CHECK(status("--help") == 0);
}
