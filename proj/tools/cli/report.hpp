#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <qgrass/encoder.hpp>
#include <qgrass/representation.hpp>
#include <qgrass/subrep.hpp>

namespace qgrass::cli {

inline constexpr const char* kSchema = "qgrass-report/1";

struct CheckResult {
  std::string name;
  bool passed = false;
};

// Line-delimited records followed by one summary object.
struct Report {
  std::string command;
  std::vector<nlohmann::json> records;
  std::vector<CheckResult> checks;
  int exit_code = 0;
  std::optional<double> elapsed_ms;

  void add(nlohmann::json record) { records.push_back(std::move(record)); }
  // Records a check and its detail record; a failing check sets exit code 1.
  void check(const std::string& name, bool passed, nlohmann::json detail = nlohmann::json::object());
  bool ok() const;
  nlohmann::json summary() const;
  std::string text() const;  // every record and the summary, one per line
};

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const DimVector& d);
nlohmann::json to_json(const Quiver& q);
nlohmann::json to_json(const Representation& m);
nlohmann::json to_json(const SubrepPoint& u);
nlohmann::json to_json(const ProjPoint& x);
nlohmann::json to_json(const std::vector<Matrix>& ms);
nlohmann::json instance_digest(const EncodedInstance& inst);

}  // namespace qgrass::cli
