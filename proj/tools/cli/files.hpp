#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <qgrass/encoder.hpp>
#include <qgrass/representation.hpp>

namespace qgrass::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed JSON with the wrong shape (missing key, bad entry).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance file (JSON):
//   {"field": "Fp:3", "n": 2, "equations": ["T0*T2 - T1^2"],
//    "inequations": ["T0"], "caps": {"enumeration": 10000000, "trials": 200},
//    "seed": 0}
struct InstanceFile {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<std::string> equations;
  std::vector<std::string> inequations;
  std::optional<std::uint64_t> enumeration_cap;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
};

InstanceFile parse_instance(const nlohmann::json& doc, const std::optional<std::string>& field_override);
InstanceFile load_instance(const std::string& path, const std::optional<std::string>& field_override);
EncodedInstance encode_instance(const InstanceFile& file, bool projective_mode);

// Representation file (JSON):
//   {"field": "Q",
//    "quiver": {"vertices": 2, "arrows": [[0, 1, "a"], [0, 1, "b"]]},
//    "representations": {"M": {"dims": [1, 1], "maps": [[[1]], [["1/2"]]]}}}
// Entries are integers or strings "p/q".
struct RepFile {
  FieldSpec field;
  Quiver quiver;
  std::map<std::string, Representation> reps;

  const Representation& get(const std::string& name) const;
};

RepFile parse_rep_file(const nlohmann::json& doc, const std::optional<std::string>& field_override);
RepFile load_rep_file(const std::string& path, const std::optional<std::string>& field_override);

nlohmann::json read_json(const std::string& path);
Scalar parse_scalar(const nlohmann::json& v, const FieldSpec& field);

// "0,1,1" -> DimVector.
DimVector parse_dims(const std::string& text);

}  // namespace qgrass::cli
