#include "files.hpp"

#include <fstream>
#include <sstream>

#include <qgrass/errors.hpp>

namespace qgrass::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw FormatError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw FormatError(where + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw FormatError(where + " must be a non-negative integer");
  return v.get<std::size_t>();
}

FieldSpec field_of(const json& doc, const std::optional<std::string>& field_override) {
  if (field_override) return FieldSpec::parse(*field_override);
  const json& f = require(doc, "field", "file");
  if (!f.is_string()) throw FormatError("field must be a string such as \"Q\" or \"Fp:3\"");
  return FieldSpec::parse(f.get<std::string>());
}

}  // namespace

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

InstanceFile parse_instance(const json& doc, const std::optional<std::string>& field_override) {
  InstanceFile f;
  f.field = field_of(doc, field_override);
  f.n = count(require(doc, "n", "instance"), "n");
  f.equations = string_list(require(doc, "equations", "instance"), "equations");
  if (doc.contains("inequations")) f.inequations = string_list(doc.at("inequations"), "inequations");
  if (doc.contains("caps")) {
    const json& caps = doc.at("caps");
    if (!caps.is_object()) throw FormatError("caps must be an object");
    if (caps.contains("enumeration")) f.enumeration_cap = count(caps.at("enumeration"), "caps.enumeration");
    if (caps.contains("trials")) f.trials = count(caps.at("trials"), "caps.trials");
  }
  if (doc.contains("seed")) f.seed = count(doc.at("seed"), "seed");
  return f;
}

InstanceFile load_instance(const std::string& path, const std::optional<std::string>& field_override) {
  return parse_instance(read_json(path), field_override);
}

EncodedInstance encode_instance(const InstanceFile& file, bool projective_mode) {
  if (file.equations.empty()) {
    throw PreconditionError("instance has no equations; the construction needs at least one f_i");
  }
  if (file.inequations.empty() && !projective_mode) {
    throw PreconditionError("instance has no inequations; pass --projective to substitute T_0^l, ..., T_n^l");
  }
  std::vector<Polynomial> fs, hs;
  for (const auto& t : file.equations) fs.push_back(parse_poly(t, file.n, file.field));
  for (const auto& t : file.inequations) hs.push_back(parse_poly(t, file.n, file.field));
  return encode(fs, hs, EncodeOptions{projective_mode});
}

Scalar parse_scalar(const json& v, const FieldSpec& field) {
  if (v.is_number_integer()) return Scalar(field, v.get<long>());
  if (!v.is_string()) throw FormatError("matrix entry must be an integer or a string \"p/q\"");
  const std::string text = v.get<std::string>();
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw FormatError("bad matrix entry \"" + text + "\"");
  if (q.get_den() == 0) throw FormatError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return Scalar(field, q.get_num(), q.get_den());
}

const Representation& RepFile::get(const std::string& name) const {
  const auto it = reps.find(name);
  if (it == reps.end()) throw FormatError("no representation named \"" + name + "\"");
  return it->second;
}

RepFile parse_rep_file(const json& doc, const std::optional<std::string>& field_override) {
  const FieldSpec field = field_of(doc, field_override);
  const json& qj = require(doc, "quiver", "representation file");
  const std::size_t vertices = count(require(qj, "vertices", "quiver"), "quiver.vertices");
  std::vector<Arrow> arrows;
  for (const auto& a : require(qj, "arrows", "quiver")) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3) throw FormatError("arrow must be [source, target, label?]");
    std::string label = a.size() == 3 ? a[2].get<std::string>() : "a" + std::to_string(arrows.size());
    arrows.push_back({count(a[0], "arrow source"), count(a[1], "arrow target"), std::move(label)});
  }
  RepFile file{field, Quiver(vertices, arrows), {}};

  const json& reps = require(doc, "representations", "representation file");
  if (!reps.is_object()) throw FormatError("representations must be an object keyed by name");
  for (const auto& [name, rj] : reps.items()) {
    const std::string where = "representation " + name;
    DimVector dims;
    for (const auto& d : require(rj, "dims", where)) dims.entries.push_back(count(d, where + " dims"));
    if (dims.size() != vertices) throw FormatError(where + ": dims length differs from the vertex count");
    const json& mj = require(rj, "maps", where);
    if (!mj.is_array() || mj.size() != arrows.size()) throw FormatError(where + ": need one matrix per arrow");
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const std::size_t rows = dims[arrows[k].target], cols = dims[arrows[k].source];
      Matrix m(field, rows, cols);
      const json& rows_j = mj[k];
      if (!rows_j.is_array() || rows_j.size() != rows) {
        throw FormatError(where + ": matrix of arrow " + std::to_string(k) + " must have " + std::to_string(rows) +
                          " rows");
      }
      for (std::size_t r = 0; r < rows; ++r) {
        if (!rows_j[r].is_array() || rows_j[r].size() != cols) {
          throw FormatError(where + ": matrix of arrow " + std::to_string(k) + " must have " +
                            std::to_string(cols) + " columns");
        }
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_scalar(rows_j[r][c], field));
      }
      maps.push_back(std::move(m));
    }
    file.reps.emplace(name, Representation(file.quiver, field, dims, std::move(maps)));
  }
  return file;
}

RepFile load_rep_file(const std::string& path, const std::optional<std::string>& field_override) {
  return parse_rep_file(read_json(path), field_override);
}

DimVector parse_dims(const std::string& text) {
  DimVector d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 0) throw FormatError("bad dimension vector \"" + text + "\"");
    d.entries.push_back(static_cast<std::size_t>(v));
  }
  if (d.entries.empty()) throw FormatError("empty dimension vector");
  return d;
}

}  // namespace qgrass::cli
