#include "itop/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace itop {

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

std::vector<std::vector<int>> vertex_lists_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array of vertex lists");
  std::vector<std::vector<int>> lists;
  lists.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& entry = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.empty())
      throw input_error(at + ": expected a nonempty vertex list");
    std::vector<int> verts;
    verts.reserve(entry.size());
    for (const Json& v : entry) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw input_error(at + ": vertex ids must be non-negative integers");
      verts.push_back(v.get<int>());
    }
    lists.push_back(std::move(verts));
  }
  return lists;
}

}  // namespace

SimplicialComplex complex_from_json(const Json& j, const std::string& where) {
  try {
    return SimplicialComplex::closure(vertex_lists_from_json(j, where));
  } catch (const std::invalid_argument& e) {
    throw input_error(where + ": " + e.what());
  }
}

InteractionSpace space_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected an object");
  if (!j.contains("complex")) throw input_error(where + ": missing 'complex'");
  if (!j.contains("parts")) throw input_error(where + ": missing 'parts'");
  InteractionSpace space;
  space.total = complex_from_json(j.at("complex"), where + ".complex");
  const Json& parts = j.at("parts");
  if (!parts.is_array()) throw input_error(where + ".parts: expected an array");
  for (std::size_t i = 0; i < parts.size(); ++i)
    space.parts.push_back(
        complex_from_json(parts[i], where + ".parts[" + std::to_string(i) + "]"));
  if (space.parts.empty()) throw input_error(where + ".parts: at least one part required");
  return space;
}

InteractionSpace space_from_file(const std::string& path) {
  return space_from_json(parse_file(path), path);
}

SimplicialComplex complex_from_file(const std::string& path) {
  Json j = parse_file(path);
  if (!j.is_object() || !j.contains("complex"))
    throw input_error(path + ": missing 'complex'");
  return complex_from_json(j.at("complex"), path + ".complex");
}

InteractionMap map_from_file(const std::string& path) {
  Json j = parse_file(path);
  if (!j.is_object()) throw input_error(path + ": expected an object");
  for (const char* key : {"maps", "source", "target"})
    if (!j.contains(key)) throw input_error(path + ": missing '" + std::string(key) + "'");
  InteractionMap m;
  m.source = space_from_json(j.at("source"), path + ".source");
  m.target = space_from_json(j.at("target"), path + ".target");
  const Json& maps = j.at("maps");
  if (!maps.is_array()) throw input_error(path + ".maps: expected an array of vertex maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Json& vm = maps[i];
    const std::string at = path + ".maps[" + std::to_string(i) + "]";
    if (!vm.is_object()) throw input_error(at + ": expected an object");
    std::unordered_map<int, int> table;
    for (auto it = vm.begin(); it != vm.end(); ++it) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(it.key(), &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != it.key().size() || v < 0)
        throw input_error(at + ": key '" + it.key() + "' is not a vertex id");
      if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
        throw input_error(at + ": image of vertex " + it.key() +
                          " must be a non-negative integer");
      if (!table.emplace(v, it.value().get<int>()).second)
        throw input_error(at + ": duplicate vertex " + it.key());
    }
    m.vertex_maps.push_back(std::move(table));
  }
  return m;
}

LabeledPointCloud cloud_from_csv(std::istream& in, const std::string& name) {
  LabeledPointCloud cloud;
  std::string line;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string at = name + ":" + std::to_string(lineno);
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 2)
      throw input_error(at + ": expected coordinates followed by a label field");
    if (dim == 0)
      dim = fields.size() - 1;
    else if (fields.size() - 1 != dim)
      throw input_error(at + ": expected " + std::to_string(dim) + " coordinates");
    std::vector<Rat> coords;
    coords.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      try {
        coords.push_back(rat_from_decimal(fields[i]));
      } catch (const std::invalid_argument& e) {
        throw input_error(at + ": " + e.what());
      }
    }
    std::vector<int> labels;
    std::stringstream ls(fields.back());
    std::string token;
    while (std::getline(ls, token, ';')) {
      std::size_t pos = 0;
      int label = 0;
      try {
        label = std::stoi(token, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != token.size() || label < 0)
        throw input_error(at + ": label '" + token + "' is not a non-negative integer");
      labels.push_back(label);
    }
    if (labels.empty()) throw input_error(at + ": empty label field");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    cloud.points.push_back(std::move(coords));
    cloud.labels.push_back(std::move(labels));
  }
  if (cloud.points.empty()) throw input_error(name + ": no data rows");
  return cloud;
}

LabeledPointCloud cloud_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  return cloud_from_csv(in, path);
}

namespace {

OutJson issues_to_json(const std::vector<ValidationIssue>& issues) {
  OutJson arr = OutJson::array();
  for (const auto& issue : issues) {
    OutJson o;
    o["kind"] = issue.kind;
    o["detail"] = issue.detail;
    arr.push_back(std::move(o));
  }
  return arr;
}

long long int_to_i64(const Int& v, const char* what) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw std::overflow_error(std::string(what) + " does not fit a 64-bit integer");
  return v.convert_to<long long>();
}

}  // namespace

void write_field(OutJson& target, const CoefficientRing& field) {
  switch (field.kind) {
    case CoefficientRing::Kind::rationals:
      target["field"] = "q";
      break;
    case CoefficientRing::Kind::prime_field:
      target["field"] = "gfp";
      target["prime"] = field.prime;
      break;
    case CoefficientRing::Kind::integers:
      target["field"] = "z";
      break;
  }
}

OutJson to_json(const ValidationReport& report) {
  OutJson o;
  o["valid"] = report.valid();
  o["violations"] = issues_to_json(report.violations);
  o["warnings"] = issues_to_json(report.warnings);
  return o;
}

OutJson to_json(const HomologySummary& summary) {
  OutJson o;
  write_field(o, summary.ring);
  o["p_max"] = summary.p_max;
  o["betti"] = summary.betti;
  OutJson torsion = OutJson::array();
  for (const auto& factors : summary.torsion) {
    OutJson inner = OutJson::array();
    for (const Int& f : factors) inner.push_back(f.str());
    torsion.push_back(std::move(inner));
  }
  o["torsion"] = std::move(torsion);
  o["euler"] = int_to_i64(summary.euler, "euler characteristic");
  return o;
}

OutJson to_json(const ExactnessReport& report) {
  OutJson o;
  o["exact"] = report.all_exact();
  o["p_max"] = report.p_max;
  OutJson nodes = OutJson::array();
  for (const auto& n : report.nodes) {
    OutJson e;
    e["degree"] = n.degree;
    e["node"] = n.node;
    e["incoming_rank"] = n.incoming_rank;
    e["kernel_dim"] = n.kernel_dim;
    e["exact"] = n.exact;
    nodes.push_back(std::move(e));
  }
  o["nodes"] = std::move(nodes);
  return o;
}

OutJson induced_map_to_json(const SparseMatrix& matrix, int degree,
                            const CoefficientRing& field) {
  OutJson o;
  o["degree"] = degree;
  write_field(o, field);
  o["source_dim"] = matrix.cols();
  o["target_dim"] = matrix.rows();
  o["rank"] = rank(matrix, field);
  OutJson rows = OutJson::array();
  for (int i = 0; i < matrix.rows(); ++i) {
    OutJson row = OutJson::array();
    for (int j = 0; j < matrix.cols(); ++j) row.push_back(rat_to_string(matrix.at(i, j)));
    rows.push_back(std::move(row));
  }
  o["matrix"] = std::move(rows);
  return o;
}

OutJson betti_curve_to_json(const std::vector<BettiCurveRow>& rows, const ScaleSweep& sweep,
                            int max_dim, const CoefficientRing& field) {
  OutJson o;
  o["mode"] = sweep.mode == CoveringMode::by_label ? "by_label" : "self";
  o["parts"] = sweep.mode == CoveringMode::by_label ? OutJson() : OutJson(sweep.self_parts);
  if (o["parts"].is_null()) o.erase("parts");
  o["max_dim"] = max_dim;
  o["p_max"] = sweep.p_max;
  write_field(o, field);
  OutJson arr = OutJson::array();
  for (const auto& row : rows) {
    OutJson e;
    e["scale"] = row.scale;
    e["degree"] = row.degree;
    e["betti"] = row.betti;
    arr.push_back(std::move(e));
  }
  o["rows"] = std::move(arr);
  return o;
}

std::string betti_curve_to_tsv(const std::vector<BettiCurveRow>& rows) {
  std::string out = "scale\tdegree\tbetti\n";
  for (const auto& row : rows)
    out += row.scale + "\t" + std::to_string(row.degree) + "\t" + std::to_string(row.betti) + "\n";
  return out;
}

}  // namespace itop
