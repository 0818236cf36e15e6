#include "hopfjordan/model_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfjordan::io {

namespace {

const json& expect(const json& node, const char* key, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) throw ParseError(path + "/" + key, "missing required field");
  return *it;
}

int expect_int(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw ParseError(path, "expected an integer");
  return node.get<int>();
}

double expect_number(const json& node, const std::string& path) {
  if (!node.is_number()) throw ParseError(path, "expected a number");
  return node.get<double>();
}

Complex complex_from_json(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) {
    throw ParseError(path, "expected a [re, im] pair");
  }
  return {expect_number(node[0], path + "/0"), expect_number(node[1], path + "/1")};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty()) throw ParseError(path, "expected a nonempty array of rows");
  const int n = static_cast<int>(node.size());
  std::vector<Complex> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const json& row = node[static_cast<size_t>(i)];
    const std::string row_path = path + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(row_path, "expected a row of length " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      entries.push_back(
          complex_from_json(row[static_cast<size_t>(j)], row_path + "/" + std::to_string(j)));
    }
  }
  return ComplexMatrix(n, std::move(entries));
}

json group_to_json(const groupcore::FiniteGroup& g) {
  json out;
  out["order"] = g.order();
  out["table"] = g.table();
  out["identity"] = g.identity();
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

groupcore::FiniteGroup group_from_json(const json& node, const std::string& path) {
  const int order = expect_int(expect(node, "order", path), path + "/order");
  const int identity = expect_int(expect(node, "identity", path), path + "/identity");
  const json& table_node = expect(node, "table", path);
  if (!table_node.is_array() || static_cast<int>(table_node.size()) != order) {
    throw ParseError(path + "/table", "expected " + std::to_string(order) + " rows");
  }
  std::vector<std::vector<int>> table;
  for (int i = 0; i < order; ++i) {
    const json& row = table_node[static_cast<size_t>(i)];
    const std::string row_path = path + "/table/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != order) {
      throw ParseError(row_path, "expected a row of length " + std::to_string(order));
    }
    std::vector<int> r;
    for (int j = 0; j < order; ++j) r.push_back(expect_int(row[static_cast<size_t>(j)],
                                                           row_path + "/" + std::to_string(j)));
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (auto it = node.find("labels"); it != node.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError(path + "/labels", "expected an array of strings");
    for (const auto& l : *it) labels.push_back(l.get<std::string>());
  }
  try {
    return groupcore::FiniteGroup::from_table(std::move(table), identity, std::move(labels));
  } catch (const DomainError& err) {
    throw ParseError(path, std::string("invalid group table: ") + err.what());
  }
}

json extension_to_json(const groupcore::CentralExtensionZ& ext) {
  json out;
  out["quotient"] = group_to_json(ext.quotient());
  out["cocycle"] = ext.cocycle();
  out["action_sign"] = ext.action_sign();
  return out;
}

groupcore::CentralExtensionZ extension_from_json(const json& node, const std::string& path) {
  groupcore::FiniteGroup quotient = group_from_json(expect(node, "quotient", path), path + "/quotient");
  const json& cocycle_node = expect(node, "cocycle", path);
  if (!cocycle_node.is_array()) throw ParseError(path + "/cocycle", "expected an array");
  std::vector<std::vector<long long>> cocycle;
  for (size_t i = 0; i < cocycle_node.size(); ++i) {
    std::vector<long long> row;
    for (size_t j = 0; j < cocycle_node[i].size(); ++j) {
      const json& v = cocycle_node[i][j];
      if (!v.is_number_integer()) {
        throw ParseError(path + "/cocycle/" + std::to_string(i) + "/" + std::to_string(j),
                         "expected an integer");
      }
      row.push_back(v.get<long long>());
    }
    cocycle.push_back(std::move(row));
  }
  const json& sign_node = expect(node, "action_sign", path);
  std::vector<int> signs;
  for (size_t i = 0; i < sign_node.size(); ++i) {
    signs.push_back(expect_int(sign_node[i], path + "/action_sign/" + std::to_string(i)));
  }
  try {
    return groupcore::CentralExtensionZ::create(std::move(quotient), std::move(cocycle),
                                                std::move(signs));
  } catch (const DomainError& err) {
    throw ParseError(path, std::string("invalid extension: ") + err.what());
  }
}

ModelSpec parse_model_spec(const json& doc) {
  ModelSpec spec;
  const json& version = expect(doc, "schema_version", "");
  if (!version.is_string()) throw ParseError("/schema_version", "expected a string");
  spec.model.dimension = expect_int(expect(doc, "dimension", ""), "/dimension");
  const json& gens = expect(doc, "generators", "");
  if (!gens.is_array() || gens.empty()) {
    throw ParseError("/generators", "expected a nonempty array of matrices");
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    ComplexMatrix m = matrix_from_json(gens[i], "/generators/" + std::to_string(i));
    if (m.dim() != spec.model.dimension) {
      throw ParseError("/generators/" + std::to_string(i),
                       "matrix dimension does not match /dimension");
    }
    spec.model.generators.push_back(std::move(m));
  }
  spec.model.contraction_index =
      expect_int(expect(doc, "contraction_index", ""), "/contraction_index");
  if (spec.model.contraction_index < 0 ||
      spec.model.contraction_index >= static_cast<int>(spec.model.generators.size())) {
    throw ParseError("/contraction_index", "index outside the generator list");
  }
  if (auto it = doc.find("tolerance"); it != doc.end() && !it->is_null()) {
    spec.has_tolerance_override = true;
    if (auto e = it->find("eigen_cluster_eps"); e != it->end()) {
      spec.tolerance.eigen_cluster_eps = expect_number(*e, "/tolerance/eigen_cluster_eps");
    }
    if (auto e = it->find("residual_eps"); e != it->end()) {
      spec.tolerance.residual_eps = expect_number(*e, "/tolerance/residual_eps");
    }
    try {
      spec.tolerance.validate();
    } catch (const DomainError& err) {
      throw ParseError("/tolerance", err.what());
    }
  }
  if (auto it = doc.find("quotient_cap"); it != doc.end() && !it->is_null()) {
    spec.model.quotient_cap = expect_int(*it, "/quotient_cap");
    if (spec.model.quotient_cap < 1) throw ParseError("/quotient_cap", "must be positive");
  }
  if (spec.model.dimension < 2) throw ParseError("/dimension", "model dimension must be >= 2");
  return spec;
}

namespace {
json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(origin, std::string("malformed JSON: ") + err.what());
  }
}
}  // namespace

std::string read_file(const std::string& file_path) {
  std::ifstream in(file_path, std::ios::binary);
  if (!in) throw ParseError(file_path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ModelSpec parse_model_spec_text(const std::string& text, const std::string& origin) {
  return parse_model_spec(parse_document(text, origin));
}

ModelSpec load_model_spec(const std::string& file_path) {
  return parse_model_spec(parse_document(read_file(file_path), file_path));
}

json model_spec_to_json(const ModelSpec& spec) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dimension"] = spec.model.dimension;
  json gens = json::array();
  for (const ComplexMatrix& m : spec.model.generators) gens.push_back(matrix_to_json(m));
  doc["generators"] = std::move(gens);
  doc["contraction_index"] = spec.model.contraction_index;
  if (spec.has_tolerance_override) {
    doc["tolerance"] = {{"eigen_cluster_eps", spec.tolerance.eigen_cluster_eps},
                        {"residual_eps", spec.tolerance.residual_eps}};
  }
  doc["quotient_cap"] = spec.model.quotient_cap;
  return doc;
}

ComplexMatrix load_matrix_file(const std::string& file_path) {
  const json doc = parse_document(read_file(file_path), file_path);
  (void)expect(doc, "schema_version", "");
  return matrix_from_json(expect(doc, "matrix", ""), "/matrix");
}

namespace {
json certificate_to_json(const hopfpipe::Certificate& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}};
}

hopfpipe::Certificate certificate_from_json(const json& node, const std::string& path) {
  hopfpipe::Certificate c;
  c.name = expect(node, "name", path).get<std::string>();
  c.passed = expect(node, "passed", path).get<bool>();
  c.residual = expect_number(expect(node, "residual", path), path + "/residual");
  c.detail = expect(node, "detail", path).get<std::string>();
  return c;
}
}  // namespace

json report_to_json(const ReportFile& report) {
  json doc;
  doc["schema_version"] = report.schema_version;
  doc["input_digest"] = report.input_digest;
  doc["quotient_order"] = report.report.quotient_order;
  doc["jordan_index"] = report.report.jordan_index;
  doc["witness"] = report.report.witness.members;
  doc["quotient_group"] = group_to_json(report.quotient_group);
  doc["root_matrix"] = matrix_to_json(report.report.root_matrix);
  doc["finite_model_order"] = report.report.finite_model_order;
  doc["theta_exponent"] = report.report.theta_exponent;
  doc["primary_quotient_order"] = report.report.primary_quotient_order;
  doc["certified"] = report.report.certified();
  json certs = json::array();
  for (const auto& c : report.report.certificates) certs.push_back(certificate_to_json(c));
  doc["certificates"] = std::move(certs);
  return doc;
}

ReportFile report_from_json(const json& doc) {
  ReportFile out;
  out.schema_version = expect(doc, "schema_version", "").get<std::string>();
  out.input_digest = expect(doc, "input_digest", "").get<std::string>();
  out.report.quotient_order = expect_int(expect(doc, "quotient_order", ""), "/quotient_order");
  out.report.jordan_index = expect_int(expect(doc, "jordan_index", ""), "/jordan_index");
  out.report.witness.members = expect(doc, "witness", "").get<std::vector<int>>();
  out.quotient_group = group_from_json(expect(doc, "quotient_group", ""), "/quotient_group");
  out.report.root_matrix = matrix_from_json(expect(doc, "root_matrix", ""), "/root_matrix");
  out.report.finite_model_order =
      expect_int(expect(doc, "finite_model_order", ""), "/finite_model_order");
  out.report.theta_exponent = expect(doc, "theta_exponent", "").get<long long>();
  out.report.primary_quotient_order =
      expect(doc, "primary_quotient_order", "").get<long long>();
  const json& certs = expect(doc, "certificates", "");
  for (size_t i = 0; i < certs.size(); ++i) {
    out.report.certificates.push_back(
        certificate_from_json(certs[i], "/certificates/" + std::to_string(i)));
  }
  return out;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace hopfjordan::io
