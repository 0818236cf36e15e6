#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hopfjordan/model_io.hpp"
#include "hopfjordan/pipeline.hpp"
#include "hopfjordan/standard_groups.hpp"

using namespace hopfjordan;
using namespace hopfjordan::groupcore;

namespace {

namespace fs = std::filesystem;

std::string corpus(const std::string& name) {
  return std::string(HOPFJORDAN_CORPUS_DIR) + "/" + name;
}

struct CliResult {
  int exit_code;
  std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(HOPFJORDAN_CLI_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("matrix json round-trip") {
  const ComplexMatrix m(2, {Complex(1.0, -2.0), Complex(0.25, 0.0), Complex(0.0, 3.0),
                            Complex(-1.5, 1e-17)});
  const io::json doc = io::matrix_to_json(m);
  const ComplexMatrix back = io::matrix_from_json(doc, "/matrix");
  CHECK(max_norm_diff(m, back) == 0.0);
}

TEST_CASE("group and extension json round-trips") {
  const FiniteGroup q8 = make_q8();
  const FiniteGroup q8_back = io::group_from_json(io::group_to_json(q8), "");
  CHECK(q8_back.order() == q8.order());
  CHECK(q8_back.table() == q8.table());
  CHECK(q8_back.labels() == q8.labels());

  const CentralExtensionZ ext = CentralExtensionZ::central(make_cyclic(4), carry_cocycle(4));
  const CentralExtensionZ back = io::extension_from_json(io::extension_to_json(ext), "");
  CHECK(back.quotient().table() == ext.quotient().table());
  CHECK(back.cocycle() == ext.cocycle());
  CHECK(back.action_sign() == ext.action_sign());
}

TEST_CASE("model spec parses the shipped corpus") {
  for (const char* name : {"trivial.json", "c4.json", "q8.json", "s3rep.json", "bd16.json",
                           "rootext.json"}) {
    const io::ModelSpec spec = io::load_model_spec(corpus(name));
    CHECK(spec.model.dimension == 2);
    CHECK(spec.model.quotient_cap == hopfpipe::LinearHopfModel::kDefaultQuotientCap);
    CHECK_NOTHROW(hopfpipe::require_valid(spec.model, spec.tolerance));
  }
}

TEST_CASE("parse errors carry json-path locations") {
  // malformed JSON
  CHECK_THROWS_AS((void)io::parse_model_spec_text("{ not json", "input"), ParseError);

  // missing field
  try {
    (void)io::parse_model_spec_text(R"({"schema_version":"1.0","dimension":2})", "input");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "/generators");
  }

  // broken complex pair deep inside a generator
  const std::string bad_entry = R"({
    "schema_version": "1.0", "dimension": 2, "contraction_index": 0,
    "generators": [[[[0.5,0],[0,0]],[[0,0],"oops"]]]
  })";
  try {
    (void)io::parse_model_spec_text(bad_entry, "input");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "/generators/0/1/1");
  }

  // contraction index out of range
  const std::string bad_index = R"({
    "schema_version": "1.0", "dimension": 2, "contraction_index": 3,
    "generators": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]
  })";
  try {
    (void)io::parse_model_spec_text(bad_index, "input");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "/contraction_index");
  }
}

TEST_CASE("report file round-trips losslessly") {
  const io::ModelSpec spec = io::load_model_spec(corpus("q8.json"));
  const hopfpipe::JordanReport report =
      hopfpipe::aut_jordan_index(spec.model, spec.tolerance);
  io::ReportFile file;
  file.input_digest = io::content_digest(io::read_file(corpus("q8.json")));
  file.report = report;
  file.quotient_group = hopfpipe::build_extension_model(spec.model, spec.tolerance)
                            .extension.quotient();
  const io::json doc = io::report_to_json(file);
  const io::ReportFile back = io::report_from_json(doc);
  CHECK(io::report_to_json(back) == doc);
  CHECK(back.report.jordan_index == report.jordan_index);
  CHECK(back.report.certificates.size() == report.certificates.size());
  CHECK(max_norm_diff(back.report.root_matrix, report.root_matrix) == 0.0);
}

TEST_CASE("content digest is stable") {
  CHECK(io::content_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(io::content_digest("abc") == "fnv1a64:e71fa2190541574b");
  CHECK(io::content_digest("abd") != io::content_digest("abc"));
}

TEST_CASE("cli validate: pass, domain failure, parse failure") {
  CHECK(run_cli("validate " + corpus("trivial.json")).exit_code == 0);

  const auto bad_model = temp_file("hj_bad_model.json", R"({
    "schema_version": "1.0", "dimension": 2, "contraction_index": 0,
    "generators": [[[[0.5,0],[0,0]],[[0,0],[2.0,0]]]]
  })");
  const CliResult expanding = run_cli("validate " + bad_model.string());
  CHECK(expanding.exit_code == 1);
  CHECK(expanding.output.find("model.contraction_spectrum") != std::string::npos);

  const auto malformed = temp_file("hj_malformed.json", "{ nope");
  CHECK(run_cli("validate " + malformed.string()).exit_code == 2);
}

TEST_CASE("cli jordan: summary lines match the corpus regression values") {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"trivial.json", "order=1 jordan_index=1 certified=true"},
      {"c4.json", "order=4 jordan_index=1 certified=true"},
      {"q8.json", "order=8 jordan_index=2 certified=true"},
      {"s3rep.json", "order=6 jordan_index=2 certified=true"},
      {"bd16.json", "order=16 jordan_index=2 certified=true"},
      {"rootext.json", "order=4 jordan_index=1 certified=true"},
  };
  for (const auto& [name, line] : expected) {
    const CliResult result = run_cli("jordan " + corpus(name));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find(line) != std::string::npos);
  }
}

TEST_CASE("cli jordan: report files are byte-identical across runs") {
  const fs::path out1 = fs::temp_directory_path() / "hj_report1.json";
  const fs::path out2 = fs::temp_directory_path() / "hj_report2.json";
  for (const char* name : {"q8.json", "rootext.json"}) {
    CHECK(run_cli("jordan " + corpus(name) + " --out " + out1.string()).exit_code == 0);
    CHECK(run_cli("jordan " + corpus(name) + " --out " + out2.string()).exit_code == 0);
    CHECK(io::read_file(out1.string()) == io::read_file(out2.string()));
    CHECK(!io::read_file(out1.string()).empty());
  }
}

TEST_CASE("cli jordan: json format emits a parseable certified report") {
  const CliResult result = run_cli("jordan " + corpus("c4.json") + " --format json");
  REQUIRE(result.exit_code == 0);
  // stdout = report JSON followed by the summary line; strip the last line
  const auto last_newline = result.output.rfind("order=");
  REQUIRE(last_newline != std::string::npos);
  const io::json doc = io::json::parse(result.output.substr(0, last_newline));
  const io::ReportFile report = io::report_from_json(doc);
  CHECK(report.report.quotient_order == 4);
  CHECK(report.report.jordan_index == 1);
  CHECK(doc["certified"].get<bool>());
}

TEST_CASE("cli root: diagonal example, frozen jordan-block root, singular input") {
  const auto diag_file = temp_file("hj_diag.json", R"({
    "schema_version": "1.0",
    "matrix": [[[4,0],[0,0]],[[0,0],[9,0]]]
  })");
  const CliResult diag = run_cli("root " + diag_file.string() + " 2 --format json");
  CHECK(diag.exit_code == 0);
  const io::json doc = io::json::parse(diag.output);
  const ComplexMatrix root = io::matrix_from_json(doc["root"], "/root");
  CHECK(approx_equal(root, ComplexMatrix::diagonal({2.0, 3.0}), 1e-10));
  CHECK(doc["residual"].get<double>() < 1e-10);

  const auto jordan_file = temp_file("hj_jordan.json", R"({
    "schema_version": "1.0",
    "matrix": [[[4,0],[1,0]],[[0,0],[4,0]]]
  })");
  const CliResult jb = run_cli("root " + jordan_file.string() + " 2 --format json");
  CHECK(jb.exit_code == 0);
  const ComplexMatrix jb_root =
      io::matrix_from_json(io::json::parse(jb.output)["root"], "/root");
  CHECK(approx_equal(jb_root, ComplexMatrix(2, {Complex(2.0), Complex(0.25), Complex(0.0),
                                                Complex(2.0)}), 1e-8));

  const auto singular_file = temp_file("hj_singular.json", R"({
    "schema_version": "1.0",
    "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]
  })");
  CHECK(run_cli("root " + singular_file.string() + " 2").exit_code == 1);
}
