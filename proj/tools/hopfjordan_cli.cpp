// Command-line front end: validate linear Hopf models, run the certified
// Jordan-index pipeline, or expose the commutant-preserving matrix root.
//
// Exit codes: 0 success, 1 domain failure, 2 input failure.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "hopfjordan/model_io.hpp"

namespace {

using namespace hopfjordan;

struct CommonOptions {
  double tol = -1.0;  // residual_eps override when >= 0
  int cap = -1;
  std::uint64_t seed = hopfpipe::kDefaultOrbitSeed;
  std::string format = "text";
};

Tolerance effective_tolerance(const io::ModelSpec& spec, const CommonOptions& opt) {
  Tolerance tol = spec.tolerance;
  if (opt.tol >= 0.0) tol.residual_eps = opt.tol;
  return tol;
}

void print_certificates(const std::vector<hopfpipe::Certificate>& certs) {
  for (const auto& c : certs) {
    std::cout << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
    if (c.residual != 0.0) std::cout << "  residual=" << c.residual;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
}

int cmd_validate(const std::string& path, const CommonOptions& opt) {
  io::ModelSpec spec = io::load_model_spec(path);
  if (opt.cap > 0) spec.model.quotient_cap = opt.cap;
  const Tolerance tol = effective_tolerance(spec, opt);
  const auto certs = hopfpipe::validate_model(spec.model, tol, opt.seed);
  bool all_passed = true;
  for (const auto& c : certs) all_passed = all_passed && c.passed;
  if (opt.format == "json") {
    io::json out;
    out["certified"] = all_passed;
    io::json list = io::json::array();
    for (const auto& c : certs) {
      list.push_back({{"name", c.name}, {"passed", c.passed},
                      {"residual", c.residual}, {"detail", c.detail}});
    }
    out["certificates"] = std::move(list);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "model: " << path << "\n";
    print_certificates(certs);
    std::cout << (all_passed ? "all certificates passed\n" : "certificate failure\n");
  }
  if (!all_passed) {
    for (const auto& c : certs) {
      if (!c.passed) {
        std::cerr << "failed certificate: " << c.name << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

int cmd_jordan(const std::string& path, const std::string& out_path, const CommonOptions& opt) {
  using clock = std::chrono::steady_clock;
  const std::string bytes = io::read_file(path);
  io::ModelSpec spec = io::parse_model_spec_text(bytes, path);
  if (opt.cap > 0) spec.model.quotient_cap = opt.cap;
  const Tolerance tol = effective_tolerance(spec, opt);

  const auto t0 = clock::now();
  const hopfpipe::JordanReport report = hopfpipe::aut_jordan_index(spec.model, tol, opt.seed);
  const auto t1 = clock::now();
  const auto em = hopfpipe::build_extension_model(spec.model, tol);

  io::ReportFile file;
  file.input_digest = io::content_digest(bytes);
  file.report = report;
  file.quotient_group = em.extension.quotient();
  const io::json doc = io::report_to_json(file);
  const std::string serialized = doc.dump(2) + "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << serialized;
  }
  if (opt.format == "json") {
    std::cout << serialized;
  } else {
    const double elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
    std::cout << "model: " << path << "\n";
    std::cout << "quotient order |H|      : " << report.quotient_order << "\n";
    std::cout << "jordan index            : " << report.jordan_index << "\n";
    std::cout << "finite model order |H'| : " << report.finite_model_order << "\n";
    std::cout << "theta exponent          : " << report.theta_exponent << "\n";
    std::cout << "primary quotient order  : " << report.primary_quotient_order << "\n";
    print_certificates(report.certificates);
    std::cout << "pipeline wall clock     : " << elapsed_ms << " ms\n";
  }
  std::cout << "order=" << report.quotient_order << " jordan_index=" << report.jordan_index
            << " certified=" << (report.certified() ? "true" : "false") << "\n";
  return 0;
}

int cmd_root(const std::string& path, int m, const CommonOptions& opt) {
  const ComplexMatrix k = io::load_matrix_file(path);
  Tolerance tol;
  if (opt.tol >= 0.0) tol.residual_eps = opt.tol;
  const ComplexMatrix root = spectra::commutant_preserving_root(k, m, tol);
  const double residual = max_norm_diff(root.power(m), k);
  if (opt.format == "json") {
    io::json out;
    out["root"] = io::matrix_to_json(root);
    out["residual"] = residual;
    std::cout << out.dump(2) << "\n";
  } else {
    for (int i = 0; i < root.dim(); ++i) {
      for (int j = 0; j < root.dim(); ++j) {
        const Complex v = root.at(i, j);
        std::cout << (j ? "  " : "") << v.real() << (v.imag() < 0 ? "-" : "+")
                  << std::abs(v.imag()) << "i";
      }
      std::cout << "\n";
    }
    std::cout << "residual ||root^" << m << " - K|| = " << residual << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified Jordan indexes for linear Hopf models"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string model_path;
  std::string out_path;
  std::string matrix_path;
  int root_order = 2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "residual tolerance override");
    cmd->add_option("--cap", opt.cap, "coset enumeration cap override");
    cmd->add_option("--seed", opt.seed, "seed for orbit sample points");
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "run model certificates");
  validate->add_option("model", model_path, "model spec JSON file")->required();
  add_common(validate);

  CLI::App* jordan = app.add_subcommand("jordan", "run the certified Jordan-index pipeline");
  jordan->add_option("model", model_path, "model spec JSON file")->required();
  jordan->add_option("--out", out_path, "write the report JSON here");
  add_common(jordan);

  CLI::App* root = app.add_subcommand("root", "commutant-preserving m-th root of a matrix");
  root->add_option("matrix", matrix_path, "matrix JSON file")->required();
  root->add_option("m", root_order, "root order m >= 1")->required();
  add_common(root);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(model_path, opt);
    if (jordan->parsed()) return cmd_jordan(model_path, out_path, opt);
    if (root->parsed()) return cmd_root(matrix_path, root_order, opt);
  } catch (const hopfjordan::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hopfjordan::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
