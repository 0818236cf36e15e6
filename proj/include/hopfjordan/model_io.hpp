#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hopfjordan/central_extension.hpp"
#include "hopfjordan/pipeline.hpp"

namespace hopfjordan::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Parsed model spec file: the model plus optional tolerance/cap overrides.
struct ModelSpec {
  hopfpipe::LinearHopfModel model;
  Tolerance tolerance;
  bool has_tolerance_override = false;
};

/// Self-contained report file: pipeline results, per-certificate outcomes,
/// and a digest of the input bytes. Serialization round-trips losslessly
/// and deterministically (no timestamps or timings in the file).
struct ReportFile {
  std::string schema_version = kSchemaVersion;
  std::string input_digest;
  hopfpipe::JordanReport report;
  groupcore::FiniteGroup quotient_group;
};

// complex numbers serialize as [re, im]; matrices as row-major nested arrays
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& node, const std::string& path);

json group_to_json(const groupcore::FiniteGroup& g);
groupcore::FiniteGroup group_from_json(const json& node, const std::string& path);

json extension_to_json(const groupcore::CentralExtensionZ& ext);
groupcore::CentralExtensionZ extension_from_json(const json& node, const std::string& path);

/// Parses a model spec document; throws ParseError with a JSON-path location
/// on the first violation.
ModelSpec parse_model_spec(const json& doc);
ModelSpec parse_model_spec_text(const std::string& text, const std::string& origin);
ModelSpec load_model_spec(const std::string& file_path);
json model_spec_to_json(const ModelSpec& spec);

/// Single-matrix document {"schema_version", "matrix"} used by the root command.
ComplexMatrix load_matrix_file(const std::string& file_path);

json report_to_json(const ReportFile& report);
ReportFile report_from_json(const json& doc);

/// FNV-1a 64-bit digest of raw bytes, formatted "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

std::string read_file(const std::string& file_path);

}  // namespace hopfjordan::io
