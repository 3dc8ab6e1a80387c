#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbwf/designer.hpp"
#include "json.hpp"

namespace fbwf::cli {

inline constexpr const char* kSchemaVersion = "1.0";

struct DocPole {
  double re = 0.0;
  double im = 0.0;
  double arg_abs = 0.0;
  PoleClass kind = PoleClass::Unstable;
};

// kind == "classical": q_den = 1, num/den over powers of s.
// kind == "fractional": num is a single scalar, den over powers of s^(1/q_den).
struct DocStage {
  std::string kind;
  int q_den = 1;
  std::vector<double> num;
  std::vector<double> den;
};

struct Provenance {
  DesignSpec spec;
  int decimals = 1;
  CutoffRule cutoff_rule = CutoffRule::StopBand;
  double n_exact = 0.0;
  std::optional<double> omega_c_int;
  std::optional<double> omega_c_frac;
  std::optional<double> omega_bar_c;
  double attenuation_at_passband_db = 0.0;
  double attenuation_at_stopband_db = 0.0;
};

/// Serialized filter. Only schema_version and stages are required when
/// parsing; hand-written documents may omit the rest.
struct FilterDocument {
  std::string schema_version = kSchemaVersion;
  RationalOrder order;
  std::vector<DocStage> stages;
  std::vector<std::vector<DocPole>> poles;
  std::optional<Provenance> provenance;
  std::vector<std::string> warnings;
};

FilterDocument make_document(const DesignReport& report);

/// Throws std::invalid_argument on a malformed stage.
CascadeFilter to_cascade(const FilterDocument& doc);

nlohmann::json to_json(const FilterDocument& doc);

/// Throws std::invalid_argument on schema violations.
FilterDocument document_from_json(const nlohmann::json& j);

}  // namespace fbwf::cli
