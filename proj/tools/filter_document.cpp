#include "filter_document.hpp"

#include <cmath>
#include <stdexcept>

namespace fbwf::cli {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("filter document: missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<double> read_coeffs(const json& j, const char* key) {
  const auto& arr = require(j, key);
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument(std::string("filter document: '") + key +
                                "' must be a non-empty array");
  }
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("filter document: '") + key + "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

DocStage read_stage(const json& j) {
  DocStage s;
  s.kind = require(j, "kind").get<std::string>();
  if (s.kind != "classical" && s.kind != "fractional") {
    throw std::invalid_argument("filter document: stage kind must be classical or fractional");
  }
  if (j.contains("q_den")) {
    s.q_den = j.at("q_den").get<int>();
  } else if (j.contains("q")) {
    const double q = j.at("q").get<double>();
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("filter document: q must be in (0, 1]");
    s.q_den = static_cast<int>(std::lround(1.0 / q));
  }
  if (s.q_den < 1) throw std::invalid_argument("filter document: q_den must be >= 1");
  if (s.kind == "classical" && s.q_den != 1) {
    throw std::invalid_argument("filter document: classical stage must have q_den = 1");
  }
  s.num = read_coeffs(j, "num");
  s.den = read_coeffs(j, "den");
  if (s.kind == "fractional" && s.num.size() != 1) {
    throw std::invalid_argument("filter document: fractional stage numerator must be a scalar");
  }
  return s;
}

}  // namespace

FilterDocument make_document(const DesignReport& report) {
  FilterDocument doc;
  doc.order = report.order;
  for (const auto& stage : report.filter.stages) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ClassicalTF>) {
            doc.stages.push_back({"classical", 1, s.num, s.den});
          } else {
            doc.stages.push_back({"fractional", s.q_den, {s.num}, s.den});
          }
        },
        stage);
  }
  for (const auto& sp : report.poles) {
    auto& list = doc.poles.emplace_back();
    for (const auto& p : sp.poles) list.push_back({p.value.real(), p.value.imag(), p.arg_abs, p.kind});
  }
  Provenance prov;
  prov.spec = report.spec;
  prov.decimals = report.options.decimals;
  prov.cutoff_rule = report.options.cutoff_rule;
  prov.n_exact = report.n_exact;
  prov.omega_c_int = report.omega_c_int;
  prov.omega_c_frac = report.omega_c_frac;
  prov.omega_bar_c = report.omega_bar_c;
  prov.attenuation_at_passband_db = report.attenuation_at_passband_db;
  prov.attenuation_at_stopband_db = report.attenuation_at_stopband_db;
  doc.provenance = prov;
  doc.warnings = report.warnings;
  return doc;
}

CascadeFilter to_cascade(const FilterDocument& doc) {
  std::vector<Stage> stages;
  for (const auto& s : doc.stages) {
    if (s.kind == "classical") {
      stages.emplace_back(ClassicalTF{s.num, s.den});
    } else {
      WPlaneTF tf;
      tf.q_den = s.q_den;
      tf.den = s.den;
      tf.num = s.num.front();
      stages.emplace_back(std::move(tf));
    }
  }
  return cascade(std::move(stages));
}

json to_json(const FilterDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["order"] = {{"n_int", doc.order.n_int}, {"p", doc.order.p}, {"q_den", doc.order.q_den}};

  j["stages"] = json::array();
  for (const auto& s : doc.stages) {
    j["stages"].push_back({{"kind", s.kind},
                           {"q", 1.0 / s.q_den},
                           {"q_den", s.q_den},
                           {"num", s.num},
                           {"den", s.den}});
  }

  j["poles"] = json::array();
  for (const auto& list : doc.poles) {
    json arr = json::array();
    for (const auto& p : list) {
      arr.push_back({{"re", p.re},
                     {"im", p.im},
                     {"arg_abs", p.arg_abs},
                     {"class", std::string(to_string(p.kind))}});
    }
    j["poles"].push_back(std::move(arr));
  }

  if (doc.provenance) {
    const auto& p = *doc.provenance;
    j["provenance"] = {
        {"spec",
         {{"omega_p", p.spec.omega_p},
          {"omega_s", p.spec.omega_s},
          {"alpha_p", p.spec.alpha_p},
          {"alpha_s", p.spec.alpha_s}}},
        {"decimals", p.decimals},
        {"cutoff_rule", std::string(to_string(p.cutoff_rule))},
        {"n_exact", p.n_exact},
        {"omega_c_int", optional_number(p.omega_c_int)},
        {"omega_c_frac", optional_number(p.omega_c_frac)},
        {"omega_bar_c", optional_number(p.omega_bar_c)},
        {"attenuation_at_passband_db", p.attenuation_at_passband_db},
        {"attenuation_at_stopband_db", p.attenuation_at_stopband_db},
    };
  }
  j["warnings"] = doc.warnings;
  return j;
}

FilterDocument document_from_json(const json& j) {
  try {
    FilterDocument doc;
    doc.schema_version = require(j, "schema_version").get<std::string>();
    if (doc.schema_version.substr(0, 2) != "1.") {
      throw std::invalid_argument("filter document: unsupported schema_version " +
                                  doc.schema_version);
    }
    const auto& stages = require(j, "stages");
    if (!stages.is_array() || stages.empty()) {
      throw std::invalid_argument("filter document: 'stages' must be a non-empty array");
    }
    for (const auto& s : stages) doc.stages.push_back(read_stage(s));

    if (j.contains("order")) {
      const auto& o = j.at("order");
      doc.order = {require(o, "n_int").get<std::int64_t>(), require(o, "p").get<std::int64_t>(),
                   require(o, "q_den").get<std::int64_t>()};
    }
    if (j.contains("poles")) {
      for (const auto& list : j.at("poles")) {
        auto& out = doc.poles.emplace_back();
        for (const auto& p : list) {
          const auto cls = parse_pole_class(require(p, "class").get<std::string>());
          if (!cls) throw std::invalid_argument("filter document: unknown pole class");
          out.push_back({require(p, "re").get<double>(), require(p, "im").get<double>(),
                         require(p, "arg_abs").get<double>(), *cls});
        }
      }
    }
    if (j.contains("provenance") && !j.at("provenance").is_null()) {
      const auto& p = j.at("provenance");
      const auto& spec = require(p, "spec");
      Provenance prov;
      prov.spec = {require(spec, "omega_p").get<double>(), require(spec, "omega_s").get<double>(),
                   require(spec, "alpha_p").get<double>(), require(spec, "alpha_s").get<double>()};
      prov.decimals = require(p, "decimals").get<int>();
      const auto rule = parse_cutoff_rule(require(p, "cutoff_rule").get<std::string>());
      if (!rule) throw std::invalid_argument("filter document: unknown cutoff_rule");
      prov.cutoff_rule = *rule;
      prov.n_exact = require(p, "n_exact").get<double>();
      prov.omega_c_int = read_optional(p, "omega_c_int");
      prov.omega_c_frac = read_optional(p, "omega_c_frac");
      prov.omega_bar_c = read_optional(p, "omega_bar_c");
      prov.attenuation_at_passband_db = require(p, "attenuation_at_passband_db").get<double>();
      prov.attenuation_at_stopband_db = require(p, "attenuation_at_stopband_db").get<double>();
      doc.provenance = prov;
    }
    if (j.contains("warnings")) doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("filter document: ") + e.what());
  }
}

}  // namespace fbwf::cli
