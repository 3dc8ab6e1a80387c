#include "cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fbwf/designer.hpp"
#include "fbwf/error.hpp"
#include "fbwf/response.hpp"
#include "filter_document.hpp"

namespace fbwf::cli {

namespace {

std::string format_fixed(double v, int precision) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, precision);
  return std::string(buf.data(), res.ptr);
}

FilterDocument read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return document_from_json(j);
}

void write_pole_rows(std::ostream& out, const std::vector<WPole>& poles) {
  for (const auto& p : poles) {
    out << format_number(p.value.real()) << ',' << format_number(p.value.imag()) << ','
        << format_number(p.arg_abs) << ',' << to_string(p.kind) << '\n';
  }
}

// Smallest Q > P, coprime with P, at which every candidate but the positive
// real one is stable.
int table3_q(int p) {
  int q_den = std::max(p + 1, first_stable_q(p));
  while (std::gcd(p, q_den) != 1) ++q_den;
  return q_den;
}

// Transfer function string in terms of Wc (the w-plane radius) and s^q.
std::string table3_row_string(const std::vector<WPole>& unit_poles) {
  const auto factors = factors_from_poles(unit_poles);
  int degree = 0;
  std::string den;
  for (const auto& f : factors) {
    degree += f.degree();
    if (f.degree() == 1) {
      den += "(s^q + Wc)";
    } else {
      const double middle = f.coeffs[1];
      den += std::string("(s^{2q} ") + (middle < 0.0 ? "- " : "+ ") +
             format_fixed(std::abs(middle), 4) + "*Wc*s^q + Wc^2)";
    }
  }
  return "Wc^" + std::to_string(degree) + "/(" + den + ")";
}

struct DesignArgs {
  double ap = 0.0, as = 0.0, wp = 0.0, ws = 0.0;
  int decimals = 1;
  std::string cutoff_rule = "stopband";
};

struct PolesArgs {
  int p = 0, q = 0;
  double wc = 1.0;
  bool all = false;
  bool no_reduce = false;
};

struct BodeArgs {
  double from = 1e-2, to = 1e2;
  std::size_t points = 200;
  std::string input = "-";
};

struct StepArgs {
  double tmax = 30.0, dt = 1e-3;
  std::optional<std::size_t> memory;
  std::string input = "-";
};

struct TablesArgs {
  int which = 0;
  std::optional<int> p, q;
};

int cmd_design(const DesignArgs& a, std::ostream& out, std::ostream& err) {
  DesignSpec spec{a.wp, a.ws, a.ap, a.as};
  spec.validate();
  const auto rule = parse_cutoff_rule(a.cutoff_rule);
  if (!rule) throw std::invalid_argument("cutoff rule must be stopband or passband");
  const auto report = design_filter(spec, {a.decimals, *rule});
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  out << to_json(make_document(report)).dump(2) << '\n';
  return kExitOk;
}

int cmd_poles(const PolesArgs& a, std::ostream& out, std::ostream& err) {
  if (a.p < 1 || a.q < 1) throw std::invalid_argument("--p and --q must be >= 1");
  if (!(a.wc > 0.0)) throw std::invalid_argument("--wc must be > 0");
  if (!a.no_reduce && std::gcd(a.p, a.q) != 1) {
    throw std::invalid_argument("P and Q share a common factor (pass --no-reduce to keep them)");
  }
  const double radius = map_radius(a.wc, a.q);
  out << "re,im,arg_abs_rad,class\n";
  if (a.all) {
    write_pole_rows(out, classified_candidates(a.p, a.q, radius));
  } else {
    const auto set = stable_poles(a.p, a.q, radius);
    for (const auto& w : set.warnings) err << "warning: " << w << '\n';
    write_pole_rows(out, set.stable);
  }
  return kExitOk;
}

int cmd_bode(const BodeArgs& a, std::istream& in, std::ostream& out) {
  const auto filter = to_cascade(read_document(a.input, in));
  const auto grid = FrequencyGrid::log(a.from, a.to, a.points);
  out << "omega,mag_db,phase_deg\n";
  for (const auto& pt : bode(filter, grid)) {
    out << format_number(pt.omega) << ',' << format_number(pt.magnitude_db) << ','
        << format_number(pt.phase_deg) << '\n';
  }
  return kExitOk;
}

int cmd_step(const StepArgs& a, std::istream& in, std::ostream& out) {
  const auto filter = to_cascade(read_document(a.input, in));
  const TimeGrid grid{a.dt, a.tmax, a.memory};
  const auto samples = step_response_gl(filter, grid);
  out << "t,y\n";
  for (const auto& s : samples) out << format_number(s.t) << ',' << format_number(s.y) << '\n';
  return kExitOk;
}

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  if (a.p && *a.p < 1) throw std::invalid_argument("--p must be >= 1");
  if (a.q && *a.q < 1) throw std::invalid_argument("--q must be >= 1");
  if (a.which == 2) {
    out << "q_den,p,re,im,arg_abs_rad,class\n";
    const int q_lo = a.q.value_or(2);
    const int q_hi = a.q.value_or(5);
    for (int q_den = q_lo; q_den <= q_hi; ++q_den) {
      for (int p = 1; p < q_den; ++p) {
        if (a.p && *a.p != p) continue;
        for (const auto& pole : stable_poles(p, q_den, 1.0).stable) {
          out << q_den << ',' << p << ',' << format_number(pole.value.real()) << ','
              << format_number(pole.value.imag()) << ',' << format_number(pole.arg_abs) << ','
              << to_string(pole.kind) << '\n';
        }
      }
    }
    return kExitOk;
  }
  if (a.which == 3) {
    out << "p,q_den,degree,transfer_function\n";
    const int p_lo = a.p.value_or(1);
    const int p_hi = a.p.value_or(9);
    for (int p = p_lo; p <= p_hi; ++p) {
      const int q_den = a.q.value_or(table3_q(p));
      const auto poles = stable_poles(p, q_den, 1.0).stable;
      out << p << ',' << q_den << ',' << poles.size() << ',' << table3_row_string(poles) << '\n';
    }
    return kExitOk;
  }
  throw std::invalid_argument("--which must be 2 or 3");
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fractional-order Butterworth-like filter design and analysis", "fbwf"};
  app.require_subcommand(1);

  DesignArgs design_args;
  auto* design = app.add_subcommand("design", "Design a filter from band-edge specs (JSON out)");
  design->add_option("--ap", design_args.ap, "Max pass-band attenuation [dB]")->required();
  design->add_option("--as", design_args.as, "Min stop-band attenuation [dB]")->required();
  design->add_option("--wp", design_args.wp, "Pass-band edge [rad/s]")->required();
  design->add_option("--ws", design_args.ws, "Stop-band edge [rad/s]")->required();
  design->add_option("--decimals", design_args.decimals, "Order truncation decimals")
      ->capture_default_str();
  design->add_option("--cutoff-rule", design_args.cutoff_rule,
                     "Fractional-stage cutoff: stopband|passband")
      ->capture_default_str();

  PolesArgs poles_args;
  auto* poles = app.add_subcommand("poles", "List w-plane poles for order P/Q (CSV out)");
  poles->add_option("--p", poles_args.p, "Pole count P")->required();
  poles->add_option("--q", poles_args.q, "Denominator Q (q = 1/Q)")->required();
  poles->add_option("--wc", poles_args.wc, "s-plane cutoff [rad/s]")->capture_default_str();
  poles->add_flag("--all", poles_args.all, "Include unstable and marginal candidates");
  poles->add_flag("--no-reduce", poles_args.no_reduce, "Accept P/Q with a common factor");

  BodeArgs bode_args;
  auto* bode_cmd = app.add_subcommand("bode", "Bode data of a filter document (CSV out)");
  bode_cmd->add_option("--from", bode_args.from, "Lowest frequency [rad/s]")->capture_default_str();
  bode_cmd->add_option("--to", bode_args.to, "Highest frequency [rad/s]")->capture_default_str();
  bode_cmd->add_option("--points", bode_args.points, "Log-spaced points")->capture_default_str();
  bode_cmd->add_option("--input", bode_args.input, "Filter document, '-' for stdin")
      ->capture_default_str();

  StepArgs step_args;
  auto* step = app.add_subcommand("step", "Grünwald–Letnikov step response (CSV out)");
  step->add_option("--tmax", step_args.tmax, "Horizon [s]")->capture_default_str();
  step->add_option("--dt", step_args.dt, "Step [s]")->capture_default_str();
  step->add_option("--memory", step_args.memory, "History length L (default: full)");
  step->add_option("--input", step_args.input, "Filter document, '-' for stdin")
      ->capture_default_str();

  TablesArgs tables_args;
  auto* tables = app.add_subcommand("tables", "Regenerate pole or transfer-function tables");
  tables->add_option("--which", tables_args.which, "2: stable poles, 3: transfer functions")
      ->required();
  tables->add_option("--p", tables_args.p, "Only this P");
  tables->add_option("--q", tables_args.q, "Only this Q");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (design->parsed()) return cmd_design(design_args, out, err);
    if (poles->parsed()) return cmd_poles(poles_args, out, err);
    if (bode_cmd->parsed()) return cmd_bode(bode_args, in, out);
    if (step->parsed()) return cmd_step(step_args, in, out);
    if (tables->parsed()) return cmd_tables(tables_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitBadInput;
}

}  // namespace fbwf::cli
