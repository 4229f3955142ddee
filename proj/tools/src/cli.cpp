#include "nfftlab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfftlab/bounds.hpp"
#include "nfftlab/error_analysis.hpp"
#include "nfftlab/fft.hpp"
#include "nfftlab/nfft.hpp"
#include "nfftlab/quadrature.hpp"
#include "nfftlab/reference_data.hpp"
#include "nfftlab/version.hpp"

namespace nfftlab::cli {
namespace {

using Cell = std::variant<std::string, double, long long, bool>;

// Column-ordered rows rendered either as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table: row width mismatch");
    rows.push_back(std::move(row));
  }
};

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

std::string metadata_line(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# nfftlab version=" << kVersion << " command=" << to_string(cfg.command)
     << " N=" << cfg.N << " method=" << to_string(cfg.method) << " r_max=" << cfg.r_max
     << " x_grid=" << cfg.x_grid;
  if (cfg.command == Command::NfftDemo) os << " M=" << cfg.M << " seed=" << cfg.seed;
  os << '\n';
  return os.str();
}

std::string render(const Table& t, const RunConfig& cfg, std::string_view extra_meta = {}) {
  if (cfg.output_format == OutputFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::string out = metadata_line(cfg);
  if (!extra_meta.empty()) out += "# " + std::string(extra_meta) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

EstimatorConfig estimator_config(const RunConfig& cfg) {
  EstimatorConfig e;
  e.r_max = cfg.r_max;
  e.x_grid = cfg.x_grid;
  e.method = cfg.method;
  e.validate();
  return e;
}

std::string kind_name(WindowKind k) { return std::string(to_string(k)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(',', start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  for (auto p : parts) {
    if (p.empty()) throw std::invalid_argument("empty list element in '" + std::string(s) + "'");
  }
  return parts;
}

template <class T>
T parse_number(std::string_view s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return value;
}

std::filesystem::path companion_path(const std::filesystem::path& p) {
  std::filesystem::path out = p;
  out.replace_filename(p.stem().string() + "_reference" + p.extension().string());
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed for " + p.string());
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Table1: return "table1";
    case Command::Table2: return "table2";
    case Command::Figure71: return "figure71";
    case Command::BoundsReport: return "bounds-report";
    case Command::ErrorConstant: return "error-constant";
    case Command::NfftDemo: return "nfft-demo";
    case Command::SelfCheck: return "self-check";
  }
  return "?";
}

Command parse_command(std::string_view s) {
  for (Command c : {Command::Table1, Command::Table2, Command::Figure71, Command::BoundsReport,
                    Command::ErrorConstant, Command::NfftDemo, Command::SelfCheck}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown command '" + std::string(s) + "'");
}

void RunConfig::validate() const {
  if (sigma_list.empty() || m_list.empty() || window_list.empty()) {
    throw std::invalid_argument("parameter lists must be nonempty");
  }
  if (N <= 0 || N % 2 != 0) throw std::invalid_argument("N must be positive and even");
  if (M <= 0) throw std::invalid_argument("M must be positive");
  estimator_config(*this);
}

std::vector<int> parse_int_list(std::string_view s) {
  s = trim(s);
  if (const auto pos = s.find(".."); pos != std::string_view::npos) {
    const int lo = parse_number<int>(trim(s.substr(0, pos)));
    const int hi = parse_number<int>(trim(s.substr(pos + 2)));
    if (hi < lo) throw std::invalid_argument("empty range '" + std::string(s) + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::vector<int> out;
  for (auto p : split_commas(s)) out.push_back(parse_number<int>(p));
  return out;
}

std::vector<double> parse_real_list(std::string_view s) {
  std::vector<double> out;
  for (auto p : split_commas(trim(s))) out.push_back(parse_number<double>(p));
  return out;
}

std::vector<WindowKind> parse_window_list(std::string_view s) {
  std::vector<WindowKind> out;
  for (auto p : split_commas(trim(s))) out.push_back(parse_window_kind(p));
  return out;
}

bool agrees_to_digits(double x, double ref, int digits) {
  const double unit = std::pow(10.0, std::floor(std::log10(std::fabs(ref))) - (digits - 1));
  return std::fabs(x - ref) < unit;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_number failed");
  return std::string(buf, ptr);
}

CommandOutput cmd_table1(const RunConfig& cfg) {
  Table t{{"m", "sigma", "beta", "exp_minus_beta"}, {}};
  for (double sigma : cfg.sigma_list) {
    for (int m : cfg.m_list) {
      const auto p = WindowParams::make(m, sigma, cfg.N);
      t.add({static_cast<long long>(m), sigma, p.beta, std::exp(-p.beta)});
    }
  }
  return {render(t, cfg), {}, kExitOk};
}

CommandOutput cmd_table2(const RunConfig& cfg) {
  Table t{{"m", "sigma", "gamma"}, {}};
  for (double sigma : cfg.sigma_list) {
    for (int m : cfg.m_list) {
      t.add({static_cast<long long>(m), sigma, gamma_const(WindowParams::make(m, sigma, cfg.N))});
    }
  }
  return {render(t, cfg), {}, kExitOk};
}

CommandOutput cmd_figure71(const RunConfig& cfg) {
  const EstimatorConfig ecfg = estimator_config(cfg);
  Table main{{"window", "sigma", "m", "N", "estimate", "tail_slack"}, {}};
  std::map<std::tuple<WindowKind, double, int>, double> estimates;
  for (WindowKind k : cfg.window_list) {
    for (double sigma : cfg.sigma_list) {
      for (int m : cfg.m_list) {
        const auto p = WindowParams::make(m, sigma, cfg.N);
        const auto e = error_constant(Window(k, p), ecfg);
        estimates[{k, sigma, m}] = e.value;
        main.add({kind_name(k), sigma, static_cast<long long>(m), static_cast<long long>(cfg.N),
                  e.value, e.tail_slack});
      }
    }
  }

  constexpr double kTolerance = 0.02;
  Table ref{{"curve", "window", "sigma", "m", "reference", "estimate", "rel_deviation",
             "within_tolerance"},
            {}};
  bool all_ok = true;
  for (const auto& pt : reference::figure_points()) {
    std::vector<WindowKind> kinds;
    switch (pt.curve) {
      case reference::Curve::CKB: kinds = {WindowKind::CKB}; break;
      case reference::Curve::KB: kinds = {WindowKind::KB}; break;
      case reference::Curve::Family:
        kinds = {WindowKind::Sinh, WindowKind::CExp, WindowKind::Exp, WindowKind::CCosh};
        break;
    }
    for (WindowKind k : kinds) {
      const auto it = estimates.find({k, pt.sigma, pt.m});
      if (it == estimates.end()) continue;
      const double dev = std::fabs(it->second - pt.value) / pt.value;
      const bool ok = dev <= kTolerance;
      all_ok = all_ok && ok;
      ref.add({std::string(reference::to_string(pt.curve)), kind_name(k), pt.sigma,
               static_cast<long long>(pt.m), pt.value, it->second, dev, ok});
    }
  }
  const std::string meta = "reference table version " + std::string(reference::kVersion) +
                           ", published plotted coordinates, tolerance 0.02 relative";
  return {render(main, cfg), render(ref, cfg, meta), all_ok ? kExitOk : kExitCheckFailed};
}

CommandOutput cmd_bounds_report(const RunConfig& cfg) {
  const EstimatorConfig ecfg = estimator_config(cfg);
  Table t{{"window", "sigma", "m", "N", "bound_value", "lower_value", "estimate", "tail_slack",
           "dominated", "slack_ratio"},
          {}};
  bool all_ok = true;
  for (WindowKind k : cfg.window_list) {
    for (double sigma : cfg.sigma_list) {
      for (int m : cfg.m_list) {
        const auto p = WindowParams::make(m, sigma, cfg.N);
        const auto r = make_bound_report(k, p, error_constant(Window(k, p), ecfg));
        all_ok = all_ok && r.dominated;
        t.add({kind_name(k), sigma, static_cast<long long>(m), static_cast<long long>(cfg.N),
               r.bound_value, r.lower_value, r.estimate, r.tail_slack, r.dominated,
               r.slack_ratio});
      }
    }
  }
  return {render(t, cfg), {}, all_ok ? kExitOk : kExitCheckFailed};
}

CommandOutput cmd_error_constant(const RunConfig& cfg) {
  const EstimatorConfig ecfg = estimator_config(cfg);
  Table t{{"window", "sigma", "m", "N", "estimate", "tail_slack", "n_argmax", "x_argmax"}, {}};
  for (WindowKind k : cfg.window_list) {
    for (double sigma : cfg.sigma_list) {
      for (int m : cfg.m_list) {
        const auto p = WindowParams::make(m, sigma, cfg.N);
        const auto e = error_constant(Window(k, p), ecfg);
        t.add({kind_name(k), sigma, static_cast<long long>(m), static_cast<long long>(cfg.N),
               e.value, e.tail_slack, static_cast<long long>(e.n_argmax), e.x_argmax});
      }
    }
  }
  return {render(t, cfg), {}, kExitOk};
}

CommandOutput cmd_nfft_demo(const RunConfig& cfg) {
  const EstimatorConfig ecfg = estimator_config(cfg);
  Table t{{"window", "sigma", "m", "N", "M", "seed", "measured_error", "l1_norm", "error_constant",
           "tail_slack", "bound", "dominated"},
          {}};
  if (cfg.timing) t.columns.push_back("seconds");
  const SpectralCoefficients c = random_coefficients(cfg.N, cfg.seed);
  const NodeSet nodes = random_nodes(static_cast<std::size_t>(cfg.M), cfg.seed + 1);
  bool all_ok = true;
  for (WindowKind k : cfg.window_list) {
    for (double sigma : cfg.sigma_list) {
      for (int m : cfg.m_list) {
        const auto p = WindowParams::make(m, sigma, cfg.N);
        const Window w(k, p);
        const NfftPlan plan(w, nodes);
        const auto t0 = std::chrono::steady_clock::now();
        const double err = measured_error(plan, c);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto e = error_constant(w, ecfg);
        const double bound = (e.value + e.tail_slack) * c.l1_norm();
        const bool ok = err <= bound;
        all_ok = all_ok && ok;
        std::vector<Cell> row{kind_name(k), sigma, static_cast<long long>(m),
                              static_cast<long long>(cfg.N), static_cast<long long>(cfg.M),
                              static_cast<long long>(cfg.seed), err, c.l1_norm(), e.value,
                              e.tail_slack, bound, ok};
        if (cfg.timing) row.emplace_back(seconds);
        t.add(std::move(row));
      }
    }
  }
  return {render(t, cfg), {}, all_ok ? kExitOk : kExitCheckFailed};
}

CommandOutput cmd_self_check(const RunConfig& cfg) {
  Table t{{"check", "value", "reference", "pass"}, {}};
  bool all_ok = true;
  const auto record = [&](std::string name, double value, double reference, bool ok) {
    all_ok = all_ok && ok;
    t.add({std::move(name), value, reference, ok});
  };

  for (std::size_t i = 0; i < reference::kMValues.size(); ++i) {
    const int m = reference::kMValues[i];
    const auto p = WindowParams::make(m, 2.0, 128);
    const double e = std::exp(-p.beta);
    record("table1_m" + std::to_string(m), e, reference::kTable1ExpMinusBeta[i],
           agrees_to_digits(e, reference::kTable1ExpMinusBeta[i], 3));
    const double g = gamma_const(p);
    record("table2_m" + std::to_string(m), g, reference::kTable2Gamma[i],
           agrees_to_digits(g, reference::kTable2Gamma[i], 3));
  }

  const EstimatorConfig ecfg = estimator_config(cfg);
  const struct {
    WindowKind kind;
    double sigma;
    int m;
    double reference;
  } spots[] = {{WindowKind::CKB, 1.5, 3, 4.2453e-4},
               {WindowKind::KB, 2.0, 2, 3.1539e-3},
               {WindowKind::Sinh, 1.25, 6, 4.2561e-6}};
  for (const auto& s : spots) {
    const auto e = error_constant(Window(s.kind, WindowParams::make(s.m, s.sigma, 128)), ecfg);
    record("figure_" + kind_name(s.kind) + "_s" + format_number(s.sigma) + "_m" +
               std::to_string(s.m),
           e.value, s.reference, std::fabs(e.value - s.reference) <= 0.02 * s.reference);
  }

  const double sinh_bound = bound_sinh(WindowParams::make(4, 2.0, 128));
  record("bound_sinh_s2_m4", sinh_bound, 3.7e-6, sinh_bound <= 3.7e-6);

  const SpectralCoefficients c = random_coefficients(64, cfg.seed);
  std::vector<Complex> x = c.values;
  fft_inplace(x, false);
  fft_inplace(x, true);
  double rt = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rt = std::max(rt, std::abs(x[i] / static_cast<double>(x.size()) - c.values[i]));
  }
  record("fft_round_trip_64", rt, 1e-13, rt <= 1e-13);

  const auto p = WindowParams::make(4, 2.0, 64);
  const Window sinh(WindowKind::Sinh, p);
  const NfftPlan plan(sinh, random_nodes(1000, cfg.seed + 1));
  const double err = measured_error(plan, c);
  const auto e = error_constant(sinh, ecfg);
  const double bound = (e.value + e.tail_slack) * c.l1_norm();
  record("nfft_sinh_s2_m4", err, bound, err <= bound);

  return {render(t, cfg), {}, all_ok ? kExitOk : kExitCheckFailed};
}

CommandOutput run_command(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.command) {
    case Command::Table1: return cmd_table1(cfg);
    case Command::Table2: return cmd_table2(cfg);
    case Command::Figure71: return cmd_figure71(cfg);
    case Command::BoundsReport: return cmd_bounds_report(cfg);
    case Command::ErrorConstant: return cmd_error_constant(cfg);
    case Command::NfftDemo: return cmd_nfft_demo(cfg);
    case Command::SelfCheck: return cmd_self_check(cfg);
  }
  throw std::logic_error("unhandled command");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Window-function error constants and NFFT experiments", "nfftlab"};
  app.set_version_flag("--version", std::string(kVersion));
  std::string command, sigma, m, windows, format, out_path, method;
  std::optional<int> N, M, r_max, x_grid;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("command", command,
                 "table1 | table2 | figure71 | bounds-report | error-constant | nfft-demo | "
                 "self-check")
      ->required();
  app.add_option("--sigma", sigma, "oversampling factors, e.g. 1.25,1.5,2");
  app.add_option("--m", m, "truncation parameters, e.g. 2..6 or 2,4");
  app.add_option("--N", N, "bandwidth (even)");
  app.add_option("--windows", windows, "rect,ckb,kb,sinh,cexp,exp,ccosh");
  app.add_option("--format", format, "csv | json");
  app.add_option("--out", out_path, "output file (stdout if absent)");
  app.add_option("--seed", seed, "random seed for nfft-demo");
  app.add_option("--method", method, "poisson | series, how the aliasing sum is evaluated");
  app.add_option("--rmax", r_max, "aliasing terms kept per side (series)");
  app.add_option("--xgrid", x_grid, "grid points for the sup over x");
  app.add_option("--M", M, "number of nodes for nfft-demo");
  app.add_flag("--timing", timing, "add wall-clock columns to nfft-demo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  RunConfig cfg;
  cfg.command = parse_command(command);
  switch (cfg.command) {
    case Command::Table1:
    case Command::Table2: cfg.sigma_list = {2.0}; break;
    case Command::BoundsReport: cfg.output_format = OutputFormat::Json; break;
    case Command::NfftDemo:
      cfg.sigma_list = {2.0};
      cfg.N = 64;
      break;
    default: break;
  }
  if (!sigma.empty()) cfg.sigma_list = parse_real_list(sigma);
  if (!m.empty()) cfg.m_list = parse_int_list(m);
  if (!windows.empty()) cfg.window_list = parse_window_list(windows);
  if (!format.empty()) {
    if (format == "csv") cfg.output_format = OutputFormat::Csv;
    else if (format == "json") cfg.output_format = OutputFormat::Json;
    else throw std::invalid_argument("unknown format '" + format + "'");
  }
  if (!out_path.empty()) cfg.output_path = out_path;
  if (N) cfg.N = *N;
  if (M) cfg.M = *M;
  if (seed) cfg.seed = *seed;
  if (!method.empty()) cfg.method = parse_estimator_method(method);
  if (r_max) cfg.r_max = *r_max;
  if (x_grid) cfg.x_grid = *x_grid;
  cfg.timing = timing;
  cfg.validate();
  return cfg;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitOk;
    // Surfaces parameter errors such as 8m > sigma N before any long computation.
    for (double s : cfg->sigma_list) {
      for (int m : cfg->m_list) WindowParams::make(m, s, cfg->N);
    }
  } catch (const std::exception& e) {
    err << "nfftlab: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const CommandOutput result = run_command(*cfg);
    if (cfg->output_path) {
      write_file(*cfg->output_path, result.body);
      if (!result.companion.empty()) {
        write_file(companion_path(*cfg->output_path), result.companion);
      }
    } else {
      out << result.body;
      if (!result.companion.empty()) out << '\n' << result.companion;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "nfftlab: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace nfftlab::cli
