#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfftlab/error_analysis.hpp"
#include "nfftlab/window.hpp"

namespace nfftlab::cli {

enum class Command { Table1, Table2, Figure71, BoundsReport, ErrorConstant, NfftDemo, SelfCheck };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);
Command parse_command(std::string_view s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::SelfCheck;
  std::vector<double> sigma_list{1.25, 1.5, 2.0};
  std::vector<int> m_list{2, 3, 4, 5, 6};
  int N = 128;
  std::vector<WindowKind> window_list{kAllWindowKinds.begin(), kAllWindowKinds.end()};
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<std::filesystem::path> output_path;
  std::uint64_t seed = 42;
  EstimatorMethod method = EstimatorMethod::Poisson;
  int r_max = 64;      // series method only
  int x_grid = 2048;
  int M = 1000;        // nodes per nfft-demo run
  bool timing = false; // adds wall-clock columns, which breaks byte-identical output
  // Throws std::invalid_argument on empty lists or odd N.
  void validate() const;
};

// "2..6" or "2,3,5".
std::vector<int> parse_int_list(std::string_view s);
std::vector<double> parse_real_list(std::string_view s);
std::vector<WindowKind> parse_window_list(std::string_view s);

// |x - ref| below one unit in the last of `digits` significant digits of ref.
bool agrees_to_digits(double x, double ref, int digits);

// Shortest round-trip decimal form.
std::string format_number(double x);

struct CommandOutput {
  std::string body;
  std::string companion;  // figure71 reference table, empty otherwise
  int exit_code = kExitOk;
};

CommandOutput cmd_table1(const RunConfig& cfg);
CommandOutput cmd_table2(const RunConfig& cfg);
CommandOutput cmd_figure71(const RunConfig& cfg);
CommandOutput cmd_bounds_report(const RunConfig& cfg);
CommandOutput cmd_error_constant(const RunConfig& cfg);
CommandOutput cmd_nfft_demo(const RunConfig& cfg);
CommandOutput cmd_self_check(const RunConfig& cfg);
CommandOutput run_command(const RunConfig& cfg);

// Parses argv into a RunConfig. Command-specific defaults apply to flags that are absent.
// Throws std::invalid_argument on bad input; returns nullopt after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

// Full entry point: parse, run, write files or stdout. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nfftlab::cli
