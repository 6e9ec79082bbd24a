#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace levyslab::cli {

/// Malformed or out-of-range command line; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output that could not be written, or input that could not be read; exit
/// code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version; `text` goes to stdout and the exit code is 0.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(std::string text)
      : std::runtime_error("help requested"), text(std::move(text)) {}
  std::string text;
};

enum class Subcommand { mlf, eig, evolve, verify };
enum class Family { odd, even, degenerate };

const char* to_string(Subcommand s) noexcept;
const char* to_string(Family f) noexcept;

struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  double beta = 1.8;
  double L = 1.0;
  double k = 0.1;
  double omega_beta = 0.0;
  int n_grid = 4096;
  int mode_cutoff = 64;
  std::vector<double> z_list{0.0, 0.5, 1.0, 2.0};
  std::string output_path = ".";
  std::uint64_t seed = 1;

  // mlf
  double ml_gamma = 0.5;
  double ml_delta = 1.0;
  double z_re = 0.0;
  double z_im = 0.0;

  // eig
  Family family = Family::odd;
  int modes = 3;
  bool svg = false;

  // evolve: mode:M, even:M, triangle or file:PATH
  std::string u0 = "mode:1";

  // verify
  bool quick = false;
  /// Replaces the symbol |k|^beta by |k|^(beta-1) in the eigen checks.
  bool inject_symbol_fault = false;

  double gamma() const noexcept { return beta - 1.0; }
};

/// Parses `args` (without the program name). A `--config FILE` flag reads
/// key = value lines; flags on the command line win over the file.
/// The output directory is taken from --output-path, then `out_env`
/// (LEVYSLAB_OUT), then the config file, then ".".
/// Throws UsageError or HelpRequested.
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& out_env = {});

}  // namespace levyslab::cli
