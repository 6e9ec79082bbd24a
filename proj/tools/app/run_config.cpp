#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

#include <CLI11.hpp>

#include "levyslab/eigenbox.hpp"
#include "levyslab/fractional_operators.hpp"
#include "levyslab/paraxial_solver.hpp"
#include "levyslab/special_functions.hpp"

namespace levyslab::cli {

namespace {

// Plain decimal notation only: no hex, no inf/nan.
const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
      static const std::regex re(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
      return std::regex_match(s, re) ? std::string()
                                     : "'" + s + "' is not a decimal number";
    },
    "DECIMAL");

const CLI::Validator kInteger(
    [](std::string& s) -> std::string {
      static const std::regex re(R"(^[+-]?\d+$)");
      return std::regex_match(s, re) ? std::string()
                                     : "'" + s + "' is not a decimal integer";
    },
    "INTEGER");

const std::map<std::string, Subcommand> kSubcommands{
    {"mlf", Subcommand::mlf},
    {"eig", Subcommand::eig},
    {"evolve", Subcommand::evolve},
    {"verify", Subcommand::verify}};

const std::map<std::string, Family> kFamilies{
    {"odd", Family::odd}, {"even", Family::even}, {"degenerate", Family::degenerate}};

bool is_flag(const std::string& arg, const std::string& name) {
  return arg == name || arg.starts_with(name + "=");
}

bool parse_index(const std::string& text, int lowest) {
  static const std::regex re(R"(^\d{1,9}$)");
  return std::regex_match(text, re) && std::stoi(text) >= lowest;
}

void check_u0(const std::string& spec) {
  if (spec == "triangle") return;
  if (spec.starts_with("mode:") && parse_index(spec.substr(5), 1)) return;
  if (spec.starts_with("even:") && parse_index(spec.substr(5), 0)) return;
  if (spec.starts_with("file:") && spec.size() > 5) return;
  throw UsageError("--u0 must be mode:M, even:M, triangle or file:PATH, got '" +
                   spec + "'");
}

void validate(const RunConfig& c) {
  if (!(c.beta > 1.0 && c.beta <= 2.0)) {
    throw UsageError("beta must lie in (1, 2]");
  }
  try {
    FractionalOrders orders(1.0, c.beta);
    SlabConfig slab(c.L, c.k, c.omega_beta, orders, c.mode_cutoff);
    Grid1D grid(c.L, static_cast<std::size_t>(std::max(c.n_grid, 0)));
    MLParams ml(c.ml_gamma, c.ml_delta);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (c.mode_cutoff > c.n_grid / 2) {
    throw UsageError("mode cutoff M must not exceed N/2");
  }
  if (c.modes < 1 || c.modes > c.n_grid / 2) {
    throw UsageError("--modes must lie in [1, N/2]");
  }
  if (c.z_list.empty()) throw UsageError("--z needs at least one value");
  for (double z : c.z_list) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
      throw UsageError("z values must be finite and non-negative");
    }
  }
  auto sorted = c.z_list;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UsageError("z values must be distinct");
  }
  if (!std::isfinite(c.z_re) || !std::isfinite(c.z_im)) {
    throw UsageError("z must be finite");
  }
  check_u0(c.u0);
  if (c.output_path.empty()) throw UsageError("output path is empty");
}

}  // namespace

const char* to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::mlf: return "mlf";
    case Subcommand::eig: return "eig";
    case Subcommand::evolve: return "evolve";
    case Subcommand::verify: return "verify";
  }
  return "?";
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::odd: return "odd";
    case Family::even: return "even";
    case Family::degenerate: return "degenerate";
  }
  return "?";
}

RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& out_env) {
  RunConfig c;
  CLI::App app{"Fractional paraxial propagation in a slab: Mittag-Leffler "
               "tables, box eigenmodes, field evolution and verification.",
               "levyslab"};
  app.set_config("--config", "", "Read key = value settings from FILE");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(0, 1);

  // Every option lives on the top-level app so the config file stays flat;
  // subcommands fall through to it.
  std::string subcommand_key;
  app.add_option("--subcommand", subcommand_key,
                 "Subcommand (config files only)")
      ->check(CLI::IsMember({"mlf", "eig", "evolve", "verify"}))
      ->group("");
  app.add_option("--beta", c.beta, "Space order beta in (1, 2]")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--L", c.L, "Half-width of the slab")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--k", c.k, "Paraxial wavenumber")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--omega-beta,--omega_beta", c.omega_beta, "omega / K_beta")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--N,--n-grid,--n_grid", c.n_grid,
                 "Grid points (power of two)")
      ->check(kInteger)->capture_default_str();
  app.add_option("--M,--mode-cutoff,--mode_cutoff", c.mode_cutoff,
                 "Sine modes kept in the expansion")
      ->check(kInteger)->capture_default_str();
  app.add_option("--z,--z-list,--z_list", c.z_list,
                 "Comma-separated propagation distances")
      ->delimiter(',')->check(kDecimal)->capture_default_str();
  app.add_option("--output-path,--output_path", c.output_path,
                 "Output directory (LEVYSLAB_OUT is used when not given)");
  app.add_option("--seed", c.seed, "Seed of the randomized checks")
      ->check(kInteger)->capture_default_str();
  app.add_option("--gamma", c.ml_gamma, "Mittag-Leffler order gamma")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--delta", c.ml_delta, "Mittag-Leffler order delta")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--z-re,--z_re", c.z_re, "Real part of the argument")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--z-im,--z_im", c.z_im, "Imaginary part of the argument")
      ->check(kDecimal)->capture_default_str();
  app.add_option("--family", c.family, "odd, even or degenerate")
      ->transform(CLI::CheckedTransformer(kFamilies))
      ->default_str("odd");
  app.add_option("--modes", c.modes, "Number of eigenmodes to emit")
      ->check(kInteger)->capture_default_str();
  app.add_flag("--svg", c.svg, "Also write an SVG plot of the modes");
  app.add_option("--u0", c.u0, "Initial field: mode:M, even:M, triangle, file:PATH")
      ->capture_default_str();
  app.add_flag("--quick", c.quick, "Skip the slow criteria");
  app.add_flag("--inject-symbol-fault,--inject_symbol_fault",
               c.inject_symbol_fault)
      ->group("");

  for (const auto& [name, sub] : kSubcommands) {
    const char* about = sub == Subcommand::mlf      ? "Evaluate E_{gamma,delta}(z)"
                        : sub == Subcommand::eig    ? "Write box eigenmodes as CSV"
                        : sub == Subcommand::evolve ? "Propagate an initial field"
                                                    : "Run the acceptance criteria";
    app.add_subcommand(name, about)->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto chosen = app.get_subcommands();
  if (!chosen.empty()) {
    c.subcommand = kSubcommands.at(chosen.front()->get_name());
  } else if (!subcommand_key.empty()) {
    c.subcommand = kSubcommands.at(subcommand_key);
  } else {
    throw UsageError("a subcommand is required: mlf, eig, evolve or verify");
  }

  const bool path_flag = std::any_of(args.begin(), args.end(), [](const auto& a) {
    return is_flag(a, "--output-path") || is_flag(a, "--output_path");
  });
  if (!path_flag && out_env && !out_env->empty()) c.output_path = *out_env;

  validate(c);
  return c;
}

}  // namespace levyslab::cli
