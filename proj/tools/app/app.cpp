#include "app.hpp"

#include "acceptance.hpp"
#include "csv.hpp"
#include "emit.hpp"
#include "levyslab/errors.hpp"
#include "levyslab/special_functions.hpp"

namespace levyslab::cli {

namespace {

// Writes the files and echoes the summary table to `out`.
void write_and_report(const RunConfig& cfg, const std::vector<OutputFile>& files,
                      const std::string& summary_name, std::ostream& out) {
  write_outputs(cfg.output_path, files);
  for (const auto& f : files) {
    if (f.name == summary_name) out << f.content;
  }
}

}  // namespace

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto results =
      run_suite({cfg.seed, cfg.quick, cfg.inject_symbol_fault});
  out << format_summary(results);
  return suite_exit_code(results);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& out_env) {
  try {
    const RunConfig cfg = parse_config(args, out_env);
    switch (cfg.subcommand) {
      case Subcommand::mlf:
        out << emit_mlf(cfg);
        return kOk;
      case Subcommand::eig:
        write_and_report(cfg, emit_eig(cfg),
                         std::string("eig_") + to_string(cfg.family) + "_summary.csv", out);
        return kOk;
      case Subcommand::evolve:
        write_and_report(cfg, emit_evolve(cfg), "evolve_norm.csv", out);
        return kOk;
      case Subcommand::verify:
        return run_verify(cfg, out);
    }
    return kFailure;
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const UsageError& e) {
    err << "levyslab: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "levyslab: " << e.what() << "\n";
    return kIo;
  } catch (const ParityError& e) {
    err << "levyslab: initial field is not odd, even part magnitude "
        << format_number(e.even_part()) << "\n";
    return kParity;
  } catch (const NonConvergence& e) {
    err << "levyslab: " << e.what() << " (best estimate "
        << format_number(e.best_effort().value.real()) << ","
        << format_number(e.best_effort().value.imag()) << " +- "
        << format_number(e.best_effort().est_abs_error) << ")\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "levyslab: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace levyslab::cli
