#pragma once

#include <string>
#include <vector>

#include "csv.hpp"
#include "levyslab/grid.hpp"
#include "run_config.hpp"

namespace levyslab::cli {

/// One CSV record `gamma,delta,z_re,z_im,re,im,est_abs_error,regime` with
/// its header. NonConvergence propagates.
std::string emit_mlf(const RunConfig& cfg);

/// Per-mode tables `r,psi_analytic,psi_operator_over_e,diff` and a summary.
/// Odd modes and degenerate pairs run over m = 1..modes (both members of each
/// pair are written); even modes cos((2m+1) pi r / 2L) over m = 0..modes-1.
std::vector<OutputFile> emit_eig(const RunConfig& cfg);

/// Per-z field tables `r,re_u,im_u,abs2_u` and `evolve_norm.csv` with
/// `z,norm,norm_small_z,norm_large_z` for the dominant mode.
/// Throws ParityError for an initial field with an even part.
std::vector<OutputFile> emit_evolve(const RunConfig& cfg);

/// Samples of the initial field named by cfg.u0 on `grid`.
/// Throws UsageError for a malformed sample file and IoError if unreadable.
ComplexSamples initial_field(const RunConfig& cfg, const Grid1D& grid);

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

/// Self-contained SVG line plot of several series over a shared x axis.
std::string svg_plot(const std::string& title, const std::vector<double>& x,
                     const std::vector<PlotSeries>& series);

}  // namespace levyslab::cli
