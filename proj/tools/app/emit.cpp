#include "emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "levyslab/eigenbox.hpp"
#include "levyslab/paraxial_solver.hpp"
#include "levyslab/special_functions.hpp"
#include "transverse.hpp"

namespace levyslab::cli {

namespace {

using LongSamples = BasicSamples<long double>;

Grid1D make_grid(const RunConfig& cfg) {
  return Grid1D(cfg.L, static_cast<std::size_t>(cfg.n_grid));
}

// Table of one mode against its operator image.
std::string mode_table(const LongSamples& psi, const LongSamples& applied,
                       double eigenvalue) {
  Csv csv{"r", "psi_analytic", "psi_operator_over_e", "diff"};
  const auto& grid = psi.grid();
  const long double e = eigenvalue;
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const long double a = psi[j].real();
    const long double h = applied[j].real() / e;
    csv.row(grid.point(j), static_cast<double>(a), static_cast<double>(h),
            static_cast<double>(h - a));
  }
  return csv.text();
}

std::vector<double> real_parts(const LongSamples& s) {
  std::vector<double> out(s.grid().n_points());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = static_cast<double>(s[j].real());
  }
  return out;
}

std::vector<double> grid_points(const Grid1D& grid) {
  std::vector<double> x(grid.n_points());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = grid.point(j);
  return x;
}

double odd_triangle(double r, double L) {
  const double s = std::fabs(r);
  const double tri = 1.0 - std::fabs(2.0 * s / L - 1.0);
  return r < 0.0 ? -tri : tri;
}

ComplexSamples field_from_file(const std::string& path, const Grid1D& grid) {
  const std::string text = read_file(path);
  NumericTable table;
  try {
    table = parse_numeric_csv(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("initial field file '" + path + "': " + e.what());
  }
  const int r_col = table.column("r");
  const int re_col = table.column("re_u");
  const int im_col = table.column("im_u");
  if (r_col < 0 || re_col < 0) {
    throw UsageError("initial field file '" + path +
                     "' needs columns r and re_u (im_u optional)");
  }
  if (table.rows.size() != grid.n_points()) {
    throw UsageError("initial field file '" + path + "' has " +
                     std::to_string(table.rows.size()) + " samples, the grid has " +
                     std::to_string(grid.n_points()));
  }
  ComplexSamples::Vector v(static_cast<Eigen::Index>(grid.n_points()));
  const double tol = 1e-9 * std::max(1.0, grid.half_width());
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const auto& row = table.rows[j];
    if (std::fabs(row[r_col] - grid.point(j)) > tol) {
      throw UsageError("initial field file '" + path + "': sample " +
                       std::to_string(j) + " is not at grid point r = " +
                       format_number(grid.point(j)));
    }
    v[static_cast<Eigen::Index>(j)] = {row[re_col], im_col < 0 ? 0.0 : row[im_col]};
  }
  return ComplexSamples(grid, std::move(v));
}

std::string fixed2(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string emit_mlf(const RunConfig& cfg) {
  const MLParams p(cfg.ml_gamma, cfg.ml_delta);
  const EvalResult r = mittag_leffler(p, {cfg.z_re, cfg.z_im});
  Csv csv{"gamma", "delta", "z_re", "z_im", "re", "im", "est_abs_error", "regime"};
  csv.row(cfg.ml_gamma, cfg.ml_delta, cfg.z_re, cfg.z_im, r.value.real(),
          r.value.imag(), r.est_abs_error, to_string(r.regime));
  return csv.text();
}

std::vector<OutputFile> emit_eig(const RunConfig& cfg) {
  const Grid1D grid = make_grid(cfg);
  const TransverseOperator op{cfg.beta, cfg.inject_symbol_fault};
  const std::string family = to_string(cfg.family);
  std::vector<OutputFile> files;
  std::vector<PlotSeries> plot;

  if (cfg.family == Family::degenerate) {
    Csv summary{"m", "member", "eigenvalue", "residual", "selected"};
    for (int m = 1; m <= cfg.modes; ++m) {
      const auto pair = degenerate_pair<long double>(m, grid);
      const double e = odd_eigenvalue(m, cfg.L, cfg.beta);
      Parity chosen = Parity::odd;
      try {
        chosen = boundary_member(pair, m);
      } catch (const SelectionError&) {
      }
      for (const auto& [member, parity] :
           {std::pair{&pair.first, Parity::shifted_cos},
            std::pair{&pair.second, Parity::shifted_sin}}) {
        const std::string tag = to_string(parity);
        files.push_back({"eig_degenerate_m" + std::to_string(m) + "_" + tag + ".csv",
                         mode_table(*member, op.apply(*member), e)});
        summary.row(m, tag, e, op.residual(*member, e), chosen == parity ? 1 : 0);
        plot.push_back({"m=" + std::to_string(m) + " " + tag, real_parts(*member)});
      }
    }
    files.push_back({"eig_degenerate_summary.csv", summary.text()});
  } else {
    Csv summary{"m", "eigenvalue", "residual"};
    const bool odd = cfg.family == Family::odd;
    const int first = odd ? 1 : 0;
    for (int m = first; m < first + cfg.modes; ++m) {
      const auto mode = odd ? odd_mode<long double>(m, grid, cfg.beta)
                            : even_mode<long double>(m, grid, cfg.beta);
      files.push_back({"eig_" + family + "_m" + std::to_string(m) + ".csv",
                       mode_table(mode.samples, op.apply(mode.samples), mode.eigenvalue)});
      summary.row(m, mode.eigenvalue, op.residual(mode.samples, mode.eigenvalue));
      plot.push_back({"m=" + std::to_string(m), real_parts(mode.samples)});
    }
    files.push_back({"eig_" + family + "_summary.csv", summary.text()});
  }

  if (cfg.svg) {
    files.push_back({"eig_" + family + ".svg",
                     svg_plot(family + " eigenmodes, beta = " + format_number(cfg.beta),
                              grid_points(grid), plot)});
  }
  return files;
}

ComplexSamples initial_field(const RunConfig& cfg, const Grid1D& grid) {
  const std::string& spec = cfg.u0;
  if (spec == "triangle") {
    const double L = grid.half_width();
    return ComplexSamples::from_function(grid, [L](double r) { return odd_triangle(r, L); });
  }
  if (spec.starts_with("mode:")) {
    return odd_mode(std::stoi(spec.substr(5)), grid, cfg.beta).samples;
  }
  if (spec.starts_with("even:")) {
    return even_mode(std::stoi(spec.substr(5)), grid, cfg.beta).samples;
  }
  if (spec.starts_with("file:")) return field_from_file(spec.substr(5), grid);
  throw UsageError("unknown initial field '" + spec + "'");
}

std::vector<OutputFile> emit_evolve(const RunConfig& cfg) {
  const Grid1D grid = make_grid(cfg);
  // The time order alpha does not enter the z-evolution.
  const SlabConfig slab(cfg.L, cfg.k, cfg.omega_beta, FractionalOrders(1.0, cfg.beta),
                        cfg.mode_cutoff);
  const ComplexSamples u0 = initial_field(cfg, grid);
  const ModeExpansion ex = project_initial(u0, slab);
  const auto fields = solve_field(slab, ex, cfg.z_list);

  std::vector<OutputFile> files;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    Csv csv{"r", "re_u", "im_u", "abs2_u"};
    const auto& u = fields[i];
    for (std::size_t j = 0; j < grid.n_points(); ++j) {
      csv.row(grid.point(j), u[j].real(), u[j].imag(), std::norm(u[j]));
    }
    files.push_back({"evolve_z" + format_number(cfg.z_list[i]) + ".csv", csv.text()});
  }

  const int dom = ex.dominant_mode();
  const ZEnvelope env{std::abs(ex.coeffs[dom - 1]), slab.rate(dom), cfg.gamma()};
  Csv norms{"z", "norm", "norm_small_z", "norm_large_z"};
  for (double z : cfg.z_list) {
    norms.row(z, norm_z(env, z), norm_small_z(env, z), norm_large_z(env, z));
  }
  files.push_back({"evolve_norm.csv", norms.text()});
  return files;
}

std::string svg_plot(const std::string& title, const std::vector<double>& x,
                     const std::vector<PlotSeries>& series) {
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                        "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  constexpr double kW = 640, kH = 400, kLeft = 50, kRight = 130, kTop = 30, kBottom = 30;
  if (x.empty()) throw std::invalid_argument("svg_plot: no samples");
  double y_min = 0.0, y_max = 0.0;
  for (const auto& s : series) {
    for (double y : s.y) {
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (y_max == y_min) y_max = y_min + 1.0;
  const double x_min = x.front(), x_max = x.back() > x.front() ? x.back() : x.front() + 1.0;
  auto px = [&](double v) { return kLeft + (v - x_min) / (x_max - x_min) * (kW - kLeft - kRight); };
  auto py = [&](double v) { return kTop + (y_max - v) / (y_max - y_min) * (kH - kTop - kBottom); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
                    "viewBox=\"0 0 640 400\">\n";
  out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed2(kLeft) + "\" y=\"18\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + escape_xml(title) + "</text>\n";
  out += "<rect x=\"" + fixed2(kLeft) + "\" y=\"" + fixed2(kTop) + "\" width=\"" +
         fixed2(kW - kLeft - kRight) + "\" height=\"" + fixed2(kH - kTop - kBottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(py(0.0)) + "\" x2=\"" +
         fixed2(kW - kRight) + "\" y2=\"" + fixed2(py(0.0)) +
         "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  for (double value : {x_min, x_max}) {
    out += "<text x=\"" + fixed2(px(value)) + "\" y=\"" + fixed2(kH - 10) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           format_number(value) + "</text>\n";
  }
  out += "<text x=\"" + fixed2(kLeft - 4) + "\" y=\"" + fixed2(kTop + 4) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
         fixed2(y_max) + "</text>\n";
  out += "<text x=\"" + fixed2(kLeft - 4) + "\" y=\"" + fixed2(kH - kBottom) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
         fixed2(y_min) + "</text>\n";

  const std::size_t stride = std::max<std::size_t>(1, x.size() / 600);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    std::string pts;
    const auto& y = series[i].y;
    for (std::size_t j = 0; j < std::min(x.size(), y.size()); j += stride) {
      if (!pts.empty()) pts += ' ';
      pts += fixed2(px(x[j])) + "," + fixed2(py(y[j]));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 14.0 * static_cast<double>(i + 1);
    out += "<text x=\"" + fixed2(kW - kRight + 10) + "\" y=\"" + fixed2(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + color + "\">" +
           escape_xml(series[i].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace levyslab::cli
