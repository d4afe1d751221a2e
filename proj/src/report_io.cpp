#include "mem/report_io.hpp"

#include <cstdio>
#include <ostream>

#include "mem/errors.hpp"

namespace mem {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_report_csv(std::ostream& out, const ConvergenceReport& report) {
  const bool surrogate = !report.e1_surrogate.empty();
  out << "N,E,gamma1,gamma2" << (surrogate ? ",E1_surrogate" : "") << "\n";
  for (std::size_t i = 0; i < report.n_values.size(); ++i) {
    out << report.n_values[i] << ',' << format_real(report.error[i]) << ',' << format_real(report.gamma1[i])
        << ',' << format_real(report.gamma2[i]);
    if (surrogate) out << ',' << format_real(report.e1_surrogate[i]);
    out << "\n";
  }
}

void write_coefficients_csv(std::ostream& out, const CoefficientVector& coefficients) {
  out << "p,m,re,im\n";
  const int n = coefficients.truncation();
  for (int p = 0; p < coefficients.cylinders(); ++p)
    for (int m = -n; m <= n; ++m)
      out << p << ',' << m << ',' << format_real(coefficients(p, m).real()) << ','
          << format_real(coefficients(p, m).imag()) << "\n";
}

void write_bounds_csv(std::ostream& out, const std::vector<int>& n_values, const std::vector<double>& g1,
                      const std::vector<double>& g2) {
  if (g1.size() != n_values.size() || g2.size() != n_values.size())
    throw DimensionError("bounds columns differ in length");
  out << "N,gamma1,gamma2\n";
  for (std::size_t i = 0; i < n_values.size(); ++i)
    out << n_values[i] << ',' << format_real(g1[i]) << ',' << format_real(g2[i]) << "\n";
}

void write_grid_csv(std::ostream& out, const std::vector<FieldSample>& samples) {
  out << "x,y,re_total,im_total,abs_total,inside\n";
  for (const auto& s : samples)
    out << format_real(s.point.x()) << ',' << format_real(s.point.y()) << ',' << format_real(s.u_total.real())
        << ',' << format_real(s.u_total.imag()) << ',' << format_real(std::abs(s.u_total)) << ','
        << (s.inside ? 1 : 0) << "\n";
}

void write_sweep_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title,
                             bool with_surrogate) {
  out << "set datafile separator ','\n"
      << "set logscale y\n"
      << "set format y '10^{%L}'\n"
      << "set xlabel 'N'\n"
      << "set key top right\n"
      << "set title '" << title << "'\n"
      << "set terminal pngcairo size 800,600\n"
      << "set output '" << csv_path << ".png'\n"
      << "plot '" << csv_path << "' every ::1 using 1:2 with linespoints title 'E(N)', \\\n"
      << "     '' every ::1 using 1:3 with lines dashtype 2 title 'gamma1(N)', \\\n"
      << "     '' every ::1 using 1:4 with lines dashtype 3 title 'gamma2(N)'";
  if (with_surrogate) out << ", \\\n     '' every ::1 using 1:5 with linespoints title 'E1 surrogate'";
  out << "\n";
}

void write_field_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title) {
  out << "set datafile separator ','\n"
      << "set view map\n"
      << "set size ratio -1\n"
      << "set title '" << title << "'\n"
      << "set terminal pngcairo size 800,800\n"
      << "set output '" << csv_path << ".png'\n"
      << "plot '" << csv_path << "' every ::1 using 1:2:($6 > 0 ? NaN : $5) with image notitle\n";
}

}  // namespace mem
