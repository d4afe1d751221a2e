#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mem/analysis.hpp"
#include "mem/field.hpp"

/// CSV writers. Every real is printed as %.16e (17 significant digits), so
/// identical inputs give byte-identical files.
namespace mem {

std::string format_real(double v);

/// Header N,E,gamma1,gamma2 plus E1_surrogate when the report carries it.
void write_report_csv(std::ostream& out, const ConvergenceReport& report);

/// Header p,m,re,im.
void write_coefficients_csv(std::ostream& out, const CoefficientVector& coefficients);

/// Header N,gamma1,gamma2.
void write_bounds_csv(std::ostream& out, const std::vector<int>& n_values, const std::vector<double>& g1,
                      const std::vector<double>& g2);

/// Header x,y,re_total,im_total,abs_total,inside.
void write_grid_csv(std::ostream& out, const std::vector<FieldSample>& samples);

/// gnuplot script plotting E, gamma1, gamma2 on a log axis from a report CSV.
void write_sweep_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title,
                             bool with_surrogate);

/// gnuplot script drawing |u| from a grid CSV as a heat map.
void write_field_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title);

}  // namespace mem
