#ifndef IODS_REPORT_HPP
#define IODS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "iods/solver.hpp"

namespace iods {

/// Human-readable report; numbers at 6 significant digits.
std::string render_text_report(const SolverReport& report);

/// Machine-readable JSON document with full-precision numbers: variables,
/// per-variable solution triples, per-slice minimizer/objective/residuals/
/// iterations/evaluations/converged, and the config echo.
std::string render_structured_report(const SolverReport& report);

/// Plot-ready samples for one variable: membership_samples with the sample
/// nearest the peak snapped onto the peak itself, so the table always
/// contains the full-membership row while keeping npoints rows.
std::vector<std::pair<double, double>> membership_table(const FuzzySolution& solution,
                                                        std::size_t variable, int npoints);

/// One CSV section per variable: a "# variable: <name>" line, an "x,mu"
/// header, then npoints rows.
std::string render_membership_csv(const SolverReport& report, int npoints);

} // namespace iods

#endif // IODS_REPORT_HPP
