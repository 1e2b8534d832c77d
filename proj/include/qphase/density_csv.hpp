#pragma once

#include <iosfwd>
#include <string>

#include "qphase/analysis.hpp"

namespace qphase {

/// Reads the GridDensity CSV format: header `q,p,rho`, rows row-major with
/// q outer and p inner, `#` comment lines, `.` decimal point. Structural
/// problems raise CsvError carrying the 1-based line number; semantic
/// density problems (negative or non-normalizable values) raise DomainError.
GridDensity load_grid_density_csv(std::istream& in);
GridDensity load_grid_density_csv_file(const std::string& path);

void write_grid_density_csv(std::ostream& out, const GridDensity& d);

} // namespace qphase
