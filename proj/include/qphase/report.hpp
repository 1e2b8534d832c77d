#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qphase {

/// Machine-readable result of a quantize run. The JSON field names are
/// frozen: lambda, s, gamma, dim, diagonal, tail_bound, verdict, var_q,
/// beta, hermiticity_defect. Keys that do not apply to the chosen path
/// (gamma, hermiticity_defect) are omitted, never null.
struct QuantizeReport {
    double lambda = 0.0;
    double s = 0.0;
    std::optional<double> gamma;
    int dim = 0;
    std::vector<double> diagonal;
    double tail_bound = 0.0;
    std::string verdict;
    double var_q = 0.0;
    double beta = 0.0;
    std::optional<double> hermiticity_defect;
};

nlohmann::json report_to_json(const QuantizeReport& r);
QuantizeReport report_from_json(const nlohmann::json& j);

/// CSV rendering: `# key=value` preamble followed by an `n,rho_nn` table.
std::string report_to_csv(const QuantizeReport& r);

/// 17 significant digits, enough to reproduce the double bit pattern.
std::string format_full(double v);

} // namespace qphase
