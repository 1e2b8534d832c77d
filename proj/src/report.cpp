#include "qphase/report.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qphase {

namespace {

// JSON has no infinity literal; an unbounded tail (divergent geometric
// entries) is clamped to DBL_MAX so the frozen schema stays numeric.
double finite_or_clamped(double v) {
    if (std::isfinite(v))
        return v;
    return v > 0.0 ? DBL_MAX : -DBL_MAX;
}

} // namespace

std::string format_full(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json report_to_json(const QuantizeReport& r) {
    nlohmann::json j;
    j["lambda"] = r.lambda;
    j["s"] = r.s;
    if (r.gamma)
        j["gamma"] = *r.gamma;
    j["dim"] = r.dim;
    j["diagonal"] = r.diagonal;
    j["tail_bound"] = finite_or_clamped(r.tail_bound);
    j["verdict"] = r.verdict;
    j["var_q"] = r.var_q;
    j["beta"] = r.beta;
    if (r.hermiticity_defect)
        j["hermiticity_defect"] = *r.hermiticity_defect;
    return j;
}

QuantizeReport report_from_json(const nlohmann::json& j) {
    QuantizeReport r;
    r.lambda = j.at("lambda").get<double>();
    r.s = j.at("s").get<double>();
    if (j.contains("gamma"))
        r.gamma = j.at("gamma").get<double>();
    r.dim = j.at("dim").get<int>();
    r.diagonal = j.at("diagonal").get<std::vector<double>>();
    r.tail_bound = j.at("tail_bound").get<double>();
    r.verdict = j.at("verdict").get<std::string>();
    r.var_q = j.at("var_q").get<double>();
    r.beta = j.at("beta").get<double>();
    if (j.contains("hermiticity_defect"))
        r.hermiticity_defect = j.at("hermiticity_defect").get<double>();
    return r;
}

std::string report_to_csv(const QuantizeReport& r) {
    std::ostringstream out;
    out << "# lambda=" << format_full(r.lambda) << " s=" << format_full(r.s);
    if (r.gamma)
        out << " gamma=" << format_full(*r.gamma);
    out << " dim=" << r.dim << "\n";
    out << "# tail_bound=" << format_full(r.tail_bound) << " verdict=" << r.verdict
        << " var_q=" << format_full(r.var_q) << " beta=" << format_full(r.beta);
    if (r.hermiticity_defect)
        out << " hermiticity_defect=" << format_full(*r.hermiticity_defect);
    out << "\n";
    out << "n,rho_nn\n";
    for (size_t n = 0; n < r.diagonal.size(); ++n)
        out << n << "," << format_full(r.diagonal[n]) << "\n";
    return out.str();
}

} // namespace qphase
