#pragma once

#include <vector>

#include "qphase/fock.hpp"
#include "qphase/quantizers.hpp"

namespace qphase {

/// Classical density tabulated on a uniform rectangular (q, p) grid,
/// row-major with q outer and p inner. Normalized on construction;
/// renormalized flags when the raw trapezoid integral was off by more
/// than 1e-6.
struct GridDensity {
    double q_min = 0.0, q_max = 0.0;
    double p_min = 0.0, p_max = 0.0;
    int nq = 0, np = 0;
    std::vector<double> values;
    bool renormalized = false;
    double raw_integral = 0.0;

    double value(int iq, int ip) const {
        return values[static_cast<size_t>(iq) * np + ip];
    }
    double q_at(int iq) const { return q_min + (q_max - q_min) * iq / (nq - 1); }
    double p_at(int ip) const { return p_min + (p_max - p_min) * ip / (np - 1); }
};

/// Validates bounds/shape/nonnegativity, and normalizes the trapezoid
/// integral to 1. Throws DomainError when the density is not normalizable.
GridDensity make_grid_density(double q_min, double q_max, double p_min, double p_max,
                              int nq, int np, std::vector<double> values);

struct UncertaintySummary {
    double mean_q = 0.0, mean_p = 0.0;
    double var_q = 0.0, var_p = 0.0;
    double sum_vars = 0.0;            // var_q + var_p
    double product = 0.0;             // sqrt(var_q) * sqrt(var_p)
};

UncertaintySummary make_uncertainty_summary(double mean_q, double mean_p, double var_q,
                                            double var_p);

/// Symmetric 2x2 covariance in the half-anticommutator convention: the
/// vacuum is diag(1/2, 1/2).
struct CovarianceMatrix2x2 {
    double vqq = 0.0, vpp = 0.0, vqp = 0.0;
};

/// Critical line lambda_c(s) = (1+s)^{-1}; +infinity for s <= -1, where
/// every Gaussian (including the delta limit) quantizes to a valid state.
double critical_lambda(double s);

/// Parameter-level verdict: PureValid at lambda = lambda_c(s) (relative
/// 1e-12), MixedValid below, NonPositive above. Matches classify_state of
/// the closed-form operator.
Classification classify_parameters(double lambda, const OrderingParams& ord);

struct MomentCheck {
    double var_q;
    bool heisenberg_ok;
};

/// var_q = (1 - lambda s) / (2 lambda); the Heisenberg bound var_q >= 1/2
/// holds exactly when lambda <= lambda_c(s).
MomentCheck quantum_moments(double lambda, const OrderingParams& ord);

/// Thermal correspondence beta = (1/lambda - s - 1)/2; beta >= 0 iff
/// lambda <= lambda_c(s).
double beta_from_lambda(double lambda, double s);

/// Inverse of beta_from_lambda: lambda = (2 beta + 1 + s)^{-1}.
double lambda_from_beta(double beta, double s);

/// Means and variances of a grid density via 2D trapezoid quadrature.
UncertaintySummary classical_moments_from_grid(const GridDensity& d);

struct ConditionResult {
    bool passes;
    double margin;
};

/// Necessary classical condition var_q + var_p >= 1 + s. Failing it
/// certifies a non-positive quantization; passing is not sufficient.
ConditionResult uncertainty_condition(const UncertaintySummary& u, double s);

/// Covariance positivity det V >= 1/4 (with nonnegative diagonal), the
/// validity test for the Gaussification of a state.
bool gaussification_positive(const CovarianceMatrix2x2& v);

} // namespace qphase
