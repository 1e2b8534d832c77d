#include "qphase/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qphase {

namespace {

struct Kahan {
    double sum = 0.0, carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double trapezoid_weight(int i, int n, double h) {
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

} // namespace

GridDensity make_grid_density(double q_min, double q_max, double p_min, double p_max,
                              int nq, int np, std::vector<double> values) {
    if (!(q_min < q_max) || !(p_min < p_max))
        throw DomainError("grid bounds must satisfy q_min < q_max and p_min < p_max");
    if (nq < 2 || np < 2)
        throw DomainError("grid needs at least 2 points per axis");
    if (values.size() != static_cast<size_t>(nq) * np)
        throw DomainError("values size does not match nq * np");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("density values must be finite and nonnegative");

    GridDensity d;
    d.q_min = q_min;
    d.q_max = q_max;
    d.p_min = p_min;
    d.p_max = p_max;
    d.nq = nq;
    d.np = np;
    d.values = std::move(values);

    const double hq = (q_max - q_min) / (nq - 1);
    const double hp = (p_max - p_min) / (np - 1);
    Kahan integral;
    for (int iq = 0; iq < nq; ++iq) {
        const double wq = trapezoid_weight(iq, nq, hq);
        for (int ip = 0; ip < np; ++ip)
            integral.add(wq * trapezoid_weight(ip, np, hp) * d.value(iq, ip));
    }
    d.raw_integral = integral.sum;
    if (!(d.raw_integral > 1e-12))
        throw DomainError("density integral below 1e-12; not normalizable");
    if (std::fabs(d.raw_integral - 1.0) > 1e-6) {
        for (double& v : d.values)
            v /= d.raw_integral;
        d.renormalized = true;
    }
    return d;
}

UncertaintySummary make_uncertainty_summary(double mean_q, double mean_p, double var_q,
                                            double var_p) {
    if (!(var_q >= 0.0) || !(var_p >= 0.0))
        throw DomainError("variances must be nonnegative");
    UncertaintySummary u;
    u.mean_q = mean_q;
    u.mean_p = mean_p;
    u.var_q = var_q;
    u.var_p = var_p;
    u.sum_vars = var_q + var_p;
    u.product = std::sqrt(var_q) * std::sqrt(var_p);
    return u;
}

double critical_lambda(double s) {
    if (!std::isfinite(s))
        throw DomainError("s must be finite");
    if (s <= -1.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / (1.0 + s);
}

Classification classify_parameters(double lambda, const OrderingParams& ord) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw DomainError("lambda must be positive and finite");
    const double denom = 1.0 + (1.0 - ord.s) * lambda;
    if (!(denom > 0.0))
        throw DomainError("quantization requires 1 + (1-s) lambda > 0");

    const double lc = critical_lambda(ord.s);
    const double rho0 = 2.0 * lambda / denom;
    const double ratio = (1.0 - (1.0 + ord.s) * lambda) / denom;

    if (std::isfinite(lc) && std::fabs(lambda - lc) <= 1e-12 * lc)
        return {Verdict::PureValid, 0.0, 1.0};
    if (lambda < lc)
        return {Verdict::MixedValid, 0.0, rho0}; // spectrum rho0 r^n, r in (0,1)
    const double min_e = (std::fabs(ratio) < 1.0)
                             ? rho0 * ratio
                             : -std::numeric_limits<double>::infinity();
    return {Verdict::NonPositive, min_e, rho0};
}

MomentCheck quantum_moments(double lambda, const OrderingParams& ord) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw DomainError("lambda must be positive and finite");
    // (1 - lambda s)/(2 lambda), written so the boundary gives exactly 1/2
    const double var_q = 0.5 / lambda - 0.5 * ord.s;
    return {var_q, var_q >= 0.5 - 1e-12};
}

double beta_from_lambda(double lambda, double s) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw DomainError("lambda must be positive and finite");
    return 0.5 * (1.0 / lambda - s - 1.0);
}

double lambda_from_beta(double beta, double s) {
    const double denom = 2.0 * beta + 1.0 + s;
    if (!(denom > 0.0))
        throw DomainError("no finite lambda: 2 beta + 1 + s must be positive");
    return 1.0 / denom;
}

UncertaintySummary classical_moments_from_grid(const GridDensity& d) {
    const double hq = (d.q_max - d.q_min) / (d.nq - 1);
    const double hp = (d.p_max - d.p_min) / (d.np - 1);

    Kahan norm, acc_q, acc_p;
    for (int iq = 0; iq < d.nq; ++iq) {
        const double wq = trapezoid_weight(iq, d.nq, hq);
        const double q = d.q_at(iq);
        for (int ip = 0; ip < d.np; ++ip) {
            const double w = wq * trapezoid_weight(ip, d.np, hp) * d.value(iq, ip);
            norm.add(w);
            acc_q.add(w * q);
            acc_p.add(w * d.p_at(ip));
        }
    }
    if (!(norm.sum > 1e-12))
        throw DomainError("density integral below 1e-12; not normalizable");
    const double mean_q = acc_q.sum / norm.sum;
    const double mean_p = acc_p.sum / norm.sum;

    Kahan acc_qq, acc_pp;
    for (int iq = 0; iq < d.nq; ++iq) {
        const double wq = trapezoid_weight(iq, d.nq, hq);
        const double dq = d.q_at(iq) - mean_q;
        for (int ip = 0; ip < d.np; ++ip) {
            const double w = wq * trapezoid_weight(ip, d.np, hp) * d.value(iq, ip);
            acc_qq.add(w * dq * dq);
            const double dp = d.p_at(ip) - mean_p;
            acc_pp.add(w * dp * dp);
        }
    }
    return make_uncertainty_summary(mean_q, mean_p, acc_qq.sum / norm.sum,
                                    acc_pp.sum / norm.sum);
}

ConditionResult uncertainty_condition(const UncertaintySummary& u, double s) {
    if (!std::isfinite(s))
        throw DomainError("s must be finite");
    const double threshold = 1.0 + s;
    return {u.sum_vars >= threshold - 1e-12, u.sum_vars - threshold};
}

bool gaussification_positive(const CovarianceMatrix2x2& v) {
    if (!(v.vqq >= 0.0) || !(v.vpp >= 0.0))
        throw DomainError("covariance diagonal must be nonnegative");
    if (v.vqp * v.vqp > v.vqq * v.vpp * (1.0 + 1e-12) + 1e-300)
        throw DomainError("|vqp| exceeds sqrt(vqq vpp); not a covariance matrix");
    return v.vqq * v.vpp - v.vqp * v.vqp >= 0.25 - 1e-12;
}

} // namespace qphase
