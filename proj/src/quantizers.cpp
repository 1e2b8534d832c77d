#include "qphase/quantizers.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qphase/quadrature.hpp"

namespace qphase {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;

// Integrates f over [0, inf) in fixed-width windows, stopping after two
// consecutive negligible windows. u_cap > 0 truncates the domain where the
// caller knows contributions beyond are below its noise budget.
template <class F>
double integrate_halfline(const F& f, double width, double rel_tol, double abs_floor,
                          double u_cap, int max_segments, const char* what) {
    QuadratureOptions opt;
    opt.rel_tol = 0.25 * rel_tol;
    opt.abs_tol = 0.125 * abs_floor;

    double acc = 0.0;
    double prev_mag = 0.0;
    int small_streak = 0;
    int grow_streak = 0;
    for (int k = 0; k < max_segments; ++k) {
        double a = k * width;
        double b = (k + 1) * width;
        if (u_cap > 0.0) {
            if (a >= u_cap) {
                if (small_streak == 0 &&
                    prev_mag > 1e3 * std::max(abs_floor, rel_tol * std::fabs(acc)))
                    throw QuadratureError(std::string(what) +
                                          ": no convergence before the radial cap");
                return acc;
            }
            b = std::min(b, u_cap);
        }
        const double seg = integrate_adaptive(f, a, b, opt);
        acc += seg;

        const double mag = std::fabs(seg);
        const double thresh = std::max(abs_floor, rel_tol * std::fabs(acc));
        if (mag < 0.5 * thresh) {
            if (++small_streak >= 2)
                return acc;
            grow_streak = 0;
        } else {
            small_streak = 0;
            if (k >= 3 && prev_mag > 0.0 && mag > 2.0 * prev_mag && mag > 10.0 * thresh)
                ++grow_streak;
            else
                grow_streak = 0;
            if (grow_streak >= 2)
                throw DomainError(std::string(what) + ": integral diverges on the half-line");
        }
        prev_mag = mag;
    }
    throw QuadratureError(std::string(what) + ": radial segment budget exhausted");
}

// One tensor pass of the gamma-ordered Weyl integral on [-X, X]^2 with the
// given panel count per axis, using composite Kronrod-15 nodes.
DenseOperator weyl_gamma_tensor_pass(double lambda, double gamma, int dim, double X,
                                     int panels) {
    std::vector<double> xs, ws;
    xs.reserve(static_cast<size_t>(panels) * 15);
    ws.reserve(static_cast<size_t>(panels) * 15);
    const double pw = 2.0 * X / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = -X + (p + 0.5) * pw;
        const double half = 0.5 * pw;
        xs.push_back(mid);
        ws.push_back(detail::kGK15WeightsK[7] * half);
        for (int i = 0; i < 7; ++i) {
            const double dx = half * detail::kGK15Nodes[i];
            xs.push_back(mid + dx);
            ws.push_back(detail::kGK15WeightsK[i] * half);
            xs.push_back(mid - dx);
            ws.push_back(detail::kGK15WeightsK[i] * half);
        }
    }

    DenseOperator out;
    out.dim = dim;
    out.entries.assign(static_cast<size_t>(dim) * dim, 0.0);

    const double c = 0.25 / lambda + 0.25; // Gaussian decay per axis
    std::vector<std::complex<double>> d;
    for (size_t ix = 0; ix < xs.size(); ++ix) {
        const double x = xs[ix];
        for (size_t iy = 0; iy < xs.size(); ++iy) {
            const double y = xs[iy];
            const double damp = std::exp(-c * (x * x + y * y));
            if (damp < 1e-24)
                continue;
            const double phase = 0.5 * gamma * x * y;
            const std::complex<double> w =
                ws[ix] * ws[iy] * damp / (2.0 * kPi) *
                std::complex<double>(std::cos(phase), std::sin(phase));
            // xi = -i t with t = (x + iy)/sqrt(2)
            const std::complex<double> xi(y / kSqrt2, -x / kSqrt2);
            displaced_matrix_all(dim, xi, d);
            for (size_t idx = 0; idx < out.entries.size(); ++idx)
                out.entries[idx] += w * d[idx];
        }
    }
    return out;
}

} // namespace

ClassicalGaussian::ClassicalGaussian(double lambda_) : lambda(lambda_) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw DomainError("lambda must be positive and finite");
}

OrderingParams::OrderingParams(double gamma_, double s_, bool extended)
    : gamma(gamma_), s(s_), extended_s(extended) {
    if (!(std::isfinite(gamma) && gamma >= -1.0 && gamma <= 1.0))
        throw DomainError("gamma must lie in [-1, 1]");
    if (!std::isfinite(s))
        throw DomainError("s must be finite");
    if (!extended_s && (s < -1.0 || s > 1.0))
        throw DomainError("s outside [-1, 1] requires extended_s");
}

double gaussian_fourier_radial(const ClassicalGaussian& g, double xi_abs) {
    return std::exp(-xi_abs * xi_abs / (2.0 * g.lambda)) / kPi;
}

FockDiagonal cg_gaussian_closed(const ClassicalGaussian& g, const OrderingParams& ord,
                                int dim) {
    const double denom = 1.0 + (1.0 - ord.s) * g.lambda;
    if (!(denom > 0.0))
        throw DomainError("quantization requires 1 + (1-s) lambda > 0");
    const double rho0 = 2.0 * g.lambda / denom;
    const double ratio = (1.0 - (1.0 + ord.s) * g.lambda) / denom;
    return make_geometric_diagonal(rho0, ratio, dim);
}

FockDiagonal weyl_gaussian_closed(const ClassicalGaussian& g, int dim) {
    return cg_gaussian_closed(g, OrderingParams{}, dim); // s = 0, same arithmetic
}

FockDiagonal cg_quantize_numeric(const RadialFunction& ftilde, const OrderingParams& ord,
                                 int dim, double rel_tol) {
    if (dim < 1)
        throw DomainError("dim must be >= 1");
    if (!(rel_tol > 0.0))
        throw DomainError("rel_tol must be positive");
    if (!ftilde)
        throw DomainError("ftilde must be callable");

    const double s = ord.s;
    const double abs_floor = 1e-3 * rel_tol;
    FockDiagonal op;
    op.entries.resize(dim);
    for (int n = 0; n < dim; ++n) {
        auto integrand = [&, n](double u) {
            const double kernel = std::exp(-0.5 * (1.0 - s) * u * u);
            const double diag = displaced_matrix_element(n, n, {u, 0.0}).real();
            return 2.0 * kPi * u * ftilde(u) * kernel * diag;
        };
        op.entries[n] = integrate_halfline(integrand, 4.0, rel_tol, abs_floor, 0.0, 64,
                                           "cg_quantize_numeric");
    }
    op.tail_bound = estimate_tail_from_decay(op.entries, 10.0 * abs_floor);
    return op;
}

DenseOperator weyl_gamma_quantize_numeric(const ClassicalGaussian& g, double gamma, int dim,
                                          double rel_tol) {
    if (dim < 1 || dim > 64)
        throw DomainError("dense Weyl quantization limited to dim <= 64");
    if (!(std::isfinite(gamma) && gamma >= -1.0 && gamma <= 1.0))
        throw DomainError("gamma must lie in [-1, 1]");
    if (!(rel_tol > 0.0))
        throw DomainError("rel_tol must be positive");

    // square cutoff: Gaussian damping must beat the |t|^(2 dim) growth
    const double c = 0.25 / g.lambda + 0.25;
    double X = std::sqrt(45.0 / c);
    while (-c * X * X + 2.0 * dim * std::log(std::max(X, 1.0)) > -45.0)
        X *= 1.3;

    DenseOperator prev;
    for (int panels : {6, 12, 24, 48}) {
        DenseOperator cur = weyl_gamma_tensor_pass(g.lambda, gamma, dim, X, panels);
        if (prev.dim == dim) {
            double max_diff = 0.0;
            double scale = 1.0;
            for (size_t i = 0; i < cur.entries.size(); ++i) {
                max_diff = std::max(max_diff, std::abs(cur.entries[i] - prev.entries[i]));
                scale = std::max(scale, std::abs(cur.entries[i]));
            }
            if (max_diff <= std::max(1e-13, rel_tol * scale))
                return cur;
        }
        prev = std::move(cur);
    }
    throw QuadratureError("weyl_gamma_quantize_numeric: tensor grid did not converge");
}

double hermiticity_defect(const DenseOperator& op) {
    if (op.dim < 1 || op.entries.size() != static_cast<size_t>(op.dim) * op.dim)
        throw DomainError("operator storage does not match its dimension");
    double defect = 0.0;
    for (int n = 0; n < op.dim; ++n)
        for (int m = 0; m <= n; ++m)
            defect = std::max(defect, std::abs(op.at(n, m) - std::conj(op.at(m, n))));
    return defect;
}

double dequantize_point(const FockDiagonal& op, const OrderingParams& ord,
                        std::complex<double> z, double rel_tol) {
    if (op.dim() < 1)
        throw DomainError("operator must have dim >= 1");
    const double az = std::abs(z);
    if (!(az <= 20.0))
        throw DomainError("|z| must not exceed 20");
    if (!(rel_tol > 0.0))
        throw DomainError("rel_tol must be positive");

    const double s = ord.s;
    const int dim = op.dim();

    // For s < 0 the rounding noise of the Laguerre sum grows like
    // eps * |rho_00| * exp(kappa x); integrate only while it stays below
    // the error budget. kappa from the geometric ratio when known.
    double u_cap = 0.0;
    if (op.ratio && std::fabs(*op.ratio) > 0.0 && std::fabs(*op.ratio) < 1.0 && s < 0.0) {
        const double r = std::fabs(*op.ratio);
        const double kappa = 1.0 / std::fabs(std::log(r)) - 1.0 - 0.5 * s;
        if (kappa > 0.02) {
            const double c0 = std::max(std::fabs(op.entries[0]), 1e-300);
            const double x_cap = std::log(1e-13 / (5.4e-20 * c0)) / kappa;
            u_cap = std::sqrt(std::max(36.0, x_cap));
        }
    }

    auto laguerre_sum = [&](double x) {
        // sum_n rho_n <n| e^{xi a+} e^{-xi* a} |n> at |xi|^2 = x; truncated
        // once the increments fall below rel_tol/10
        const std::complex<double> xi(std::sqrt(x), 0.0);
        double acc = 0.0;
        int small_streak = 0;
        for (int n = 0; n < dim; ++n) {
            const double term = op.entries[n] * displaced_matrix_element(n, n, xi).real();
            acc += term;
            if (n > 32) {
                if (std::fabs(term) < 0.1 * rel_tol * (1.0 + std::fabs(acc))) {
                    if (++small_streak >= 2)
                        break;
                } else {
                    small_streak = 0;
                }
            }
        }
        return acc;
    };
    auto integrand = [&](double u) {
        return u / kPi * std::exp(-0.5 * (1.0 + s) * u * u) *
               std::cyl_bessel_j(0.0, 2.0 * u * az) * laguerre_sum(u * u);
    };

    const double abs_floor = std::max(1e-12, 1e-4 * rel_tol);
    return integrate_halfline(integrand, 2.0, rel_tol, abs_floor, u_cap, 40,
                              "dequantize_point");
}

FockDiagonal delta_quantize(const OrderingParams& ord, int dim) {
    if (dim < 1)
        throw DomainError("dim must be >= 1");
    const double s = ord.s;
    if (s > -1.0) {
        std::vector<double> limiting;
        if (s < 1.0) {
            limiting.resize(dim);
            double e = 2.0 / (1.0 - s);
            const double ratio = -(1.0 + s) / (1.0 - s);
            for (int n = 0; n < dim; ++n) {
                limiting[n] = e;
                e *= ratio;
            }
        }
        throw NotQuantizableError("the delta limit is a non-positive operator for s > -1",
                                  std::move(limiting));
    }
    double ratio = -(1.0 + s) / (1.0 - s);
    if (ratio == 0.0)
        ratio = 0.0; // normalize -0 at s = -1
    return make_geometric_diagonal(2.0 / (1.0 - s), ratio, dim);
}

} // namespace qphase
