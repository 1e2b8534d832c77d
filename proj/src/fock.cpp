#include "qphase/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qphase {

namespace {

const std::vector<long double>& log_factorial_table() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kMaxFockIndex + 1);
        t[0] = 0.0L;
        for (int n = 1; n <= kMaxFockIndex; ++n)
            t[n] = t[n - 1] + std::log(static_cast<long double>(n));
        return t;
    }();
    return table;
}

long double log_factorial_ld(int n) {
    if (n < 0 || n > kMaxFockIndex)
        throw DomainError("factorial index " + std::to_string(n) + " outside table range [0, " +
                          std::to_string(kMaxFockIndex) + "]");
    return log_factorial_table()[n];
}

double kahan_sum(const std::vector<double>& xs, double weight(int)) {
    double sum = 0.0, carry = 0.0;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        const double y = xs[i] * weight(i) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::PureValid: return "pure";
    case Verdict::MixedValid: return "mixed";
    case Verdict::NonPositive: return "nonpositive";
    }
    return "unknown";
}

double log_factorial(int n) { return static_cast<double>(log_factorial_ld(n)); }

std::complex<double> displaced_matrix_element(int n, int m, std::complex<double> xi) {
    if (n < 0 || n > kMaxFockIndex || m < 0 || m > kMaxFockIndex)
        throw DomainError("Fock index outside table range [0, " +
                          std::to_string(kMaxFockIndex) + "]");
    if (xi == std::complex<double>(0.0, 0.0))
        return (n == m) ? 1.0 : 0.0;

    const int lo = std::min(n, m);
    const int hi = std::max(n, m);
    const int k = hi - lo;
    const long double x = static_cast<long double>(std::norm(xi));

    // sum_{i=0}^{lo} (-1)^i x^i / (i! (i+k)! (lo-i)!), normalized so the
    // i=0 term is 1; the true prefactor is restored in log space below.
    long double term = 1.0L;
    long double sum = term;
    for (int i = 1; i <= lo; ++i) {
        term *= -x * static_cast<long double>(lo - i + 1) /
                (static_cast<long double>(i) * static_cast<long double>(i + k));
        sum += term;
    }

    // prefactor sqrt(lo! hi!) / (k! lo!) = sqrt(hi!/lo!) / k!
    long double log_mag = 0.5L * (log_factorial_ld(hi) - log_factorial_ld(lo)) -
                          log_factorial_ld(k);
    long double phase = 0.0L;
    if (k > 0) {
        // raising side carries xi^k, lowering side (-conj(xi))^k
        const std::complex<double> c = (n >= m) ? xi : -std::conj(xi);
        log_mag += k * std::log(static_cast<long double>(std::abs(c)));
        phase = k * static_cast<long double>(std::arg(c));
    }

    const long double mag = std::exp(log_mag) * sum;
    const std::complex<long double> out = std::polar(mag, phase);
    return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

void displaced_matrix_all(int dim, std::complex<double> xi,
                          std::vector<std::complex<double>>& out) {
    if (dim < 1 || dim > 128)
        throw DomainError("displaced_matrix_all supports 1 <= dim <= 128");
    out.assign(static_cast<size_t>(dim) * dim, 0.0);

    // D_{nm} = sqrt(n! m!) sum_k (xi^{n-k}/(n-k)!) ((-xi*)^{m-k}/(m-k)!) / k!
    static thread_local std::vector<std::complex<double>> up, low;
    static thread_local std::vector<double> inv_fact, sqrt_fact;
    up.resize(dim);
    low.resize(dim);
    inv_fact.resize(dim);
    sqrt_fact.resize(dim);
    up[0] = low[0] = 1.0;
    inv_fact[0] = sqrt_fact[0] = 1.0;
    for (int j = 1; j < dim; ++j) {
        up[j] = up[j - 1] * xi / static_cast<double>(j);
        low[j] = low[j - 1] * (-std::conj(xi)) / static_cast<double>(j);
        inv_fact[j] = inv_fact[j - 1] / static_cast<double>(j);
        sqrt_fact[j] = sqrt_fact[j - 1] * std::sqrt(static_cast<double>(j));
    }
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            const int lo = std::min(n, m);
            std::complex<double> sum = 0.0;
            for (int k = 0; k <= lo; ++k)
                sum += up[n - k] * low[m - k] * inv_fact[k];
            out[static_cast<size_t>(n) * dim + m] = sqrt_fact[n] * sqrt_fact[m] * sum;
        }
    }
}

double estimate_tail_from_decay(const std::vector<double>& entries, double noise_floor) {
    const int n = static_cast<int>(entries.size());
    if (n < 3)
        return n > 0 ? std::fabs(entries.back()) : 0.0;
    const double e1 = entries[n - 2];
    const double e2 = entries[n - 1];
    if (std::fabs(e1) <= noise_floor || std::fabs(e2) <= noise_floor)
        return 10.0 * noise_floor;
    const double r = std::fabs(e2 / e1);
    if (r >= 1.0)
        return std::numeric_limits<double>::infinity();
    return std::fabs(e2) * r / (1.0 - r);
}

double trace(const FockDiagonal& op) {
    return kahan_sum(op.entries, [](int) { return 1.0; });
}

Classification classify_state(const FockDiagonal& op) {
    if (op.dim() < 1)
        throw DomainError("classify_state requires dim >= 1");
    const double tr = trace(op);
    if (!(std::fabs(tr - 1.0) <= 1e-9 + op.tail_bound))
        throw NotNormalizedError("trace " + std::to_string(tr) +
                                 " deviates from 1 beyond 1e-9 + tail_bound");

    const auto [mn, mx] = std::minmax_element(op.entries.begin(), op.entries.end());
    const double min_e = *mn;
    const double max_e = *mx;

    Verdict verdict;
    if (min_e < -kTolPos) {
        verdict = Verdict::NonPositive;
    } else {
        // pure pattern: one eigenvalue at 1, the rest at 0, within the
        // rounding band widened by the truncation tail
        const double band = kTolPos + op.tail_bound;
        bool pure = std::fabs(max_e - 1.0) < band;
        if (pure) {
            bool seen_unit = false;
            for (double e : op.entries) {
                if (!seen_unit && std::fabs(e - 1.0) < band) {
                    seen_unit = true;
                    continue;
                }
                if (!(std::fabs(e) < band)) {
                    pure = false;
                    break;
                }
            }
            pure = pure && seen_unit;
        }
        verdict = pure ? Verdict::PureValid : Verdict::MixedValid;
    }
    return {verdict, min_e, max_e};
}

OperatorMoments quantum_moments_from_operator(const FockDiagonal& op) {
    if (op.dim() < 1)
        throw DomainError("quantum_moments_from_operator requires dim >= 1");

    const int N = op.dim();
    double weighted_tail;
    if (op.ratio) {
        const double r = std::fabs(*op.ratio);
        if (r < 1.0) {
            // sum_{n>=N} (2n+1) r^n = r^N ((2N+1) - (2N-1) r) / (1-r)^2
            weighted_tail = std::fabs(op.entries[0]) * std::pow(r, N) *
                            ((2.0 * N + 1.0) - (2.0 * N - 1.0) * r) / ((1.0 - r) * (1.0 - r));
        } else {
            weighted_tail = std::numeric_limits<double>::infinity();
        }
    } else {
        // no decay law known: treat the residual mass as sitting at the
        // first truncated level
        weighted_tail = (2.0 * N + 1.0) * op.tail_bound;
    }
    if (!(weighted_tail <= 1e-8))
        throw TruncationTooCoarseError(
            "tail contribution to the (2n+1)-weighted sum exceeds 1e-8");

    const double weighted = kahan_sum(op.entries, [](int n) { return 2.0 * n + 1.0; });
    const double var = 0.5 * weighted;
    return {0.0, 0.0, var, var};
}

double geometric_tail_bound(double first_entry, double ratio, int dim) {
    const double r = std::fabs(ratio);
    if (r >= 1.0)
        return std::numeric_limits<double>::infinity();
    return std::fabs(first_entry) * std::pow(r, dim) / (1.0 - r);
}

FockDiagonal make_geometric_diagonal(double first_entry, double ratio, int dim) {
    if (dim < 1)
        throw DomainError("diagonal dimension must be >= 1");
    FockDiagonal op;
    op.entries.resize(dim);
    double e = first_entry;
    for (int n = 0; n < dim; ++n) {
        op.entries[n] = e;
        e *= ratio;
    }
    if (!std::isfinite(op.entries[dim - 1]))
        throw DomainError("geometric diagonal overflows double range at dim " +
                          std::to_string(dim));
    op.tail_bound = geometric_tail_bound(first_entry, ratio, dim);
    op.ratio = ratio;
    return op;
}

} // namespace qphase
