#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qphase/errors.hpp"

namespace qphase {

// Negative eigenvalues above -kTolPos are attributed to rounding: the
// closed forms are exact rationals in (lambda, s), so genuine negativity
// never sits at machine scale.
inline constexpr double kTolPos = 1e-12;

// Range of the log-factorial table backing the displaced matrix elements.
inline constexpr int kMaxFockIndex = 4096;

/// Truncated diagonal operator in the Fock basis. tail_bound bounds the
/// trace mass beyond the truncation. ratio is set when the entries follow
/// a geometric law rho_nn = rho_00 * ratio^n.
struct FockDiagonal {
    std::vector<double> entries;
    double tail_bound = 0.0;
    std::optional<double> ratio;

    int dim() const noexcept { return static_cast<int>(entries.size()); }
};

/// Dense Fock-basis operator; only needed for the gamma != 0 Weyl map,
/// which is genuinely non-diagonal.
struct DenseOperator {
    int dim = 0;
    std::vector<std::complex<double>> entries; // row-major dim x dim

    std::complex<double>& at(int n, int m) { return entries[static_cast<size_t>(n) * dim + m]; }
    const std::complex<double>& at(int n, int m) const {
        return entries[static_cast<size_t>(n) * dim + m];
    }
};

enum class Verdict { PureValid, MixedValid, NonPositive };

/// Stable lowercase name used in reports: "pure", "mixed", "nonpositive".
const char* verdict_name(Verdict v);

struct Classification {
    Verdict verdict;
    double min_eigenvalue;
    double max_eigenvalue;
};

struct OperatorMoments {
    double mean_q;
    double mean_p;
    double var_q;
    double var_p;
};

/// ln(n!) for 0 <= n <= kMaxFockIndex; throws DomainError outside range.
double log_factorial(int n);

/// <n| e^{xi a^dag} e^{-conj(xi) a} |m>, evaluated as the exact finite
/// double sum. The alternating sum runs through a term-ratio recurrence in
/// extended precision to control cancellation.
std::complex<double> displaced_matrix_element(int n, int m, std::complex<double> xi);

/// Batched form of displaced_matrix_element: fills out (row-major dim*dim)
/// with <n| e^{xi a^dag} e^{-conj(xi) a} |m> for all n, m < dim, sharing the
/// power series across elements. Requires dim <= 128.
void displaced_matrix_all(int dim, std::complex<double> xi,
                          std::vector<std::complex<double>>& out);

/// Geometric-decay tail estimate for an entries vector whose law is not
/// known analytically; noise_floor screens entries that are pure rounding.
double estimate_tail_from_decay(const std::vector<double>& entries, double noise_floor);

/// Sum of the diagonal entries (compensated); does not include tail_bound.
double trace(const FockDiagonal& op);

/// Eigenvalues of a diagonal operator are its entries. NonPositive iff the
/// smallest entry is below -kTolPos; the purity band is widened by
/// tail_bound. Requires |trace - 1| <= 1e-9 + tail_bound.
Classification classify_state(const FockDiagonal& op);

/// First moments vanish for diagonal operators; var_q = var_p =
/// (1/2) sum_n (2n+1) entries[n]. Throws TruncationTooCoarse when the
/// bound on the truncated part of the weighted sum exceeds 1e-8.
OperatorMoments quantum_moments_from_operator(const FockDiagonal& op);

/// |first| * |r|^dim / (1 - |r|) for |r| < 1, +infinity otherwise.
double geometric_tail_bound(double first_entry, double ratio, int dim);

/// Builds entries[n] = first * ratio^n with the geometric tail bound.
/// Throws DomainError if dim < 1 or the entries overflow double range.
FockDiagonal make_geometric_diagonal(double first_entry, double ratio, int dim);

} // namespace qphase
