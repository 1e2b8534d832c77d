#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qphase/fock.hpp"

using namespace qphase;

namespace {

using CL = std::complex<long double>;
using CVec = std::vector<CL>;
using CMat = std::vector<CVec>;

CMat lowering_matrix(int d) {
    CMat a(d, CVec(d, 0.0L));
    for (int k = 1; k < d; ++k)
        a[k - 1][k] = std::sqrt(static_cast<long double>(k));
    return a;
}

CMat raising_matrix(int d) {
    CMat adag(d, CVec(d, 0.0L));
    for (int k = 0; k + 1 < d; ++k)
        adag[k + 1][k] = std::sqrt(static_cast<long double>(k + 1));
    return adag;
}

CVec apply(const CMat& m, const CVec& v) {
    const int d = static_cast<int>(v.size());
    CVec out(d, 0.0L);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[i] += m[i][j] * v[j];
    return out;
}

// exp(c M) v by the plain Taylor series; exact here because truncated
// ladder matrices are nilpotent.
CVec exp_apply(const CMat& m, CL c, CVec v) {
    CVec acc = v;
    CVec term = v;
    const int d = static_cast<int>(v.size());
    for (int j = 1; j < d; ++j) {
        term = apply(m, term);
        bool nonzero = false;
        for (auto& t : term) {
            t *= c / static_cast<long double>(j);
            if (t != CL(0.0L, 0.0L))
                nonzero = true;
        }
        if (!nonzero)
            break;
        for (int i = 0; i < d; ++i)
            acc[i] += term[i];
    }
    return acc;
}

FockDiagonal plain_diag(std::vector<double> entries, double tail = 0.0) {
    FockDiagonal op;
    op.entries = std::move(entries);
    op.tail_bound = tail;
    return op;
}

} // namespace

TEST_CASE("displaced matrix element: closed examples") {
    CHECK(displaced_matrix_element(3, 3, {0.0, 0.0}) == std::complex<double>(1.0, 0.0));
    CHECK(displaced_matrix_element(2, 5, {0.0, 0.0}) == std::complex<double>(0.0, 0.0));

    // e^{xi a+}|0> has only the j=1 term at n=1
    const auto v10 = displaced_matrix_element(1, 0, {0.5, 0.0});
    CHECK(v10.real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v10.imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

    // diagonal polynomial 1 - |xi|^2 vanishes on the unit circle
    for (double phi : {0.0, 0.7, 2.5}) {
        const auto v = displaced_matrix_element(1, 1, std::polar(1.0, phi));
        CHECK(std::abs(v) < 1e-14);
    }
}

TEST_CASE("displaced matrix element: index range errors") {
    CHECK_THROWS_AS(displaced_matrix_element(4097, 0, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(displaced_matrix_element(0, -1, {1.0, 0.0}), DomainError);
    CHECK_NOTHROW(displaced_matrix_element(4096, 4096, {0.1, 0.0}));
}

TEST_CASE("displaced matrix element: adjoint symmetry") {
    const std::complex<double> xi(0.8, -0.45);
    for (int n : {0, 2, 7}) {
        for (int m : {1, 5, 6}) {
            const auto lhs = displaced_matrix_element(n, m, xi);
            const auto rhs = std::conj(displaced_matrix_element(m, n, -xi));
            CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("displaced matrix element vs truncated operator exponentials") {
    const int d = 64;
    const CMat a = lowering_matrix(d);
    const CMat adag = raising_matrix(d);

    std::mt19937 rng(20250809);
    std::uniform_real_distribution<double> mag(0.0, 3.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);

    for (int trial = 0; trial < 20; ++trial) {
        const std::complex<double> xi = std::polar(mag(rng), ang(rng));
        const CL xil(xi.real(), xi.imag());
        double worst = 0.0;
        for (int m = 0; m <= 32; ++m) {
            CVec v(d, 0.0L);
            v[m] = 1.0L;
            v = exp_apply(a, -std::conj(xil), v);
            v = exp_apply(adag, xil, v);
            for (int n = 0; n <= 32; ++n) {
                const auto direct = displaced_matrix_element(n, m, xi);
                const std::complex<double> brute(static_cast<double>(v[n].real()),
                                                 static_cast<double>(v[n].imag()));
                worst = std::max(worst, std::abs(direct - brute));
            }
        }
        INFO("xi = " << xi.real() << " + " << xi.imag() << "i");
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("angular average of off-diagonal elements vanishes") {
    const std::pair<int, int> pairs[] = {{0, 1}, {1, 3}, {4, 2}, {10, 17}, {25, 31}, {31, 0}};
    for (double r : {0.3, 1.0, 2.5}) {
        for (auto [n, m] : pairs) {
            std::complex<double> mean = 0.0;
            for (int j = 0; j < 32; ++j)
                mean += displaced_matrix_element(n, m, std::polar(r, 2.0 * M_PI * j / 32.0));
            mean /= 32.0;
            CHECK(std::abs(mean) < 1e-10);
        }
    }
}

TEST_CASE("displaced_matrix_all agrees with the per-element sum") {
    const std::complex<double> xi(0.7, -0.3);
    std::vector<std::complex<double>> batch;
    displaced_matrix_all(12, xi, batch);
    for (int n = 0; n < 12; ++n)
        for (int m = 0; m < 12; ++m) {
            const auto ref = displaced_matrix_element(n, m, xi);
            CHECK(std::abs(batch[n * 12 + m] - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        }
}

TEST_CASE("trace of diagonal operators") {
    CHECK(trace(plain_diag({1.0, 0.0, 0.0})) == 1.0);
    CHECK(trace(make_geometric_diagonal(2.0 / 3.0, 1.0 / 3.0, 40)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace(make_geometric_diagonal(1.5, -0.5, 60)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("geometric diagonal obeys its declared law and tail bound") {
    const auto op = make_geometric_diagonal(0.4, -0.6, 32);
    REQUIRE(op.ratio.has_value());
    double expect = 0.4;
    for (int n = 0; n < op.dim(); ++n) {
        CHECK(op.entries[n] == doctest::Approx(expect).epsilon(1e-12));
        expect *= -0.6;
    }
    CHECK(op.tail_bound == doctest::Approx(0.4 * std::pow(0.6, 32) / 0.4).epsilon(1e-12));
    CHECK(std::fabs(trace(op) - (0.4 / 1.6) * (1.0 - std::pow(-0.6, 32))) < 1e-15);
}

TEST_CASE("classify_state verdicts") {
    const auto pure = classify_state(make_geometric_diagonal(1.0, 0.0, 8));
    CHECK(pure.verdict == Verdict::PureValid);
    CHECK(pure.max_eigenvalue == 1.0);

    const auto mixed = classify_state(make_geometric_diagonal(2.0 / 3.0, 1.0 / 3.0, 40));
    CHECK(mixed.verdict == Verdict::MixedValid);
    CHECK(mixed.max_eigenvalue == doctest::Approx(2.0 / 3.0));

    const auto neg = classify_state(make_geometric_diagonal(1.5, -0.5, 60));
    CHECK(neg.verdict == Verdict::NonPositive);
    CHECK(neg.min_eigenvalue == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(neg.max_eigenvalue == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("classify_state rejects unnormalized input") {
    CHECK_THROWS_AS(classify_state(plain_diag({0.5, 0.2})), NotNormalizedError);
    // the same trace deviation is fine once the tail bound covers it
    CHECK(classify_state(plain_diag({0.5, 0.2}, 0.5)).verdict == Verdict::MixedValid);
}

TEST_CASE("strictly interior diagonals classify as mixed") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::uniform_int_distribution<int> dims(2, 16);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = dims(rng);
        std::vector<double> e(d);
        double sum = 0.0;
        for (double& x : e)
            sum += (x = u(rng));
        for (double& x : e)
            x /= sum;
        CHECK(classify_state(plain_diag(std::move(e))).verdict == Verdict::MixedValid);
    }
}

TEST_CASE("quantum moments of diagonal operators") {
    const auto vac = quantum_moments_from_operator(make_geometric_diagonal(1.0, 0.0, 8));
    CHECK(vac.mean_q == 0.0);
    CHECK(vac.mean_p == 0.0);
    CHECK(vac.var_q == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(vac.var_p == vac.var_q);

    // lambda = 1/2 Weyl entries: var = 1/(2 lambda) = 1
    const auto g1 = quantum_moments_from_operator(make_geometric_diagonal(2.0 / 3.0, 1.0 / 3.0, 60));
    CHECK(g1.var_q == doctest::Approx(1.0).epsilon(1e-12));

    // lambda = 5, s = -1 entries: var = (1 - lambda s)/(2 lambda) = 0.6
    const auto g2 = quantum_moments_from_operator(make_geometric_diagonal(10.0 / 11.0, 1.0 / 11.0, 40));
    CHECK(g2.var_q == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("quantum moments are linear in the entries") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> e1(10), e2(10);
    for (int i = 0; i < 10; ++i) {
        e1[i] = u(rng);
        e2[i] = u(rng);
    }
    const double a = 0.7, b = -1.3;
    std::vector<double> combo(10);
    for (int i = 0; i < 10; ++i)
        combo[i] = a * e1[i] + b * e2[i];
    const double lhs = quantum_moments_from_operator(plain_diag(combo)).var_q;
    const double rhs = a * quantum_moments_from_operator(plain_diag(e1)).var_q +
                       b * quantum_moments_from_operator(plain_diag(e2)).var_q;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("coarse truncation of the weighted sum is rejected") {
    CHECK_THROWS_AS(quantum_moments_from_operator(make_geometric_diagonal(0.01, 0.99, 16)),
                    TruncationTooCoarseError);
    // unknown decay law with a reported tail bound behaves the same way
    CHECK_THROWS_AS(quantum_moments_from_operator(plain_diag({0.9, 0.1}, 1e-3)),
                    TruncationTooCoarseError);
}

TEST_CASE("tail estimate from observed decay") {
    std::vector<double> geo(12);
    double e = 0.5;
    for (double& x : geo) {
        x = e;
        e *= 0.25;
    }
    const double est = estimate_tail_from_decay(geo, 1e-15);
    CHECK(est == doctest::Approx(geo.back() * 0.25 / 0.75).epsilon(1e-9));
    CHECK(estimate_tail_from_decay({1.0, 1e-17, 1e-18}, 1e-13) == doctest::Approx(1e-12));
}
