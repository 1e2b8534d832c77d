#pragma once

#include <complex>
#include <functional>

#include "qphase/fock.hpp"

namespace qphase {

/// Isotropic classical density (lambda/pi) e^{-lambda (q^2 + p^2)}; the
/// squared variance is (2 lambda)^{-1}. The delta limit lambda -> inf is
/// represented separately by delta_quantize.
struct ClassicalGaussian {
    double lambda;

    explicit ClassicalGaussian(double lambda_);
};

/// gamma weights the q-p operator ordering (Weyl family); s weights the
/// annihilation/creation ordering (s = 1 normal, 0 symmetric, -1
/// antinormal). extended_s permits s outside [-1, 1].
struct OrderingParams {
    double gamma = 0.0;
    double s = 0.0;
    bool extended_s = false;

    OrderingParams() = default;
    OrderingParams(double gamma_, double s_, bool extended = false);
};

using RadialFunction = std::function<double(double)>;

/// Fourier transform of the Gaussian as a function of |xi|:
/// (1/pi) exp(-|xi|^2 / (2 lambda)).
double gaussian_fourier_radial(const ClassicalGaussian& g, double xi_abs);

/// Closed form of the symmetric (gamma = 0) Weyl quantization:
/// rho_nn = (2l/(1+l)) ((1-l)/(1+l))^n. Same arithmetic as the s = 0
/// Cahill-Glauber closed form.
FockDiagonal weyl_gaussian_closed(const ClassicalGaussian& g, int dim);

/// Closed form of the s-ordered quantization:
/// rho_nn = (2l/(1+(1-s)l)) ((1-(1+s)l)/(1+(1-s)l))^n.
FockDiagonal cg_gaussian_closed(const ClassicalGaussian& g, const OrderingParams& ord, int dim);

/// Numeric oracle for cg_gaussian_closed: radial quadrature of the
/// s-ordered kernel against an arbitrary radial Fourier transform. The
/// angular integral is analytic (radial input keeps only n = m).
FockDiagonal cg_quantize_numeric(const RadialFunction& ftilde, const OrderingParams& ord,
                                 int dim, double rel_tol = 1e-10);

/// gamma-ordered Weyl map via 2D tensor quadrature over the (x, y)
/// Fourier plane; genuinely non-diagonal (and non-Hermitian) for
/// gamma != 0. dim <= 64.
DenseOperator weyl_gamma_quantize_numeric(const ClassicalGaussian& g, double gamma, int dim,
                                          double rel_tol = 1e-9);

/// max_{n,m} |A_nm - conj(A_mn)|.
double hermiticity_defect(const DenseOperator& op);

/// Phase-space value Tr[op U_s(z)] of the inverse map at the point z; the
/// dequantizer kernel is the quantizer with s -> -s. Round-trips the
/// Gaussian quantization back to (lambda/pi) e^{-2 lambda |z|^2}.
double dequantize_point(const FockDiagonal& op, const OrderingParams& ord,
                        std::complex<double> z, double rel_tol = 1e-8);

/// lambda -> infinity limit of cg_gaussian_closed. A valid state only for
/// s <= -1 (vacuum projector at s = -1); otherwise throws
/// NotQuantizableError carrying the limiting entries.
FockDiagonal delta_quantize(const OrderingParams& ord, int dim);

} // namespace qphase
