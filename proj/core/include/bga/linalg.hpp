#pragma once

// Dense complex helpers shared by the representation and generic-position layers.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace bga {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Absolute tolerance for every floating relation check.
inline constexpr double kTau = 1e-9;

/// Singular values below this are treated as zero by numerical_rank.
inline constexpr double kRankThreshold = 1e-8;

/// Entrywise max-norm of a - b; 0 for empty matrices.
double max_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

std::size_t numerical_rank(const ComplexMatrix& a, double threshold = kRankThreshold);

/// dim(range(a) ∩ range(b)) = rank a + rank b - rank [a|b].
std::size_t intersection_dim(const ComplexMatrix& a, const ComplexMatrix& b);

/// Positive square root of a Hermitian positive semidefinite matrix;
/// negative rounding eigenvalues are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Unitary polar factor W of a = W |a|, via the SVD.
ComplexMatrix polar_unitary(const ComplexMatrix& a);

/// Orthonormal basis (columns) of range(a), from column-pivoted QR.
ComplexMatrix range_basis(const ComplexMatrix& a, double threshold = kRankThreshold);

/// Orthonormal basis of ker(a), from the SVD.
ComplexMatrix kernel_basis(const ComplexMatrix& a, double threshold = kRankThreshold);

double smallest_singular_value(const ComplexMatrix& a);

}  // namespace bga
