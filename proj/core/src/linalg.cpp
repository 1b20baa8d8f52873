#include "bga/linalg.hpp"

#include <algorithm>

namespace bga {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_deviation(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

std::size_t numerical_rank(const ComplexMatrix& a, double threshold) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  return static_cast<std::size_t>((s.array() > threshold).count());
}

std::size_t intersection_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  return numerical_rank(a) + numerical_rank(b) - numerical_rank(ab);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix range_basis(const ComplexMatrix& a, double threshold) {
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a);
  qr.setThreshold(threshold);
  const auto r = qr.rank();
  ComplexMatrix q = qr.householderQ();
  return q.leftCols(r);
}

ComplexMatrix kernel_basis(const ComplexMatrix& a, double threshold) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const auto r = static_cast<Eigen::Index>((svd.singularValues().array() > threshold).count());
  return svd.matrixV().rightCols(a.cols() - r);
}

double smallest_singular_value(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().minCoeff();
}

}  // namespace bga
