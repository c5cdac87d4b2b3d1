#include "qcb/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

CMatrix symmetrize(const CMatrix& m) { return (m + m.adjoint()) * 0.5; }

}  // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("Hermitian matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw ValidationError("matrix has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max |a_ij - conj(a_ji)| = " << asym << ")";
    throw ValidationError(os.str());
  }
  m_ = symmetrize(m);
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return from_trusted(CMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return from_trusted(CMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  return from_trusted(d.cast<Complex>().asDiagonal());
}

HermitianMatrix HermitianMatrix::from_trusted(const CMatrix& m) {
  HermitianMatrix h;
  h.m_ = symmetrize(m);
  return h;
}

double HermitianMatrix::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw ValidationError("dimension mismatch in sum");
  return from_trusted(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw ValidationError("dimension mismatch in difference");
  return from_trusted(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double a) const { return from_trusted(m_ * a); }

HermitianMatrix EigenDecomposition::apply(const std::function<double(double)>& f) const {
  const int n = static_cast<int>(eigenvalues.size());
  RVector fv(n);
  for (int i = 0; i < n; ++i) fv(i) = f(eigenvalues(i));
  return HermitianMatrix::from_trusted(eigenvectors * fv.cast<Complex>().asDiagonal() *
                                       eigenvectors.adjoint());
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double support_cutoff(const RVector& eigenvalues) {
  const double top = eigenvalues.size() ? eigenvalues.maxCoeff() : 0.0;
  return 1e-12 * std::max(top, 0.0);
}

namespace {

void require_psd(const RVector& ev) {
  const double tol = 1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() < -tol) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (min eigenvalue " << ev.minCoeff() << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

HermitianMatrix matrix_power(const EigenDecomposition& eig, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("matrix_power exponent must lie in [0,1]");
  require_psd(eig.eigenvalues);
  const double cut = support_cutoff(eig.eigenvalues);
  if (s == 1.0) {
    return eig.apply([](double x) { return std::max(x, 0.0); });
  }
  return eig.apply([cut, s](double x) { return x > cut ? std::pow(x, s) : 0.0; });
}

HermitianMatrix matrix_power(const HermitianMatrix& rho, double s) {
  return matrix_power(eig_hermitian(rho), s);
}

HermitianMatrix support_projector(const HermitianMatrix& rho) { return matrix_power(rho, 0.0); }

HermitianMatrix spectral_projector(const HermitianMatrix& h,
                                   const std::function<bool(double)>& keep) {
  const auto eig = eig_hermitian(h);
  return eig.apply([&keep](double x) { return keep(x) ? 1.0 : 0.0; });
}

double trace_norm(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

HermitianMatrix positive_part(const HermitianMatrix& a) {
  return eig_hermitian(a).apply([](double x) { return x > 0.0 ? x : 0.0; });
}

double trace_product(const CMatrix& a, const CMatrix& b) {
  // tr(ab) = sum_ij a_ij b_ji
  return (a.array() * b.transpose().array()).sum().real();
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  return trace_product(a.matrix(), b.matrix());
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const CMatrix& pauli(int k) {
  static const CMatrix sx = (CMatrix(2, 2) << 0, 1, 1, 0).finished();
  static const CMatrix sy =
      (CMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const CMatrix sz = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
  switch (k) {
    case 0: return sx;
    case 1: return sy;
    case 2: return sz;
    default: throw ValidationError("Pauli index must be 0, 1 or 2");
  }
}

}  // namespace qcb
