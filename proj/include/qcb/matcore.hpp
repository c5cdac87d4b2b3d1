#pragma once

// Dense Hermitian linear algebra used by every other module.

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qcb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;

// Square complex matrix that is Hermitian to within kHermitianTol (relative to
// its largest entry). The stored entries are exactly symmetrized.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& m);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(const RVector& d);
  // Skips the Hermiticity check; the argument is symmetrized.
  static HermitianMatrix from_trusted(const CMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  double max_abs() const;

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double a) const;
  friend HermitianMatrix operator*(double a, const HermitianMatrix& h) { return h * a; }

 private:
  CMatrix m_;
};

struct EigenDecomposition {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors; // columns, unitary

  // U f(Λ) U†.
  HermitianMatrix apply(const std::function<double(double)>& f) const;
};

EigenDecomposition eig_hermitian(const HermitianMatrix& h);

// Eigenvalues below this are treated as zero when deciding the support.
double support_cutoff(const RVector& eigenvalues);

// rho^s for PSD rho and s in [0,1]; 0^s = 0 for s > 0 and rho^0 is the
// projector onto the support.
HermitianMatrix matrix_power(const HermitianMatrix& rho, double s);
HermitianMatrix matrix_power(const EigenDecomposition& eig, double s);

HermitianMatrix support_projector(const HermitianMatrix& rho);

// Projector onto the eigenspace whose eigenvalues satisfy `keep`.
HermitianMatrix spectral_projector(const HermitianMatrix& h,
                                   const std::function<bool(double)>& keep);

double trace_norm(const HermitianMatrix& a);

// {a > 0} a
HermitianMatrix positive_part(const HermitianMatrix& a);

// Re tr(a b) for Hermitian a, b.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);
double trace_product(const CMatrix& a, const CMatrix& b);

// Kronecker product of two complex matrices.
CMatrix kron(const CMatrix& a, const CMatrix& b);

const CMatrix& pauli(int k);  // k = 0 (x), 1 (y), 2 (z)

}  // namespace qcb
