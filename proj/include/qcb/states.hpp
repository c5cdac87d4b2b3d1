#pragma once

#include <array>
#include <span>
#include <vector>

#include "qcb/matcore.hpp"

namespace qcb {

inline constexpr double kStateTol = 1e-10;

// Hermitian, unit trace, positive semidefinite. Eigenvalues in [-1e-10, 0) are
// clipped to zero and the matrix renormalized on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& m);
  explicit DensityMatrix(const CMatrix& m) : DensityMatrix(HermitianMatrix(m)) {}

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix from_ket(const CVector& psi);
  static DensityMatrix diagonal(std::span<const double> probs);

  int dim() const { return m_.dim(); }
  const HermitianMatrix& hermitian() const { return m_; }
  const CMatrix& matrix() const { return m_.matrix(); }
  const EigenDecomposition& eig() const { return eig_; }

  double purity() const;
  bool is_pure(double tol = 1e-9) const;
  // Number of eigenvalues above the support cutoff.
  int rank() const;

  DensityMatrix conjugated(const CMatrix& unitary) const;

 private:
  HermitianMatrix m_;
  EigenDecomposition eig_;
};

// Bloch vector of a qubit, |r| <= 1.
class QubitState {
 public:
  QubitState(double x, double y, double z);
  explicit QubitState(const std::array<double, 3>& r) : QubitState(r[0], r[1], r[2]) {}

  const std::array<double, 3>& bloch() const { return r_; }
  double radius() const;
  bool is_pure(double tol = 1e-12) const { return radius() >= 1.0 - tol; }
  // Larger eigenvalue (1 + r)/2.
  double major_eigenvalue() const { return 0.5 * (1.0 + radius()); }

  DensityMatrix density() const;
  // Angle between the two Bloch vectors; zero when either vector vanishes.
  static double angle_between(const QubitState& a, const QubitState& b);

 private:
  std::array<double, 3> r_;
};

class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probs);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }

  bool operator==(const DiscreteDistribution& o) const { return p_ == o.p_; }

 private:
  std::vector<double> p_;
};

DensityMatrix density_from_bloch(const std::array<double, 3>& r);
DensityMatrix density_from_ket(const CVector& psi);
DensityMatrix density_from_matrix(const CMatrix& m);

QubitState to_bloch(const DensityMatrix& rho);

// rho^{⊗n}; requires n <= 8 and dim^n <= 4096.
DensityMatrix tensor_power_small(const DensityMatrix& rho, int n);

// Spectrum of rho as a distribution (ascending eigenvalue order).
DiscreteDistribution spectrum(const DensityMatrix& rho);

}  // namespace qcb
