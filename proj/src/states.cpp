#include "qcb/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

HermitianMatrix validated_state(const HermitianMatrix& m, EigenDecomposition& eig) {
  const double tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    std::ostringstream os;
    os.precision(15);
    os << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(os.str());
  }
  eig = eig_hermitian(m);
  const double lo = eig.eigenvalues.minCoeff();
  if (lo < -kStateTol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lo;
    throw ValidationError(os.str());
  }
  if (lo >= 0.0) return m;
  // clip tiny negatives and renormalize
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    eig.eigenvalues(i) = std::max(eig.eigenvalues(i), 0.0);
  }
  eig.eigenvalues /= eig.eigenvalues.sum();
  return eig.apply([](double x) { return x; });
}

}  // namespace

DensityMatrix::DensityMatrix(const HermitianMatrix& m) { m_ = validated_state(m, eig_); }

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(HermitianMatrix::identity(dim) * (1.0 / dim));
}

DensityMatrix DensityMatrix::from_ket(const CVector& psi) { return density_from_ket(psi); }

DensityMatrix DensityMatrix::diagonal(std::span<const double> probs) {
  RVector d(static_cast<Eigen::Index>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) d(static_cast<Eigen::Index>(i)) = probs[i];
  return DensityMatrix(HermitianMatrix::diagonal(d));
}

double DensityMatrix::purity() const { return eig_.eigenvalues.squaredNorm(); }

bool DensityMatrix::is_pure(double tol) const { return purity() >= 1.0 - tol; }

int DensityMatrix::rank() const {
  const double cut = support_cutoff(eig_.eigenvalues);
  return static_cast<int>((eig_.eigenvalues.array() > cut).count());
}

DensityMatrix DensityMatrix::conjugated(const CMatrix& u) const {
  return DensityMatrix(HermitianMatrix::from_trusted(u * m_.matrix() * u.adjoint()));
}

QubitState::QubitState(double x, double y, double z) : r_{x, y, z} {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw ValidationError("Bloch vector has non-finite components");
  }
  if (radius() > 1.0 + 1e-12) {
    std::ostringstream os;
    os.precision(15);
    os << "Bloch vector length " << radius() << " exceeds 1";
    throw ValidationError(os.str());
  }
}

double QubitState::radius() const { return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]); }

DensityMatrix QubitState::density() const { return density_from_bloch(r_); }

double QubitState::angle_between(const QubitState& a, const QubitState& b) {
  const double ra = a.radius();
  const double rb = b.radius();
  if (ra == 0.0 || rb == 0.0) return 0.0;
  double c = 0.0;
  for (int k = 0; k < 3; ++k) c += a.r_[k] * b.r_[k];
  return std::acos(std::clamp(c / (ra * rb), -1.0, 1.0));
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw ValidationError("distribution must have at least one outcome");
  for (double x : p_) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw ValidationError("probabilities must be finite and nonnegative");
  }
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(15);
    os << "probabilities sum to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

DensityMatrix density_from_bloch(const std::array<double, 3>& r) {
  QubitState q(r);  // validates the length
  CMatrix m = CMatrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k) m += r[k] * pauli(k);
  return DensityMatrix(HermitianMatrix::from_trusted(0.5 * m));
}

DensityMatrix density_from_ket(const CVector& psi) {
  if (psi.size() == 0) throw ValidationError("ket must be non-empty");
  const double n = psi.norm();
  if (!(n > 0.0) || std::abs(n - 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(15);
    os << "ket norm is " << n << ", expected 1";
    throw ValidationError(os.str());
  }
  const CVector u = psi / n;
  return DensityMatrix(HermitianMatrix::from_trusted(u * u.adjoint()));
}

DensityMatrix density_from_matrix(const CMatrix& m) { return DensityMatrix(HermitianMatrix(m)); }

QubitState to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ValidationError("to_bloch requires a 2x2 density matrix");
  std::array<double, 3> r{};
  for (int k = 0; k < 3; ++k) r[k] = trace_product(rho.matrix(), pauli(k));
  // clip rounding just past the sphere
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0 && len <= 1.0 + 1e-12) {
    for (double& x : r) x /= len;
  }
  return QubitState(r);
}

DensityMatrix tensor_power_small(const DensityMatrix& rho, int n) {
  if (n < 1 || n > 8) throw ValidationError("tensor_power_small requires 1 <= n <= 8");
  const double size = std::pow(static_cast<double>(rho.dim()), n);
  if (size > 4096.0) throw ValidationError("tensor power dimension exceeds 4096");
  CMatrix out = rho.matrix();
  for (int k = 1; k < n; ++k) out = kron(out, rho.matrix());
  return DensityMatrix(HermitianMatrix::from_trusted(out));
}

DiscreteDistribution spectrum(const DensityMatrix& rho) {
  const auto& ev = rho.eig().eigenvalues;
  std::vector<double> p(ev.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    p[i] = std::max(ev(i), 0.0);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return DiscreteDistribution(std::move(p));
}

}  // namespace qcb
