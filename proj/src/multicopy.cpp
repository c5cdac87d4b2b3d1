#include "qcb/multicopy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qcb/errors.hpp"
#include "qcb/parallel.hpp"

namespace qcb {

namespace {

void check_prior(double pi0) {
  if (!(pi0 >= 0.0 && pi0 <= 1.0)) throw ValidationError("prior must lie in [0,1]");
}

// log(p^k (1-p)^(n-k)) with 0^0 = 1.
double log_bernoulli_word(double p, int k, int n) {
  double out = 0.0;
  if (k > 0) out += k * std::log(p);
  if (n - k > 0) out += (n - k) * std::log1p(-p);
  return out;
}

}  // namespace

double classical_ncopy_error(double p, double q, int n, double pi0) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("coin probabilities must lie in [0,1]");
  }
  if (n < 1) throw ValidationError("number of copies must be at least 1");
  check_prior(pi0);
  const double pi1 = 1.0 - pi0;
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    const double a = pi0 * std::exp(log_binom + log_bernoulli_word(p, k, n));
    const double b = pi1 * std::exp(log_binom + log_bernoulli_word(q, k, n));
    total += std::min(a, b);
  }
  return total;
}

std::vector<SpinBlock> spin_blocks(int n) {
  if (n < 1) throw ValidationError("number of copies must be at least 1");
  // multiplicity indexed by 2j
  std::map<int, std::uint64_t> m{{1, 1}};
  for (int k = 2; k <= n; ++k) {
    std::map<int, std::uint64_t> next;
    for (const auto& [tj, mult] : m) {
      next[tj + 1] += mult;
      if (tj > 0) next[tj - 1] += mult;
    }
    m = std::move(next);
  }
  std::vector<SpinBlock> out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

std::array<CMatrix, 3> spin_matrices(int twice_j) {
  if (twice_j < 0) throw ValidationError("spin must be non-negative");
  const int d = twice_j + 1;
  const double j = 0.5 * twice_j;
  CMatrix jp = CMatrix::Zero(d, d);
  CMatrix jz = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const double m = j - a;
    jz(a, a) = m;
    if (a > 0) jp(a - 1, a) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const CMatrix jm = jp.adjoint();
  const Complex i(0.0, 1.0);
  return {0.5 * (jp + jm), (jp - jm) / (2.0 * i), jz};
}

namespace {

struct QubitFactor {
  double log_scale;  // (n/2) log(p p̄)
  double beta;       // log(p/p̄)
  std::array<double, 3> axis;
};

QubitFactor factorize(const QubitState& q, int n) {
  const double r = q.radius();
  const double p = 0.5 * (1.0 + r);
  const double pbar = 0.5 * (1.0 - r);
  QubitFactor f{0.5 * n * std::log(p * pbar), std::log(p / pbar), {0.0, 0.0, 1.0}};
  if (r > 0.0) {
    for (int k = 0; k < 3; ++k) f.axis[k] = q.bloch()[k] / r;
  }
  return f;
}

// (p p̄)^{n/2} exp(beta n̂·J) on the spin-j block.
CMatrix block_operator(const QubitFactor& f, const std::array<CMatrix, 3>& J) {
  const CMatrix nj = f.axis[0] * J[0] + f.axis[1] * J[1] + f.axis[2] * J[2];
  const auto eig = eig_hermitian(HermitianMatrix::from_trusted(nj));
  RVector w(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    w[k] = std::exp(f.log_scale + f.beta * eig.eigenvalues[k]);
  }
  return eig.eigenvectors * w.asDiagonal() * eig.eigenvectors.adjoint();
}

// Σ_k min(π0 <v_k|B0|v_k>, π1 <v_k|B1|v_k>) over the eigenbasis of π1 B1 - π0 B0.
double block_error(const QubitFactor& f0, const QubitFactor& f1, int twice_j, double pi0) {
  const auto J = spin_matrices(twice_j);
  const CMatrix b0 = pi0 * block_operator(f0, J);
  const CMatrix b1 = (1.0 - pi0) * block_operator(f1, J);
  const auto eig = eig_hermitian(HermitianMatrix::from_trusted(b1 - b0));
  const CMatrix& v = eig.eigenvectors;
  double total = 0.0;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double a = (v.col(k).adjoint() * b0 * v.col(k))(0, 0).real();
    const double b = (v.col(k).adjoint() * b1 * v.col(k))(0, 0).real();
    total += std::max(0.0, std::min(a, b));
  }
  return total;
}

void check_ncopy_inputs(const QubitState& q0, const QubitState& q1, int n, double pi0) {
  if (n < 1) throw ValidationError("number of copies must be at least 1");
  if (n > 64) throw ValidationError("helstrom_ncopy_qubit supports n <= 64");
  check_prior(pi0);
  if (q0.radius() > 1.0 - 1e-9 || q1.radius() > 1.0 - 1e-9) {
    throw DomainError("pure input; use pure_ncopy_error");
  }
}

template <class Map>
double helstrom_ncopy_impl(const QubitState& q0, const QubitState& q1, int n, double pi0, Map map) {
  check_ncopy_inputs(q0, q1, n, pi0);
  const auto blocks = spin_blocks(n);
  const auto f0 = factorize(q0, n);
  const auto f1 = factorize(q1, n);
  const auto per_block = map(blocks.size(), [&](std::size_t i) {
    return static_cast<double>(blocks[i].multiplicity) * block_error(f0, f1, blocks[i].twice_j, pi0);
  });
  double total = 0.0;
  for (double v : per_block) total += v;
  return total;
}

double pure_error_from_overlap(double c, int n, double pi0) {
  if (n < 1) throw ValidationError("number of copies must be at least 1");
  check_prior(pi0);
  const double x = 4.0 * pi0 * (1.0 - pi0) * std::pow(std::clamp(c, 0.0, 1.0), n);
  // (1 - sqrt(1 - x))/2 without cancellation
  return 0.5 * x / (1.0 + std::sqrt(std::max(0.0, 1.0 - x)));
}

}  // namespace

double helstrom_ncopy_qubit(const QubitState& q0, const QubitState& q1, int n, double pi0) {
  return helstrom_ncopy_impl(q0, q1, n, pi0, [](std::size_t count, auto&& f) {
    return parallel_map<double>(count, f);
  });
}

double helstrom_ncopy_qubit_serial(const QubitState& q0, const QubitState& q1, int n, double pi0) {
  return helstrom_ncopy_impl(q0, q1, n, pi0, [](std::size_t count, auto&& f) {
    return serial_map<double>(count, f);
  });
}

double pure_ncopy_error(const QubitState& q0, const QubitState& q1, int n, double pi0) {
  if (!q0.is_pure() || !q1.is_pure()) throw DomainError("pure_ncopy_error requires pure states");
  double dot = 0.0;
  for (int k = 0; k < 3; ++k) dot += q0.bloch()[k] * q1.bloch()[k];
  return pure_error_from_overlap(0.5 * (1.0 + dot), n, pi0);
}

double pure_ncopy_error(const CVector& psi0, const CVector& psi1, int n, double pi0) {
  if (psi0.size() != psi1.size()) throw ValidationError("kets have different dimensions");
  if (std::abs(psi0.norm() - 1.0) > 1e-10 || std::abs(psi1.norm() - 1.0) > 1e-10) {
    throw DomainError("pure_ncopy_error requires normalized kets");
  }
  return pure_error_from_overlap(std::norm(psi0.dot(psi1)), n, pi0);
}

double local_ncopy_error(const TwoOutcomePovm& povm, const DensityMatrix& rho0,
                         const DensityMatrix& rho1, int n, double pi0) {
  const auto [p0, p1] = induced_distributions(povm, rho0, rho1);
  return classical_ncopy_error(p0[0], p1[0], n, pi0);
}

RateFit rate_extrapolate(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 3) throw ValidationError("rate fit needs at least 3 points");
  for (const auto& [n, pe] : points) {
    if (pe == 0.0) throw InfiniteExponentError("zero error probability: exponent is infinite");
    if (!(pe > 0.0) || !std::isfinite(pe)) throw ValidationError("error probabilities must be positive");
  }
  const double count = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [n, pe] : points) {
    sx += n;
    sy += -std::log(pe);
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, pe] : points) {
    sxx += (n - mx) * (n - mx);
    sxy += (n - mx) * (-std::log(pe) - my);
  }
  if (sxx == 0.0) throw ValidationError("rate fit needs at least two distinct n");
  RateFit fit{sxy / sxx, 0.0, 0.0};
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (const auto& [n, pe] : points) {
    const double e = -std::log(pe) - (fit.intercept + fit.slope * n);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / count);
  return fit;
}

}  // namespace qcb
