#include "qcb/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcb/errors.hpp"
#include "qcb/scalar_search.hpp"

namespace qcb {

RateExponent RateExponent::from_overlap(double q) {
  if (!(q > 0.0)) return infinite();
  return finite(std::max(0.0, -std::log(q)));
}

double RateExponent::value() const {
  if (infinite_) throw InfiniteExponentError("rate exponent is infinite (orthogonal supports)");
  return value_;
}

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.dim() << " vs " << b.dim();
    throw ValidationError(os.str());
  }
}

void require_prior(double pi0) {
  if (!(pi0 > 0.0 && pi0 < 1.0)) throw ValidationError("prior pi0 must lie in (0,1)");
}

bool same_state(const DensityMatrix& a, const DensityMatrix& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= 1e-14;
}

// x^s with the support convention: 0^s = 0 for all s (including s = 0).
double support_pow(double x, double s, double cut) { return x > cut ? std::pow(x, s) : 0.0; }

// Spectral data for tr rho0^s rho1^{1-s} = sum_ij a_i^s b_j^{1-s} |<a_i|b_j>|^2.
struct OverlapKernel {
  RVector a, b;
  Eigen::MatrixXd weights;
  double cut_a, cut_b;

  OverlapKernel(const DensityMatrix& rho0, const DensityMatrix& rho1)
      : a(rho0.eig().eigenvalues),
        b(rho1.eig().eigenvalues),
        weights((rho0.eig().eigenvectors.adjoint() * rho1.eig().eigenvectors).cwiseAbs2()),
        cut_a(support_cutoff(rho0.eig().eigenvalues)),
        cut_b(support_cutoff(rho1.eig().eigenvalues)) {}

  double operator()(double s) const {
    const int n = static_cast<int>(a.size());
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ai = support_pow(a(i), s, cut_a);
      if (ai == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        total += ai * support_pow(b(j), 1.0 - s, cut_b) * weights(i, j);
      }
    }
    return total;
  }
};

}  // namespace

ChernoffResult minimize_overlap(const std::function<double(double)>& q_at, double q_at_zero,
                                double q_at_one) {
  const ScalarMinimum inner = golden_section_minimize(q_at, kSLower, kSUpper, kSTol);
  double best_q = inner.value;
  double best_s = inner.x;
  const double q_half = q_at(0.5);
  if (q_half < best_q) {
    best_q = q_half;
    best_s = 0.5;
  }
  if (q_at_zero < best_q) {
    best_q = q_at_zero;
    best_s = 0.0;
  }
  if (q_at_one < best_q) {
    best_q = q_at_one;
    best_s = 1.0;
  }
  best_q = std::max(best_q, 0.0);
  // flat zero objective: orthogonal supports, minimizer undefined
  if (best_q == 0.0 && inner.value <= 0.0) best_s = 0.5;
  return {best_q, best_s, RateExponent::from_overlap(best_q)};
}

ChernoffResult classical_chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1) {
  if (p0.size() != p1.size()) throw ValidationError("distributions have different alphabet sizes");
  const std::size_t n = p0.size();
  double diff = 0.0;
  for (std::size_t b = 0; b < n; ++b) diff = std::max(diff, std::abs(p0[b] - p1[b]));
  if (diff <= 1e-14) return {1.0, 0.5, RateExponent::finite(0.0)};

  auto q_at = [&](double s) {
    double total = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (p0[b] > 0.0 && p1[b] > 0.0) total += std::pow(p0[b], s) * std::pow(p1[b], 1.0 - s);
    }
    return total;
  };
  double q_zero = 0.0;
  double q_one = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    if (p0[b] > 0.0) q_zero += p1[b];
    if (p1[b] > 0.0) q_one += p0[b];
  }
  ChernoffResult res = minimize_overlap(q_at, q_zero, q_one);
  if (res.s_star <= 0.0 || res.s_star >= 1.0 || res.q <= 0.0) return res;

  // dQ/ds; its root is where the Hellinger arc is equidistant from p0 and p1
  auto slope = [&](double s) {
    double total = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (p0[b] > 0.0 && p1[b] > 0.0) {
        total += std::pow(p0[b], s) * std::pow(p1[b], 1.0 - s) * std::log(p0[b] / p1[b]);
      }
    }
    return total;
  };
  double lo = std::max(0.0, res.s_star - 1e-6);
  double hi = std::min(1.0, res.s_star + 1e-6);
  if (!(slope(lo) <= 0.0 && slope(hi) >= 0.0)) return res;
  for (int it = 0; it < 64 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  const double q = q_at(s);
  if (q <= res.q) res = {q, s, RateExponent::from_overlap(q)};
  return res;
}

BinaryChernoff binary_chernoff_closed(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw DomainError(
        "binary closed form needs 0 < p, q < 1; use classical_chernoff for degenerate coins");
  }
  if (p == q) throw DomainError("binary closed form is undefined for p == q (exponent is 0)");
  const double pb = 1.0 - p;
  const double qb = 1.0 - q;
  const double xi = std::log(qb / pb) / (std::log(p / pb) + std::log(qb / q));
  const double xib = 1.0 - xi;
  const double c = xi * std::log(xi / p) + xib * std::log(xib / pb);
  return {xi, c};
}

DiscreteDistribution hellinger_arc(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                                   double s) {
  if (p0.size() != p1.size()) throw ValidationError("distributions have different alphabet sizes");
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("hellinger_arc parameter must lie in [0,1]");
  if (s == 1.0) return p0;
  if (s == 0.0) return p1;
  std::vector<double> w(p0.size());
  double total = 0.0;
  for (std::size_t b = 0; b < w.size(); ++b) {
    w[b] = (p0[b] > 0.0 && p1[b] > 0.0) ? std::pow(p0[b], s) * std::pow(p1[b], 1.0 - s) : 0.0;
    total += w[b];
  }
  if (!(total > 0.0)) throw DomainError("hellinger_arc: distributions have no common support");
  for (double& x : w) x /= total;
  // restore exact normalization after division rounding
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= sum;
  return DiscreteDistribution(std::move(w));
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) throw ValidationError("distributions have different alphabet sizes");
  double total = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b] == 0.0) continue;
    if (q[b] == 0.0) return std::numeric_limits<double>::infinity();
    total += p[b] * std::log(p[b] / q[b]);
  }
  return std::max(total, 0.0);
}

double helstrom_error(const DensityMatrix& rho0, const DensityMatrix& rho1, double pi0) {
  require_same_dim(rho0, rho1);
  require_prior(pi0);
  const HermitianMatrix gamma = rho1.hermitian() * (1.0 - pi0) - rho0.hermitian() * pi0;
  return std::clamp(0.5 * (1.0 - trace_norm(gamma)), 0.0, 0.5);
}

double quantum_q_s(const DensityMatrix& rho0, const DensityMatrix& rho1, double s) {
  require_same_dim(rho0, rho1);
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("s must lie in [0,1]");
  return OverlapKernel(rho0, rho1)(s);
}

ChernoffResult quantum_chernoff(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  if (same_state(rho0, rho1)) return {1.0, 0.5, RateExponent::finite(0.0)};
  const OverlapKernel kernel(rho0, rho1);
  return minimize_overlap(kernel, kernel(0.0), kernel(1.0));
}

double quantum_chernoff_weighted(const DensityMatrix& rho0, const DensityMatrix& rho1, double pi0) {
  require_same_dim(rho0, rho1);
  require_prior(pi0);
  const double pi1 = 1.0 - pi0;
  const OverlapKernel kernel(rho0, rho1);
  auto q_at = [&](double s) { return std::pow(pi0, s) * std::pow(pi1, 1.0 - s) * kernel(s); };
  return minimize_overlap(q_at, pi1 * kernel(0.0), pi0 * kernel(1.0)).q;
}

namespace {

struct RootFidelity {
  double root;             // sqrt F
  double one_minus_root;   // 1 - sqrt F without cancellation
};

// sqrt F = ||√ρ0 √ρ1||_1, and with the polar factor U of √ρ0 √ρ1,
// 1 - sqrt F = ||√ρ0 - √ρ1 U||_F^2 / 2 + (2 - tr ρ0 - tr ρ1)/2.
RootFidelity root_fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  const CMatrix r0 = matrix_power(rho0.eig(), 0.5).matrix();
  const CMatrix r1 = matrix_power(rho1.eig(), 0.5).matrix();
  Eigen::JacobiSVD<CMatrix> svd(r0 * r1, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double root = svd.singularValues().sum();
  const CMatrix u = svd.matrixV() * svd.matrixU().adjoint();
  const double gap = 0.5 * (r0 - r1 * u).squaredNorm() +
                     (1.0 - 0.5 * (rho0.matrix().trace().real() + rho1.matrix().trace().real()));
  return {std::clamp(root, 0.0, 1.0), std::clamp(gap, 0.0, 1.0)};
}

}  // namespace

double fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  const double root = root_fidelity(rho0, rho1).root;
  return root * root;
}

BoundsReport bounds_report(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  BoundsReport r{};
  r.helstrom_pe = helstrom_error(rho0, rho1, 0.5);
  r.p_qc = 0.5 * quantum_chernoff(rho0, rho1).q;
  r.half_overlap_root = 0.5 * quantum_q_s(rho0, rho1, 0.5);
  const RootFidelity rf = root_fidelity(rho0, rho1);
  r.fidelity = rf.root * rf.root;
  r.fid_upper_pe = 0.5 * rf.root;
  // 1 - F = (1 - sqrt F)(1 + sqrt F)
  r.fid_lower_pe = 0.5 * (1.0 - std::sqrt(rf.one_minus_root * (1.0 + rf.root)));
  const double slack = 1e-9;
  if (r.fid_lower_pe > r.helstrom_pe + slack || r.helstrom_pe > r.p_qc + slack ||
      r.p_qc > r.half_overlap_root + slack || r.half_overlap_root > r.fid_upper_pe + slack) {
    throw DomainError("bound chain ordering violated; states are numerically ill-conditioned");
  }
  return r;
}

double qubit_q_s_closed(const QubitState& q0, const QubitState& q1, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("s must lie in [0,1]");
  const double p0 = q0.major_eigenvalue();
  const double p1 = q1.major_eigenvalue();
  const double p0b = 1.0 - p0;
  const double p1b = 1.0 - p1;
  const double cut0 = 1e-12 * p0;
  const double cut1 = 1e-12 * p1;
  auto pw0 = [&](double x) { return support_pow(x, s, cut0); };
  auto pw1 = [&](double x) { return support_pow(x, 1.0 - s, cut1); };
  const double r0 = q0.radius();
  const double r1 = q1.radius();
  double cos_theta = 1.0;
  if (r0 > 0.0 && r1 > 0.0) {
    double dot = 0.0;
    for (int k = 0; k < 3; ++k) dot += q0.bloch()[k] * q1.bloch()[k];
    cos_theta = std::clamp(dot / (r0 * r1), -1.0, 1.0);
  }
  const double c2 = 0.5 * (1.0 + cos_theta);
  const double s2 = 0.5 * (1.0 - cos_theta);
  return (pw0(p0) * pw1(p1) + pw0(p0b) * pw1(p1b)) * c2 + (pw0(p0) * pw1(p1b) + pw0(p0b) * pw1(p1)) * s2;
}

double half_power_measurement_error(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require_same_dim(rho0, rho1);
  const HermitianMatrix diff = matrix_power(rho0.eig(), 0.5) - matrix_power(rho1.eig(), 0.5);
  const double scale = std::max(1.0, diff.max_abs());
  const HermitianMatrix e1 = spectral_projector(diff, [scale](double x) { return x < -1e-14 * scale; });
  const HermitianMatrix e0 = HermitianMatrix::identity(rho0.dim()) - e1;
  return 0.5 * (trace_product(e1, rho0.hermitian()) + trace_product(e0, rho1.hermitian()));
}

}  // namespace qcb
