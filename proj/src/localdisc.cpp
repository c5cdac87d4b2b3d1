#include "qcb/localdisc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcb/errors.hpp"
#include "qcb/parallel.hpp"

namespace qcb {

TwoOutcomePovm::TwoOutcomePovm(const HermitianMatrix& e0) : e0_(e0) {
  const auto ev = eig_hermitian(e0).eigenvalues;
  if (ev.minCoeff() < -1e-10 || ev.maxCoeff() > 1.0 + 1e-10) {
    throw ValidationError("POVM element must satisfy 0 <= E0 <= 1");
  }
}

TwoOutcomePovm TwoOutcomePovm::qubit(double a, double b, const std::array<double, 3>& axis) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(len > 0.0)) throw ValidationError("POVM axis must be non-zero");
  if (!(a >= 0.0 && a <= 1.0) || std::abs(b) > std::min(a, 1.0 - a) + 1e-15) {
    throw ValidationError("qubit POVM needs a in [0,1] and |b| <= min(a, 1-a)");
  }
  CMatrix m = a * CMatrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k) m += (b * axis[k] / len) * pauli(k);
  return TwoOutcomePovm(HermitianMatrix::from_trusted(m));
}

const char* to_string(LocalRegime r) {
  switch (r) {
    case LocalRegime::majority: return "majority";
    case LocalRegime::intermediate: return "intermediate";
    case LocalRegime::unanimity: return "unanimity";
  }
  return "unknown";
}

std::pair<DiscreteDistribution, DiscreteDistribution> induced_distributions(
    const TwoOutcomePovm& povm, const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (povm.dim() != rho0.dim() || povm.dim() != rho1.dim()) {
    throw ValidationError("POVM and states have different dimensions");
  }
  auto dist = [&](const DensityMatrix& rho) {
    const double p = std::clamp(trace_product(povm.e0(), rho.hermitian()), 0.0, 1.0);
    return DiscreteDistribution({p, 1.0 - p});
  };
  return {dist(rho0), dist(rho1)};
}

std::array<double, 3> seed_direction(int k) {
  // R2 low-discrepancy sequence mapped to the sphere; prefixes are nested.
  const double g = 1.32471795724474602596;  // plastic number
  const double u = std::fmod(0.5 + (k + 1) / g, 1.0);
  const double v = std::fmod(0.5 + (k + 1) / (g * g), 1.0);
  const double z = 1.0 - 2.0 * u;
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * std::numbers::pi * v;
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

namespace {

std::array<double, 3> sphere_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

struct ProjectiveTrial {
  double exponent;  // +inf allowed
  double s_star;
  std::array<double, 3> axis;
};

// Chernoff exponent of the test {(1 + m̂·σ)/2, (1 - m̂·σ)/2}. The exponent is
// jointly convex in the outcome probabilities, hence convex in E0; for a fixed
// axis the maximum over E0 = a·1 + b m̂·σ therefore sits at a vertex of the
// (a, b) diamond, and the only informative vertices are these projectors.
ProjectiveTrial evaluate_axis(const QubitState& q0, const QubitState& q1,
                              const std::array<double, 3>& m) {
  const double p = std::clamp(0.5 * (1.0 + dot3(m, q0.bloch())), 0.0, 1.0);
  const double q = std::clamp(0.5 * (1.0 + dot3(m, q1.bloch())), 0.0, 1.0);
  const auto res = classical_chernoff(DiscreteDistribution({p, 1.0 - p}),
                                      DiscreteDistribution({q, 1.0 - q}));
  return {res.exponent.as_double(), res.s_star, m};
}

// Nelder-Mead on (theta, phi), maximizing the exponent.
ProjectiveTrial local_search(const QubitState& q0, const QubitState& q1,
                             const std::array<double, 3>& seed) {
  struct Vertex {
    double x[2];
    double f;  // minimized: -exponent
  };
  auto eval = [&](const double* x) { return -evaluate_axis(q0, q1, sphere_point(x[0], x[1])).exponent; };

  const double theta0 = std::acos(std::clamp(seed[2], -1.0, 1.0));
  const double phi0 = std::atan2(seed[1], seed[0]);
  Vertex v[3] = {{{theta0, phi0}, 0.0}, {{theta0 + 0.25, phi0}, 0.0}, {{theta0, phi0 + 0.25}, 0.0}};
  for (auto& vi : v) vi.f = eval(vi.x);

  for (int it = 0; it < 600; ++it) {
    std::sort(std::begin(v), std::end(v), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double size = std::max(std::abs(v[2].x[0] - v[0].x[0]) + std::abs(v[2].x[1] - v[0].x[1]),
                                 std::abs(v[1].x[0] - v[0].x[0]) + std::abs(v[1].x[1] - v[0].x[1]));
    if (size < 1e-11 || (std::abs(v[2].f - v[0].f) < 1e-16 && size < 1e-7)) break;
    double c[2] = {0.5 * (v[0].x[0] + v[1].x[0]), 0.5 * (v[0].x[1] + v[1].x[1])};
    auto along = [&](double t) {
      Vertex out{{c[0] + t * (v[2].x[0] - c[0]), c[1] + t * (v[2].x[1] - c[1])}, 0.0};
      out.f = eval(out.x);
      return out;
    };
    const Vertex r = along(-1.0);
    if (r.f < v[0].f) {
      const Vertex e = along(-2.0);
      v[2] = e.f < r.f ? e : r;
    } else if (r.f < v[1].f) {
      v[2] = r;
    } else {
      const Vertex k = r.f < v[2].f ? along(-0.5) : along(0.5);
      if (k.f < std::min(r.f, v[2].f)) {
        v[2] = k;
      } else {
        for (int i = 1; i < 3; ++i) {
          for (int d = 0; d < 2; ++d) v[i].x[d] = v[0].x[d] + 0.5 * (v[i].x[d] - v[0].x[d]);
          v[i].f = eval(v[i].x);
        }
      }
    }
  }
  const Vertex* best = std::min_element(std::begin(v), std::end(v),
                                        [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return evaluate_axis(q0, q1, sphere_point(best->x[0], best->x[1]));
}

LocalRegime classify(double s_star) {
  if (std::abs(s_star - 0.5) <= 1e-5) return LocalRegime::majority;
  if (s_star <= 1e-5 || s_star >= 1.0 - 1e-5) return LocalRegime::unanimity;
  return LocalRegime::intermediate;
}

void require_not_both_pure(const QubitState& q0, const QubitState& q1) {
  if (q0.is_pure() && q1.is_pure()) {
    throw DomainError("both states are pure; use d_cc_pure for the unanimity-vote exponent");
  }
}

LocalExponentResult reduce(const QubitState& q0, const QubitState& q1,
                           const std::vector<ProjectiveTrial>& trials) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < trials.size(); ++i) {
    if (trials[i].exponent > trials[best].exponent) best = i;
  }
  const auto& t = trials[best];
  (void)q0;
  (void)q1;
  return {RateExponent::finite(std::max(0.0, t.exponent)), t.s_star,
          TwoOutcomePovm::qubit(0.5, 0.5, t.axis), classify(t.s_star)};
}

LocalExponentResult identical_result() {
  return {RateExponent::finite(0.0), 0.5, TwoOutcomePovm::qubit(0.5, 0.5, {0.0, 0.0, 1.0}),
          LocalRegime::majority};
}

bool same_bloch(const QubitState& a, const QubitState& b) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(a.bloch()[k] - b.bloch()[k]) > 1e-15) return false;
  }
  return true;
}

}  // namespace

LocalExponentResult d_cc_qubit(const QubitState& q0, const QubitState& q1, int starts) {
  require_not_both_pure(q0, q1);
  if (starts < 1) throw ValidationError("need at least one optimizer start");
  if (same_bloch(q0, q1)) return identical_result();
  const auto trials = parallel_map<ProjectiveTrial>(
      static_cast<std::size_t>(starts),
      [&](std::size_t k) { return local_search(q0, q1, seed_direction(static_cast<int>(k))); });
  return reduce(q0, q1, trials);
}

LocalExponentResult d_cc_qubit_serial(const QubitState& q0, const QubitState& q1, int starts) {
  require_not_both_pure(q0, q1);
  if (starts < 1) throw ValidationError("need at least one optimizer start");
  if (same_bloch(q0, q1)) return identical_result();
  const auto trials = serial_map<ProjectiveTrial>(
      static_cast<std::size_t>(starts),
      [&](std::size_t k) { return local_search(q0, q1, seed_direction(static_cast<int>(k))); });
  return reduce(q0, q1, trials);
}

RateExponent d_cc_pure(const QubitState& q0, const QubitState& q1) {
  if (!q0.is_pure() || !q1.is_pure()) throw DomainError("d_cc_pure requires two pure states");
  const double c = 0.5 * (1.0 + dot3(q0.bloch(), q1.bloch()));
  return RateExponent::from_overlap(std::clamp(c, 0.0, 1.0));
}

RateExponent d_cc_pure(const CVector& psi0, const CVector& psi1) {
  if (psi0.size() != psi1.size()) throw ValidationError("kets have different dimensions");
  if (std::abs(psi0.norm() - 1.0) > 1e-10 || std::abs(psi1.norm() - 1.0) > 1e-10) {
    throw DomainError("d_cc_pure requires normalized kets");
  }
  const double c = std::norm(psi0.dot(psi1));
  return RateExponent::from_overlap(std::clamp(c, 0.0, 1.0));
}

namespace {

std::pair<QubitState, QubitState> equal_purity_pair(double r, double theta) {
  return {QubitState(r, 0.0, 0.0), QubitState(r * std::cos(theta), r * std::sin(theta), 0.0)};
}

double fidelity_lower_exponent(double r, double theta) {
  // qubits: F = tr(rho0 rho1) + 2 sqrt(det rho0 det rho1) = 1 - r^2 (1 - cos theta)/2
  const double f = 1.0 - 0.5 * r * r * (1.0 - std::cos(theta));
  return -0.5 * std::log(f);
}

}  // namespace

double r_star(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi + 1e-15)) {
    throw ValidationError("r_star needs theta in (0, pi]");
  }
  auto on_lower_bound = [theta](double r) {
    const auto [a, b] = equal_purity_pair(r, theta);
    const double lower = fidelity_lower_exponent(r, theta);
    const double dcc = d_cc_qubit(a, b).d_cc.value();
    return std::abs(dcc - lower) <= 1e-6 * lower;
  };
  double lo = 0.05;
  double hi = 1.0 - 1e-6;
  if (on_lower_bound(hi)) return hi;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (on_lower_bound(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

EqualPurityCurves equal_purity_point(double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("radius must lie in [0,1]");
  const auto [a, b] = equal_purity_pair(r, theta);
  EqualPurityCurves out{};
  out.r = r;
  out.fid_lower = fidelity_lower_exponent(r, theta);
  out.fid_upper = 2.0 * out.fid_lower;
  const auto qc = quantum_chernoff(a.density(), b.density());
  out.d_qc = qc.exponent.as_double();
  if (a.is_pure() && b.is_pure()) {
    out.d_cc = d_cc_pure(a, b).as_double();
  } else {
    out.d_cc = d_cc_qubit_serial(a, b).d_cc.as_double();
  }
  return out;
}

}  // namespace qcb
