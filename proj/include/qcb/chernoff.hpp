#pragma once

// Single-copy discrimination: classical and quantum Chernoff bounds, the
// Helstrom error, fidelity and the ordered chain of bounds between them.

#include <limits>

#include "qcb/states.hpp"

namespace qcb {

// A rate exponent -log(q). Orthogonal supports give q = 0, which is carried
// as an explicit tag rather than as a floating-point infinity.
class RateExponent {
 public:
  static RateExponent finite(double v) { return RateExponent(v, false); }
  static RateExponent infinite() { return RateExponent(0.0, true); }
  static RateExponent from_overlap(double q);

  bool is_infinite() const { return infinite_; }
  // Throws InfiniteExponentError when infinite.
  double value() const;
  // +inf when infinite; for arithmetic comparisons only.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

 private:
  RateExponent(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

struct ChernoffResult {
  double q;       // minimized overlap
  double s_star;  // minimizer in [0,1]
  RateExponent exponent;
};

struct BoundsReport {
  double helstrom_pe;
  double p_qc;
  double half_overlap_root;  // (1/2) tr rho0^{1/2} rho1^{1/2}
  double fidelity;
  double fid_upper_pe;       // sqrt(F)/2
  double fid_lower_pe;       // (1 - sqrt(1-F))/2
};

struct BinaryChernoff {
  double xi;  // decision threshold on the fraction of 0-outcomes
  double c;   // Chernoff information
};

// -- classical ---------------------------------------------------------------

ChernoffResult classical_chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1);

// Coins with P(0) = p and P(0) = q; both strictly inside (0,1), p != q.
BinaryChernoff binary_chernoff_closed(double p, double q);

DiscreteDistribution hellinger_arc(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                                   double s);

// +inf when p charges an outcome that q does not.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// -- quantum -----------------------------------------------------------------

// (1 - tr|pi1 rho1 - pi0 rho0|)/2
double helstrom_error(const DensityMatrix& rho0, const DensityMatrix& rho1, double pi0 = 0.5);

// tr rho0^s rho1^{1-s}, with rho^0 the support projector.
double quantum_q_s(const DensityMatrix& rho0, const DensityMatrix& rho1, double s);

ChernoffResult quantum_chernoff(const DensityMatrix& rho0, const DensityMatrix& rho1);

// min_s pi0^s pi1^{1-s} tr rho0^s rho1^{1-s}
double quantum_chernoff_weighted(const DensityMatrix& rho0, const DensityMatrix& rho1, double pi0);

double fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1);

BoundsReport bounds_report(const DensityMatrix& rho0, const DensityMatrix& rho1);

double qubit_q_s_closed(const QubitState& q0, const QubitState& q1, double s);

// Error of the projective test {rho0^{1/2} - rho1^{1/2} < 0} at equal priors.
double half_power_measurement_error(const DensityMatrix& rho0, const DensityMatrix& rho1);

// Shared s-minimizer: golden section on the interior bracket, compared against
// s = 1/2 and the two endpoint values. `q_at` must be convex on (0,1).
ChernoffResult minimize_overlap(const std::function<double(double)>& q_at, double q_at_zero,
                                double q_at_one);

}  // namespace qcb
