#pragma once

// Distinguishability under identical local measurements on every copy
// (D_CC), for qubits and pure states.

#include <utility>

#include "qcb/chernoff.hpp"

namespace qcb {

// Two-outcome POVM {E0, 1 - E0}.
class TwoOutcomePovm {
 public:
  explicit TwoOutcomePovm(const HermitianMatrix& e0);

  // E0 = a·1 + b m̂·σ for qubits; requires a in [0,1], |b| <= min(a, 1-a).
  static TwoOutcomePovm qubit(double a, double b, const std::array<double, 3>& axis);

  const HermitianMatrix& e0() const { return e0_; }
  HermitianMatrix e1() const { return HermitianMatrix::identity(e0_.dim()) - e0_; }
  int dim() const { return e0_.dim(); }

 private:
  HermitianMatrix e0_;
};

enum class LocalRegime { majority, intermediate, unanimity };

const char* to_string(LocalRegime r);

struct LocalExponentResult {
  RateExponent d_cc;
  double s_star;
  TwoOutcomePovm povm;
  LocalRegime regime;
};

std::pair<DiscreteDistribution, DiscreteDistribution> induced_distributions(
    const TwoOutcomePovm& povm, const DensityMatrix& rho0, const DensityMatrix& rho1);

inline constexpr int kDefaultStarts = 32;

// Best classical Chernoff exponent over two-outcome measurements. The result is
// a lower bound on D_CC over all POVMs. At least one state must be mixed.
LocalExponentResult d_cc_qubit(const QubitState& q0, const QubitState& q1,
                               int starts = kDefaultStarts);
// Restarts evaluated sequentially; reference for the OpenMP path.
LocalExponentResult d_cc_qubit_serial(const QubitState& q0, const QubitState& q1,
                                      int starts = kDefaultStarts);

// -log |<psi0|psi1>|^2 for pure states (unanimity vote).
RateExponent d_cc_pure(const QubitState& q0, const QubitState& q1);
RateExponent d_cc_pure(const CVector& psi0, const CVector& psi1);

// Largest equal-purity radius at relative angle theta for which d_cc stays on
// the fidelity lower bound -(1/2) log F (relative tolerance 1e-6). Bisection to
// 1e-4 in r.
double r_star(double theta);

// -(1/2) log F and D_QC bracket for equal-purity qubits used by figure sweeps.
struct EqualPurityCurves {
  double r;
  double d_qc;
  double d_cc;
  double fid_lower;  // -(1/2) log F
  double fid_upper;  // -log F
};

EqualPurityCurves equal_purity_point(double r, double theta);

// Unit Bloch direction for seed k of the nested deterministic seed sequence.
std::array<double, 3> seed_direction(int k);

}  // namespace qcb
