#pragma once

#include <variant>
#include <vector>

#include "pqd/xstate.hpp"

namespace pqd {

/// First and second moments of the collective spin operators that determine
/// the symmetric two-qubit reduced density matrix.
struct CollectiveExpectations {
    int n_qubits;    // N >= 2
    double jz;       // <Jz>
    double jz2;      // <Jz^2>
    complexd jplus2; // <J+^2>
};

/// Normalized coefficient vector c_0..c_N over the Dicke basis |n>_N.
class SymmetricState {
  public:
    SymmetricState(int n_qubits, std::vector<complexd> coeffs);

    int n_qubits() const { return n_qubits_; }
    const std::vector<complexd>& coeffs() const { return coeffs_; }

  private:
    int n_qubits_;
    std::vector<complexd> coeffs_;
};

/// Dicke state |n>_N: n excitations among N qubits.
struct DickePoint {
    int n_qubits;
    int n;
};

/// cos(a)|n>_N + e^{i delta} sin(a)|n+2>_N with n in [0, N-2],
/// alpha in [0,pi), delta in [0,2pi).
struct SuperpositionPoint {
    int n_qubits;
    int n;
    double alpha;
    double delta;
};

enum class Parity { even, odd };

/// Even/odd spin coherent state (|eta> +- |-eta>)/norm, eta in [0,1].
/// The odd state at eta = 0 is defined by its limit, the Dicke state |1>_N.
struct ScsPoint {
    int n_qubits;
    double eta;
    Parity parity;
};

using FamilyPoint = std::variant<DickePoint, SuperpositionPoint, ScsPoint>;

/// Matrix elements from spin expectations:
///   v+- = [N^2 - 2N + 4<Jz^2> +- 4<Jz>(N-1)] / (4N(N-1))
///   y   = [N^2 - 4<Jz^2>] / (4N(N-1))
///   u   = <J+^2> / (N(N-1))
/// Throws std::invalid_argument when the expectations are out of range or
/// the resulting state violates the XState invariants beyond tolerance.
XState expectations_to_xstate(const CollectiveExpectations& e);

/// <Jz> = n - N/2, <Jz^2> = (n - N/2)^2, <J+^2> = 0.
CollectiveExpectations dicke_expectations(int n_qubits, int n);

/// Closed-form reduced matrix elements of |n>_N:
///   v+ = n(n-1)/(N(N-1)), v- = (N-n)(N-n-1)/(N(N-1)), y = n(N-n)/(N(N-1)).
XState dicke_xstate(int n_qubits, int n);

CollectiveExpectations superposition_expectations(int n_qubits, int n,
                                                  double alpha, double delta);

CollectiveExpectations scs_expectations(int n_qubits, double eta,
                                        Parity parity);

/// Dicke-basis coefficients of the even/odd SCS, c_n proportional to
/// sqrt(binom(N,n)) eta^n for n of the matching parity. Binomials are taken
/// in log space and the leading eta power is factored out of the
/// normalization, so the vector stays finite for N up to several hundred
/// and for eta -> 0. Odd parity at eta = 0 throws (the state is defined by
/// its limit |1>_N; use that Dicke state instead).
SymmetricState scs_coefficients(int n_qubits, double eta, Parity parity);

/// Expectations straight from a coefficient vector:
///   <Jz>   = sum |c_n|^2 (n - N/2)
///   <Jz^2> = sum |c_n|^2 (n - N/2)^2
///   <J+^2> = sum conj(c_{n+2}) c_n sqrt((n+1)(n+2)(N-n)(N-n-1))
/// Serves as the formula-free reference for the closed-form generators.
CollectiveExpectations expectation_oracle(const SymmetricState& s);

/// Dispatch: the family's expectations composed with expectations_to_xstate.
XState family_xstate(const FamilyPoint& p);

/// Throws std::invalid_argument naming the violated range if p is invalid.
void validate(const FamilyPoint& p);

} // namespace pqd
