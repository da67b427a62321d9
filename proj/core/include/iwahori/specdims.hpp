#pragma once

// Closed-form dimensions of the minimal types, the eigenvalues of the
// two-dimensional subalgebras spanned by 1 and T_i, the index [J1 : J] and
// the volume/dimension normalizations of the four algebras.
//
// Symbolic values are RationalLaurent in q (the factor 1/2 needs rational
// coefficients); numeric values are exact rationals at an integer q >= 2.

#include <string>
#include <utility>

#include "iwahori/laurent.hpp"
#include "iwahori/presentations.hpp"

namespace iwahori {

enum class TauSign { Plus, Minus, Full };

std::string to_string(TauSign sign);

/// dim tau_0 = q^{en}; dim tau_i^+- = q^{en} (q^i +- 1) / 2.  Full is only
/// valid for i = 0 and +- only for 1 <= i <= n.
RationalLaurent dim_tau(int n, int e, int i, TauSign sign);
BigRational dim_tau(int n, int e, int i, TauSign sign, const BigInt& q);

template <typename Value>
struct SubalgebraDatum {
  Value d;
  Value d1;
  Value d2;
  Value lambda1;
  Value lambda2;
};

/// d2 = d - d1, lambda1 = d2 / d1, lambda2 = -1.  Requires 0 < d1 < d and an
/// exact quotient (an integral Laurent polynomial, or an integer); throws
/// InvalidArgument or InexactDivision otherwise.
SubalgebraDatum<RationalLaurent> solve_two_dim(const RationalLaurent& d, const RationalLaurent& d1);
SubalgebraDatum<BigRational> solve_two_dim(const BigRational& d, const BigRational& d1);

/// (1 + 2q + 2q^2 + 2q^3 + q^4) / (1 + q).
LaurentPoly index_J1();
/// The numerator above.
LaurentPoly index_J1_numerator();

/// Datum for the subalgebra at index i of Hplus/HpsiPlus (0 <= i <= n):
/// d = q^{en}(q + 1), d1 = dim tau_1^+ for i = 0 and dim tau_0 otherwise.
SubalgebraDatum<RationalLaurent> plus_subalgebra(int n, int e, int i);
SubalgebraDatum<BigRational> plus_subalgebra(int n, int e, int i, const BigInt& q);

/// Datum for the subalgebra at index i of Hminus/HpsiMinus (1 <= i <= n):
/// d = dim tau_1^- [J_i : J], d1 = dim tau_2^- for i = 1 and dim tau_1^- otherwise.
SubalgebraDatum<RationalLaurent> minus_subalgebra(int n, int e, int i);
SubalgebraDatum<BigRational> minus_subalgebra(int n, int e, int i, const BigInt& q);

struct Normalization {
  RationalLaurent vol;
  RationalLaurent dim;
};

/// (vol, dim) pair under which the algebras' traces are compared.
Normalization normalization(AlgebraName name, int n, int e);

/// Rejects q < 2.
void require_numeric_q(const BigInt& q);

}  // namespace iwahori
