#include "iwahori/specdims.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

std::string to_string(TauSign sign) {
  switch (sign) {
    case TauSign::Plus: return "+";
    case TauSign::Minus: return "-";
    case TauSign::Full: return "full";
  }
  return "?";
}

namespace {

const BigRational kHalf(1, 2);

void require_rank(int n, int e) {
  if (n < 1) throw InvalidArgument("rank must be >= 1");
  if (e < 0) throw InvalidArgument("e must be >= 0");
}

RationalLaurent q_power(int k) { return RationalLaurent::q(k); }

BigRational evaluate_at(const RationalLaurent& p, const BigInt& q) {
  require_numeric_q(q);
  return evaluate(p, BigRational(q));
}

template <typename Value>
SubalgebraDatum<BigRational> evaluated(const SubalgebraDatum<Value>& datum, const BigInt& q) {
  return solve_two_dim(evaluate_at(datum.d, q), evaluate_at(datum.d1, q));
}

}  // namespace

void require_numeric_q(const BigInt& q) {
  if (q < 2) throw InvalidArgument("q must be an integer >= 2");
}

RationalLaurent dim_tau(int n, int e, int i, TauSign sign) {
  require_rank(n, e);
  if (i < 0 || i > n) throw InvalidArgument("lattice index out of range 0..n");
  const RationalLaurent base = q_power(e * n);
  if (i == 0) {
    if (sign != TauSign::Full) throw InvalidArgument("tau_0 has no +- halves");
    return base;
  }
  if (sign == TauSign::Full) throw InvalidArgument("only tau_0 is taken in full");
  const RationalLaurent factor = q_power(i) + RationalLaurent(sign == TauSign::Plus ? 1 : -1);
  return (base * factor).scaled(kHalf);
}

BigRational dim_tau(int n, int e, int i, TauSign sign, const BigInt& q) {
  return evaluate_at(dim_tau(n, e, i, sign), q);
}

SubalgebraDatum<RationalLaurent> solve_two_dim(const RationalLaurent& d, const RationalLaurent& d1) {
  const RationalLaurent d2 = d - d1;
  if (d1.is_zero() || d2.is_zero() || d1.leading_coefficient() <= 0 || d2.leading_coefficient() <= 0) {
    throw InvalidArgument("solve_two_dim needs 0 < d1 < d");
  }
  const auto quotient = divide_exact(d2, d1);
  const auto integral = quotient ? to_integral(*quotient) : std::nullopt;
  if (!integral) {
    throw InexactDivision("eigenvalue (" + to_string(d2) + ")/(" + to_string(d1) + ") is not exact");
  }
  return {d, d1, d2, *quotient, RationalLaurent(-1)};
}

SubalgebraDatum<BigRational> solve_two_dim(const BigRational& d, const BigRational& d1) {
  if (d1 <= 0 || d1 >= d) throw InvalidArgument("solve_two_dim needs 0 < d1 < d");
  const BigRational d2 = d - d1;
  const BigRational lambda = d2 / d1;
  if (denominator(lambda) != 1) {
    throw InexactDivision("eigenvalue " + to_string(d2) + "/" + to_string(d1) + " is not an integer");
  }
  return {d, d1, d2, lambda, BigRational(-1)};
}

LaurentPoly index_J1_numerator() { return LaurentPoly::from_terms({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}); }

LaurentPoly index_J1() {
  const auto quotient = divide_exact(index_J1_numerator(), LaurentPoly::from_terms({{0, 1}, {1, 1}}));
  if (!quotient) throw InexactDivision("[J1 : J] is not a polynomial");
  return *quotient;
}

SubalgebraDatum<RationalLaurent> plus_subalgebra(int n, int e, int i) {
  require_rank(n, e);
  if (i < 0 || i > n) throw InvalidArgument("plus subalgebra index must lie in 0..n");
  const RationalLaurent d = dim_tau(n, e, 0, TauSign::Full) * RationalLaurent::from_terms({{0, 1}, {1, 1}});
  const RationalLaurent d1 = i == 0 ? dim_tau(n, e, 1, TauSign::Plus) : dim_tau(n, e, 0, TauSign::Full);
  return solve_two_dim(d, d1);
}

SubalgebraDatum<BigRational> plus_subalgebra(int n, int e, int i, const BigInt& q) {
  return evaluated(plus_subalgebra(n, e, i), q);
}

SubalgebraDatum<RationalLaurent> minus_subalgebra(int n, int e, int i) {
  require_rank(n, e);
  if (n < 2) throw InvalidArgument("minus subalgebras need n >= 2");
  if (i < 1 || i > n) throw InvalidArgument("minus subalgebra index must lie in 1..n");
  const RationalLaurent index = i == 1 ? to_rational(index_J1()) : RationalLaurent::from_terms({{0, 1}, {1, 1}});
  const RationalLaurent d = dim_tau(n, e, 1, TauSign::Minus) * index;
  const RationalLaurent d1 = i == 1 ? dim_tau(n, e, 2, TauSign::Minus) : dim_tau(n, e, 1, TauSign::Minus);
  return solve_two_dim(d, d1);
}

SubalgebraDatum<BigRational> minus_subalgebra(int n, int e, int i, const BigInt& q) {
  return evaluated(minus_subalgebra(n, e, i), q);
}

Normalization normalization(AlgebraName name, int n, int e) {
  require_rank(n, e);
  switch (name) {
    case AlgebraName::HpsiPlus: {
      const RationalLaurent v = dim_tau(n, e, 0, TauSign::Full);
      return {v, v};
    }
    case AlgebraName::HpsiMinus: {
      if (n < 2) throw InvalidArgument("HpsiMinus needs n >= 2");
      const RationalLaurent v = dim_tau(n, e, 1, TauSign::Minus);
      return {v, v};
    }
    case AlgebraName::Hplus:
    case AlgebraName::Hminus:
      return {RationalLaurent(1), RationalLaurent(1)};
  }
  throw InvalidArgument("unknown algebra");
}

}  // namespace iwahori
