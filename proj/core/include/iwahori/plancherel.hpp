#pragma once

// Weighted Poincare series and the formal degree of the Steinberg (sign)
// character, fd = 1 / sum_w q^{-weight(w)}.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iwahori/coxeter.hpp"
#include "iwahori/laurent.hpp"
#include "iwahori/presentations.hpp"

namespace iwahori {

struct PoincareSeries {
  /// counts[k] = number of elements of weight k, for k <= truncation.
  std::vector<BigInt> counts;

  int truncation() const { return static_cast<int>(counts.size()) - 1; }
  /// counts[k] q^k.
  LaurentPoly layer(int k) const;
  /// Sum of all layers.
  LaurentPoly total() const;
};

/// Elements of system by weighted length, weights indexed like labels().
PoincareSeries poincare(const CoxeterSystem& system, std::span<const int> weights, int max_weight,
                        int cap = kDefaultBallCap);
/// Same with weight(s) = parameter exponent of s; sigma has weight 0.
PoincareSeries poincare(const HeckeAlgebra& algebra, int max_weight, int cap = kDefaultBallCap);

/// Poincare polynomial of a finite Coxeter group.  Throws CapExceeded if the
/// group has more than max_elements elements.
LaurentPoly finite_poincare(const CoxeterSystem& system, std::span<const int> weights,
                            std::size_t max_elements = 1'000'000);

inline const BigRational kDefaultTolerance{1, 1'000'000'000'000LL};

struct FormalDegree {
  std::vector<BigRational> partial_sums;  // S_L = sum_{k <= L} N_k q^-k
  BigRational value;                      // 1 / S_L at the truncation
  bool converged = false;                 // last increment / S_L < tol
  bool diverging = false;                 // increments grew over the last layers
  std::string tail_note;
};

/// Truncated Steinberg formal degree.  Requires q > 1.
FormalDegree steinberg_fd(const PoincareSeries& series, const BigRational& q,
                          const BigRational& tol = kDefaultTolerance);

/// 1 / W(q^-1) for an infinite irreducible affine system, from
/// sum over J with W_J finite of (-1)^|J| / W_J(q).
BigRational steinberg_fd_exact(const CoxeterSystem& system, std::span<const int> weights,
                               const BigRational& q);
/// The same for an algebra; an extension by sigma halves the value.
BigRational steinberg_fd_exact(const HeckeAlgebra& algebra, const BigRational& q);

struct FdComparison {
  std::string algebra_a;
  std::string algebra_b;
  int n = 0;
  int max_layer = 0;
  std::vector<BigInt> layers_a;
  std::vector<BigInt> layers_b;
  bool layers_equal = false;
  std::optional<int> first_mismatch;
  BigRational q;
  BigRational ratio_a;  // vol / dim
  BigRational ratio_b;
  FormalDegree fd_a;    // scaled by ratio_a
  FormalDegree fd_b;    // scaled by ratio_b
  BigRational exact_a;
  BigRational exact_b;

  /// Layers equal, and both truncated and exact fd values agree.
  bool pass() const;
};

/// Requires a linked pair (HpsiPlus/Hplus or HpsiMinus/Hminus, either order)
/// of the same rank.  A mismatch is reported, not thrown.
FdComparison compare_fd(const AlgebraSpec& a, const AlgebraSpec& b, int max_layer, const BigRational& q,
                        int e = 0, const BigRational& tol = kDefaultTolerance);

struct CosetSeriesCheck {
  int n = 0;
  int max_length = 0;
  /// Elements of the primed subgroup of C~n by C~n length.
  std::vector<BigInt> embedded;
  /// C~(n-1) elements by weight with s'1 weighing 3.
  std::vector<BigInt> weighted;

  bool pass() const { return embedded == weighted; }
};

/// Compares the length distribution of iota(primed group) inside C~n with
/// the weight-(3, 1, ..., 1) distribution of C~(n-1).
CosetSeriesCheck primed_coset_series(int n, int max_length, int cap = kDefaultBallCap);

}  // namespace iwahori
