#pragma once

// Iwahori-Hecke algebras with unequal parameters over Z[q, q^-1], in the
// T_w basis.  The quadratic relations are (T_s + 1)(T_s - q_s) = 0 with
// q_s = q^{a_s}.  An algebra may be extended by a diagram automorphism sigma
// of a B~n system; sigma is a group element of length 0, so T_sigma T_w =
// T_{sigma w} and sigma^2 = 1 follow from group multiplication.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iwahori/coxeter.hpp"
#include "iwahori/laurent.hpp"

namespace iwahori {

enum class Side { Left, Right };

class HeckeAlgebra {
 public:
  /// parameter_exponents[p] is a_s for the generator system.labels()[p].
  /// Exponents must agree across odd bonds; an extended algebra needs an
  /// AffineB system and sigma-invariant parameters.
  HeckeAlgebra(std::string name, CoxeterSystem system, std::vector<int> parameter_exponents,
               bool extended);

  const std::string& name() const { return name_; }
  const CoxeterSystem& system() const { return system_; }
  bool extended() const { return extended_; }

  /// kSigma first when extended, then the Coxeter labels.
  std::vector<int> generators() const;
  bool has_generator(int gen) const;
  /// a_s; sigma has exponent 0.
  int parameter_exponent(int gen) const;
  LaurentPoly parameter(int gen) const { return LaurentPoly::q(parameter_exponent(gen)); }

  /// Braid order between two algebra generators.  With sigma this is the C~n
  /// style presentation: m(sigma, 0) = m(sigma, 1) = 4, m(sigma, i) = 2.
  int braid_order(int a, int b) const;

  ExtendedElt identity() const { return ExtendedElt{false, system_.identity()}; }
  /// Product of the generators in the word (kSigma allowed when extended).
  ExtendedElt element(const Word& word) const;
  ExtendedElt multiply(const ExtendedElt& x, const ExtendedElt& y) const;
  ExtendedElt left_multiply(int gen, const ExtendedElt& x) const;
  ExtendedElt right_multiply(const ExtendedElt& x, int gen) const;
  ExtendedElt inverse(const ExtendedElt& x) const;
  bool contains(const ExtendedElt& x) const;

  int length(const ExtendedElt& x) const { return system_.length(x.w); }
  /// Sum of parameter exponents along a reduced word.
  int weight(const ExtendedElt& x) const;
  /// Reduced word, prefixed by kSigma when x carries sigma.
  Word reduced_word(const ExtendedElt& x,
                    CoxeterSystem::TieBreak tie = CoxeterSystem::TieBreak::Smallest) const;

  /// l(s x) < l(x) for a Coxeter generator s.
  bool is_left_descent(const ExtendedElt& x, int label) const;
  /// l(x s) < l(x) for a Coxeter generator s.
  bool is_right_descent(const ExtendedElt& x, int label) const;

  /// Same generators, parameters and extension.
  bool same_structure(const HeckeAlgebra& other) const;

 private:
  AffineElt apply_sigma(const AffineElt& w) const { return system_.sigma_conjugate(w); }

  std::string name_;
  CoxeterSystem system_;
  std::vector<int> exponents_;
  bool extended_;
};

using AlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

AlgebraPtr make_algebra(std::string name, CoxeterSystem system, std::vector<int> parameter_exponents,
                        bool extended = false);

/// Finite sum of c_w T_w.  Zero coefficients are never stored.
class HeckeElt {
 public:
  using Terms = std::map<ExtendedElt, LaurentPoly>;

  explicit HeckeElt(AlgebraPtr algebra);
  HeckeElt(AlgebraPtr algebra, Terms terms);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const HeckeAlgebra& algebra() const { return *algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  LaurentPoly coefficient(const ExtendedElt& x) const;

  void add_term(const ExtendedElt& x, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt operator-() const;

  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  /// Adds or subtracts c times the identity.
  friend HeckeElt operator+(HeckeElt a, const LaurentPoly& c);
  friend HeckeElt operator-(HeckeElt a, const LaurentPoly& c);
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

 private:
  void require_compatible(const HeckeElt& other, const char* what) const;

  AlgebraPtr algebra_;
  Terms terms_;
};

/// The unit 1 = T_e.
HeckeElt one(const AlgebraPtr& algebra);
HeckeElt scalar(const AlgebraPtr& algebra, const LaurentPoly& c);
/// T_w.  Throws InvalidArgument if w is not in the algebra's group.
HeckeElt basis_elt(const AlgebraPtr& algebra, const ExtendedElt& w);
/// T_s for a Coxeter label, or the element sigma.
HeckeElt generator_elt(const AlgebraPtr& algebra, int gen);
/// T_{g1} T_{g2} ... for an arbitrary (not necessarily reduced) word.
HeckeElt word_product(const AlgebraPtr& algebra, const Word& word);

/// T_s h (Side::Left) or h T_s (Side::Right).
HeckeElt mul_gen(int gen, const HeckeElt& h, Side side);
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

/// Coefficient of the identity.
LaurentPoly trace(const HeckeElt& h);
/// sum c_w T_{w^-1}; coefficient conjugation is trivial on Z[q, q^-1].
HeckeElt star(const HeckeElt& h);
/// (vol / dim) tr(a^* b).  vol / dim must be an integral Laurent polynomial.
LaurentPoly inner(const HeckeElt& a, const HeckeElt& b, const RationalLaurent& norm_vol,
                  const RationalLaurent& norm_dim);

/// (T_s + 1)(T_s - q_s), zero exactly when the quadratic relation holds.
HeckeElt quadratic_defect(const AlgebraPtr& algebra, int gen);
/// Difference of the two alternating products of length m(a, b); zero for
/// m = infinity.
HeckeElt braid_defect(const AlgebraPtr& algebra, int a, int b);
bool check_quadratic(const AlgebraPtr& algebra, int gen);
bool check_braid(const AlgebraPtr& algebra, int a, int b);

std::string to_string(const HeckeElt& h);

}  // namespace iwahori
