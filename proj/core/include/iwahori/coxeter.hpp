#pragma once

// Affine Weyl groups of types C~n and B~n (plus their finite parabolics and
// the infinite dihedral group) realized exactly as groups of affine maps
// x -> A x + b with A a signed permutation matrix and b an integer vector.
//
// Elements are compared as (A, b) pairs, so the word problem reduces to
// integer comparisons.  Lengths, descents and reduced words come from the
// action on affine roots: s_i is a left descent of w iff w^-1(alpha_i) < 0.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iwahori {

/// A word in generator labels.  kSigma stands for the diagram automorphism.
using Word = std::vector<int>;

inline constexpr int kSigma = -1;
inline constexpr int kInfiniteOrder = 0;  // Coxeter matrix entry for m = infinity
inline constexpr int kDefaultBallCap = 14;

/// Affine root alpha + shift, alpha written in the epsilon basis.
struct AffineRoot {
  std::vector<int> alpha;
  long long shift = 0;

  /// shift > 0, or shift == 0 and alpha is a positive finite root (first
  /// nonzero coordinate positive).
  bool is_positive() const;
  bool is_negative() const { return !is_positive(); }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// x -> A x + b.  Row i of A has the single entry sign(i) in column column(i).
class AffineElt {
 public:
  explicit AffineElt(int dim = 0);
  /// signed_columns[i] = +-(j + 1) places +-1 at row i, column j.
  AffineElt(std::vector<int> signed_columns, std::vector<long long> translation);

  static AffineElt identity(int dim) { return AffineElt(dim); }

  int dim() const { return static_cast<int>(columns_.size()); }
  int column(int row) const;
  int sign(int row) const;
  int entry(int row, int col) const;
  const std::vector<int>& signed_columns() const { return columns_; }
  const std::vector<long long>& translation() const { return translation_; }

  std::vector<long long> apply(std::span<const long long> x) const;
  AffineElt inverse() const;
  bool is_identity() const;

  /// One-line signed permutation plus translation, e.g. "[-1 2] + (1, 0)".
  std::string to_string() const;

  friend auto operator<=>(const AffineElt&, const AffineElt&) = default;
  friend bool operator==(const AffineElt&, const AffineElt&) = default;

 private:
  std::vector<int> columns_;
  std::vector<long long> translation_;
};

/// The affine map x -> u(v(x)).  Throws InvalidArgument on a rank mismatch.
AffineElt compose(const AffineElt& u, const AffineElt& v);
inline AffineElt operator*(const AffineElt& u, const AffineElt& v) { return compose(u, v); }

/// w(r), i.e. the affine function r o w^-1.
AffineRoot act_on_root(const AffineElt& w, const AffineRoot& r);

/// The reflection s_{alpha+m}(x) = x - (<alpha, x> + m) alpha^vee.
AffineElt reflection(const AffineRoot& r);

struct AffineEltHash {
  std::size_t operator()(const AffineElt& w) const noexcept;
};

/// sigma^eps * w for w in a B~n affine Weyl group.
struct ExtendedElt {
  bool sigma = false;
  AffineElt w;

  friend auto operator<=>(const ExtendedElt&, const ExtendedElt&) = default;
  friend bool operator==(const ExtendedElt&, const ExtendedElt&) = default;
};

struct ExtendedEltHash {
  std::size_t operator()(const ExtendedElt& x) const noexcept;
};

enum class SystemKind { AffineC, AffineB, FiniteC, InfiniteDihedral, PrimedC, Parabolic };

std::string to_string(SystemKind kind);

class CoxeterSystem {
 public:
  enum class TieBreak { Smallest, Largest };

  /// s0..sn with s0: x1 -> 1 - x1, si swapping xi and x(i+1), sn: xn -> -xn.
  static CoxeterSystem affine_c(int n);
  /// s0..sn; s0 is the reflection in -e1 - e2 + 1 (in -e1 + 1 when n = 1).
  static CoxeterSystem affine_b(int n);
  /// s1..sn of the finite Weyl group of type Cn.
  static CoxeterSystem finite_c(int n);
  /// Two reflections of the line with no relation between them.
  static CoxeterSystem infinite_dihedral();
  /// The subgroup of C~n generated by s'1 = s1 s0 s1 and s'i = si (i >= 2),
  /// labelled 1..n.  Itself a Coxeter group of type C~(n-1).
  static CoxeterSystem primed_c(int n);

  /// The standard parabolic subgroup generated by the given labels.
  CoxeterSystem parabolic(std::span<const int> labels) const;
  /// Same group and generators under new labels (position-wise).
  CoxeterSystem relabeled(std::vector<int> labels) const;

  SystemKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::string name() const;

  const std::vector<int>& labels() const { return labels_; }
  std::size_t generator_count() const { return labels_.size(); }
  bool has_label(int label) const;
  /// Index of a label in labels().  Throws InvalidArgument for unknown labels.
  std::size_t position(int label) const;

  const AffineElt& generator(int label) const;
  const AffineRoot& simple_root(int label) const;
  /// Coxeter matrix entry m(a, b); kInfiniteOrder encodes infinity.
  int coxeter_entry(int a, int b) const;

  AffineElt identity() const { return AffineElt(dim_); }
  /// s_{w0} s_{w1} ... composed left to right.
  AffineElt from_word(const Word& word) const;

  bool is_left_descent(const AffineElt& w, int label) const;
  bool is_right_descent(const AffineElt& w, int label) const;
  std::vector<int> left_descents(const AffineElt& w) const;

  /// Coxeter length by greedy descent stripping.  Throws InvalidArgument if w
  /// does not lie in the group.
  int length(const AffineElt& w) const;
  /// Reduced word obtained by repeatedly stripping the smallest (or largest)
  /// left descent.
  Word reduced_word(const AffineElt& w, TieBreak tie = TieBreak::Smallest) const;
  bool contains(const AffineElt& w) const;

  /// B~n only: the image of w under the diagram automorphism exchanging s0
  /// and s1, computed on a reduced word.
  AffineElt diagram_automorphism(const AffineElt& w) const;
  /// B~n only: the same automorphism as conjugation by the length-zero
  /// element x1 -> 1 - x1 of the extended group.
  AffineElt sigma_conjugate(const AffineElt& w) const;
  const AffineElt& sigma_element() const;
  /// Label permutation induced by the diagram automorphism (0 <-> 1).
  int sigma_label(int label) const;

 private:
  CoxeterSystem(SystemKind kind, int rank, int dim, std::vector<int> labels,
                std::vector<AffineRoot> roots, std::vector<std::vector<int>> matrix);

  void require_affine_b(const char* what) const;

  SystemKind kind_;
  int rank_;
  int dim_;
  std::vector<int> labels_;
  std::vector<AffineRoot> roots_;
  std::vector<AffineElt> generators_;
  std::vector<std::vector<int>> matrix_;
  AffineElt sigma_;
};

struct Ball {
  std::vector<std::vector<AffineElt>> layers;

  std::size_t size() const;
  std::vector<std::size_t> layer_sizes() const;
};

/// All elements of length <= max_length, layer k holding the elements of
/// length k in discovery order.  Throws CapExceeded if max_length > cap.
Ball enumerate_ball(const CoxeterSystem& system, int max_length, int cap = kDefaultBallCap);

/// Layers by weighted length: the weight of w is the sum of per-generator
/// weights along a reduced word.  Weights are indexed like system.labels()
/// and must be nonnegative.
Ball enumerate_weighted_ball(const CoxeterSystem& system, std::span<const int> weights,
                             int max_weight, int cap = kDefaultBallCap);

/// Parses "1,0,1" (whitespace allowed).  "sigma" maps to kSigma.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

}  // namespace iwahori
