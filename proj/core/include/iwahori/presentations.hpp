#pragma once

// The four affine Hecke algebras attached to the metaplectic and orthogonal
// groups, the isomorphisms between them, and the embedding of the primed
// Weyl group into C~n that carries the weighted length.
//
//   Hplus      B~n extended by sigma, all parameters q
//   HpsiPlus   C~n with parameters (1, q, ..., q)
//   Hminus     C~(n-1) on labels 1..n, parameters (q^2, q, ..., q)
//   HpsiMinus  the same diagram realized inside C~n (s'1 = s1 s0 s1)

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwahori/coxeter.hpp"
#include "iwahori/hecke.hpp"

namespace iwahori {

enum class AlgebraName { Hplus, HpsiPlus, Hminus, HpsiMinus };

inline constexpr AlgebraName kAllAlgebras[] = {AlgebraName::HpsiPlus, AlgebraName::Hplus,
                                               AlgebraName::HpsiMinus, AlgebraName::Hminus};

std::string to_string(AlgebraName name);
/// Accepts the enumerator spelling, case-insensitively.
AlgebraName parse_algebra_name(std::string_view text);
/// Smallest admissible rank: 1 for the plus algebras, 2 for the minus ones.
int min_rank(AlgebraName name);

struct AlgebraSpec {
  AlgebraName name;
  int n;
  AlgebraPtr algebra;
};

/// Builds the algebra and verifies every quadratic and braid relation.
/// Throws InvalidArgument if n is too small, RelationFailure if a relation
/// fails.
AlgebraSpec build(AlgebraName name, int n);
/// Same algebra without the relation sweep.
AlgebraSpec build_unchecked(AlgebraName name, int n);

struct Check {
  std::string kind;
  std::vector<int> indices;
  bool pass = true;
  std::optional<std::string> witness;
};

struct Report {
  std::string algebra;
  int n = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* first_failure() const;
};

/// Quadratic relation for every generator, braid relation for every pair.
Report verify_presentation(const AlgebraSpec& spec);

/// Algebra homomorphism given on generators.  Every image is expected to be a
/// single basis element of the target.
struct IsoMap {
  AlgebraSpec source;
  AlgebraSpec target;
  std::map<int, HeckeElt> images;
};

/// HpsiPlus(n) -> Hplus(n): T0 -> sigma, Ti -> Ui.
IsoMap iso_plus(int n);
/// HpsiMinus(n) -> Hminus(n): Ti -> Ui.
IsoMap iso_minus(int n);

/// Image of an arbitrary element, expanding each basis element along a
/// reduced word of the source.
HeckeElt apply_map(const IsoMap& map, const HeckeElt& h,
                   CoxeterSystem::TieBreak tie = CoxeterSystem::TieBreak::Smallest);

/// Relation preservation, well-definedness on two reduced words, single-basis
/// images, injectivity, trace and star preservation on the source ball of
/// length <= max_length.  Never throws on a failed check.
Report verify_iso(const IsoMap& map, int max_length);

/// iota from the primed group, given natively as C~(n-1) on labels 1..n with
/// s'1 the q^2 node, into C~n.
class WeightedEmbedding {
 public:
  explicit WeightedEmbedding(int n);

  int n() const { return n_; }
  const CoxeterSystem& source() const { return source_; }
  const CoxeterSystem& target() const { return target_; }
  /// The subgroup iota(source) of the target with its own simple reflections.
  const CoxeterSystem& image() const { return image_; }
  /// 3 for s'1, 1 otherwise, indexed like source().labels().
  const std::vector<int>& weights() const { return weights_; }

  /// s'1 -> 1,0,1 and s'i -> i.
  Word expand(const Word& source_word) const;
  AffineElt map_word(const Word& source_word) const;
  AffineElt map(const AffineElt& source_element) const;

  /// length(iota(w)) in C~n.
  int weighted_length(const Word& source_word) const;
  /// Sum of the weights along a reduced source word of the element.
  int weight_sum(const AffineElt& source_element) const;

 private:
  int n_;
  CoxeterSystem source_;
  CoxeterSystem target_;
  CoxeterSystem image_;
  std::vector<int> weights_;
};

WeightedEmbedding embed_weighted(int n);

}  // namespace iwahori
