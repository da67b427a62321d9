#include "iwahori/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "iwahori/detail/layers.hpp"
#include "iwahori/errors.hpp"

namespace iwahori {

std::string to_string(AlgebraName name) {
  switch (name) {
    case AlgebraName::Hplus: return "Hplus";
    case AlgebraName::HpsiPlus: return "HpsiPlus";
    case AlgebraName::Hminus: return "Hminus";
    case AlgebraName::HpsiMinus: return "HpsiMinus";
  }
  return "?";
}

AlgebraName parse_algebra_name(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (AlgebraName name : kAllAlgebras) {
    std::string candidate = to_string(name);
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lower) return name;
  }
  throw InvalidArgument("unknown algebra '" + std::string(text) + "'");
}

int min_rank(AlgebraName name) {
  return name == AlgebraName::Hminus || name == AlgebraName::HpsiMinus ? 2 : 1;
}

namespace {

std::vector<int> labels_from(int first, int count) {
  std::vector<int> labels;
  for (int k = 0; k < count; ++k) labels.push_back(first + k);
  return labels;
}

// q^a with a = lead for the first generator and 1 for the rest.
std::vector<int> exponents(int lead, std::size_t count) {
  std::vector<int> e(count, 1);
  e[0] = lead;
  return e;
}

std::string describe(const Word& word) { return "[" + format_word(word) + "]"; }

}  // namespace

AlgebraSpec build_unchecked(AlgebraName name, int n) {
  if (n < min_rank(name)) {
    throw InvalidArgument(to_string(name) + " needs n >= " + std::to_string(min_rank(name)) + ", got " +
                          std::to_string(n));
  }
  const std::string label = to_string(name) + "(" + std::to_string(n) + ")";
  const auto count = static_cast<std::size_t>(n) + 1;
  AlgebraPtr algebra;
  switch (name) {
    case AlgebraName::Hplus:
      algebra = make_algebra(label, CoxeterSystem::affine_b(n), exponents(1, count), true);
      break;
    case AlgebraName::HpsiPlus:
      algebra = make_algebra(label, CoxeterSystem::affine_c(n), exponents(0, count));
      break;
    case AlgebraName::Hminus:
      algebra = make_algebra(label, CoxeterSystem::affine_c(n - 1).relabeled(labels_from(1, n)),
                             exponents(2, count - 1));
      break;
    case AlgebraName::HpsiMinus:
      algebra = make_algebra(label, CoxeterSystem::primed_c(n), exponents(2, count - 1));
      break;
  }
  return AlgebraSpec{name, n, std::move(algebra)};
}

AlgebraSpec build(AlgebraName name, int n) {
  AlgebraSpec spec = build_unchecked(name, n);
  const Report report = verify_presentation(spec);
  if (const Check* failure = report.first_failure()) {
    throw RelationFailure(spec.algebra->name() + ": " + failure->kind + " relation fails: " +
                          failure->witness.value_or("?"));
  }
  return spec;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::first_failure() const {
  for (const Check& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

Report verify_presentation(const AlgebraSpec& spec) {
  const AlgebraPtr& algebra = spec.algebra;
  Report report{to_string(spec.name), spec.n, {}};
  const std::vector<int> gens = algebra->generators();
  for (int g : gens) {
    if (g == kSigma) {
      const HeckeElt s = generator_elt(algebra, g);
      const HeckeElt defect = mul(s, s) - one(algebra);
      report.checks.push_back({"sigma_involution", {g}, defect.is_zero(), std::nullopt});
      if (!defect.is_zero()) report.checks.back().witness = to_string(defect);
      continue;
    }
    const HeckeElt defect = quadratic_defect(algebra, g);
    Check check{"quadratic", {g}, defect.is_zero(), std::nullopt};
    if (!check.pass) check.witness = to_string(defect);
    report.checks.push_back(std::move(check));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const HeckeElt defect = braid_defect(algebra, gens[i], gens[j]);
      Check check{"braid", {gens[i], gens[j]}, defect.is_zero(), std::nullopt};
      if (!check.pass) check.witness = to_string(defect);
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

IsoMap iso_plus(int n) {
  IsoMap map{build(AlgebraName::HpsiPlus, n), build(AlgebraName::Hplus, n), {}};
  for (int label : map.source.algebra->system().labels()) {
    map.images.emplace(label, generator_elt(map.target.algebra, label == 0 ? kSigma : label));
  }
  return map;
}

IsoMap iso_minus(int n) {
  IsoMap map{build(AlgebraName::HpsiMinus, n), build(AlgebraName::Hminus, n), {}};
  for (int label : map.source.algebra->system().labels()) {
    map.images.emplace(label, generator_elt(map.target.algebra, label));
  }
  return map;
}

namespace {

const HeckeElt& image_of(const IsoMap& map, int gen) {
  auto it = map.images.find(gen);
  if (it == map.images.end()) throw InvalidArgument("no image for generator " + std::to_string(gen));
  return it->second;
}

HeckeElt image_of_word(const IsoMap& map, const Word& word) {
  HeckeElt h = one(map.target.algebra);
  for (int gen : word) h = mul(h, image_of(map, gen));
  return h;
}

std::optional<ExtendedElt> single_basis(const HeckeElt& h) {
  if (h.term_count() != 1) return std::nullopt;
  const auto& [x, c] = *h.terms().begin();
  if (c != LaurentPoly(1)) return std::nullopt;
  return x;
}

std::vector<ExtendedElt> source_ball(const HeckeAlgebra& algebra, int max_length) {
  const std::vector<int> gens = algebra.generators();
  std::vector<int> weights;
  for (int g : gens) weights.push_back(g == kSigma ? 0 : 1);
  const auto layers = detail::weighted_layers<ExtendedElt, ExtendedEltHash>(
      algebra.identity(), weights, max_length,
      [&](std::size_t p, const ExtendedElt& x) { return algebra.left_multiply(gens[p], x); });
  std::vector<ExtendedElt> ball;
  for (const auto& layer : layers) ball.insert(ball.end(), layer.begin(), layer.end());
  return ball;
}

}  // namespace

HeckeElt apply_map(const IsoMap& map, const HeckeElt& h, CoxeterSystem::TieBreak tie) {
  HeckeElt out(map.target.algebra);
  for (const auto& [x, c] : h.terms()) out += c * image_of_word(map, h.algebra().reduced_word(x, tie));
  return out;
}

Report verify_iso(const IsoMap& map, int max_length) {
  const AlgebraPtr& source = map.source.algebra;
  const AlgebraPtr& target = map.target.algebra;
  Report report{to_string(map.source.name) + "->" + to_string(map.target.name), map.source.n, {}};

  const std::vector<int> gens = source->generators();
  for (int g : gens) {
    if (!map.images.contains(g)) {
      report.checks.push_back({"image", {g}, false, "missing image"});
      return report;
    }
  }

  // (a) images satisfy the source relations
  for (int g : gens) {
    const HeckeElt& u = image_of(map, g);
    const HeckeElt defect =
        g == kSigma ? mul(u, u) - one(target) : mul(u + LaurentPoly(1), u - source->parameter(g));
    Check check{"quadratic", {g}, defect.is_zero(), std::nullopt};
    if (!check.pass) check.witness = to_string(defect);
    report.checks.push_back(std::move(check));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int m = source->braid_order(gens[i], gens[j]);
      Check check{"braid", {gens[i], gens[j]}, true, std::nullopt};
      if (m != kInfiniteOrder) {
        Word left;
        Word right;
        for (int k = 0; k < m; ++k) {
          left.push_back(k % 2 == 0 ? gens[i] : gens[j]);
          right.push_back(k % 2 == 0 ? gens[j] : gens[i]);
        }
        const HeckeElt defect = image_of_word(map, left) - image_of_word(map, right);
        check.pass = defect.is_zero();
        if (!check.pass) check.witness = to_string(defect);
      }
      report.checks.push_back(std::move(check));
    }
  }

  // (b) and (c) on the source ball
  Check well_defined{"well_defined", {max_length}, true, std::nullopt};
  Check basis{"single_basis", {max_length}, true, std::nullopt};
  Check injective{"injective", {max_length}, true, std::nullopt};
  Check traces{"trace", {max_length}, true, std::nullopt};
  Check stars{"star", {max_length}, true, std::nullopt};
  auto fail = [](Check& check, std::string witness) {
    if (!check.pass) return;
    check.pass = false;
    check.witness = std::move(witness);
  };

  std::map<ExtendedElt, Word> seen;
  for (const ExtendedElt& x : source_ball(*source, max_length)) {
    const Word word = source->reduced_word(x, CoxeterSystem::TieBreak::Smallest);
    const Word other = source->reduced_word(x, CoxeterSystem::TieBreak::Largest);
    const HeckeElt image = image_of_word(map, word);
    if (other != word && image_of_word(map, other) != image) {
      fail(well_defined, describe(word) + " and " + describe(other) + " have different images");
    }
    const auto target_elt = single_basis(image);
    if (!target_elt) {
      fail(basis, describe(word) + " -> " + to_string(image));
    } else {
      auto [it, inserted] = seen.emplace(*target_elt, word);
      if (!inserted) fail(injective, describe(word) + " and " + describe(it->second) + " share an image");
    }
    const HeckeElt tx = basis_elt(source, x);
    if (trace(image) != trace(tx)) {
      fail(traces, describe(word) + ": trace " + to_string(trace(image)) + " vs " + to_string(trace(tx)));
    }
    const HeckeElt star_image = image_of_word(map, source->reduced_word(source->inverse(x)));
    if (star_image != star(image)) {
      fail(stars, describe(word) + ": " + to_string(star_image) + " vs " + to_string(star(image)));
    }
  }
  for (Check* check : {&well_defined, &basis, &injective, &traces, &stars}) report.checks.push_back(*check);
  return report;
}

// ---------------------------------------------------------------------------
// WeightedEmbedding

WeightedEmbedding::WeightedEmbedding(int n)
    : n_(n),
      source_(n >= 2 ? CoxeterSystem::affine_c(n - 1).relabeled(labels_from(1, n))
                     : throw InvalidArgument("embed_weighted needs n >= 2")),
      target_(CoxeterSystem::affine_c(n)),
      image_(CoxeterSystem::primed_c(n)),
      weights_(exponents(3, static_cast<std::size_t>(n))) {}

Word WeightedEmbedding::expand(const Word& source_word) const {
  Word out;
  for (int label : source_word) {
    source_.position(label);
    if (label == 1) {
      out.insert(out.end(), {1, 0, 1});
    } else {
      out.push_back(label);
    }
  }
  return out;
}

AffineElt WeightedEmbedding::map_word(const Word& source_word) const {
  return target_.from_word(expand(source_word));
}

AffineElt WeightedEmbedding::map(const AffineElt& source_element) const {
  return map_word(source_.reduced_word(source_element));
}

int WeightedEmbedding::weighted_length(const Word& source_word) const {
  return target_.length(map_word(source_word));
}

int WeightedEmbedding::weight_sum(const AffineElt& source_element) const {
  int total = 0;
  for (int label : source_.reduced_word(source_element)) total += weights_[source_.position(label)];
  return total;
}

WeightedEmbedding embed_weighted(int n) { return WeightedEmbedding(n); }

}  // namespace iwahori
