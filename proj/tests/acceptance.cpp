// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iwahori/plancherel.hpp"
#include "iwahori/presentations.hpp"
#include "iwahori/serialize.hpp"
#include "iwahori/specdims.hpp"
#include "support/oracles.hpp"

using namespace iwahori;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
  void require(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }
};

const std::vector<int> kRanks{2, 3, 4};

std::string rank_tag(const std::string& what, int n) { return what + "(" + std::to_string(n) + ")"; }

BigRational abs_value(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

std::vector<AlgebraPtr> c2_regimes() {
  return {build(AlgebraName::HpsiPlus, 2).algebra, build(AlgebraName::Hplus, 2).algebra,
          build(AlgebraName::Hminus, 3).algebra, build(AlgebraName::HpsiMinus, 3).algebra};
}

void presentation_suite(Outcome& o) {
  for (int n : kRanks) {
    for (AlgebraName name : kAllAlgebras) {
      const auto start = Clock::now();
      const AlgebraSpec spec = build_unchecked(name, n);
      const Report report = verify_presentation(spec);
      const double elapsed = seconds_since(start);
      const std::string tag = rank_tag(to_string(name), n);
      o.require(report.all_pass(), tag + " relation failed: " + to_json(report).dump());
      o.require(elapsed < 10.0, tag + " took " + std::to_string(elapsed) + " s");
      std::size_t quadratic = 0;
      for (const Check& c : report.checks) {
        if (c.kind == "quadratic" || c.kind == "sigma_involution") ++quadratic;
      }
      o.require(quadratic == spec.algebra->generators().size(), tag + " missing quadratic checks");
      // exact defects: (T+1)(T-q_s) vanishes
      for (int s : spec.algebra->system().labels()) {
        o.require(quadratic_defect(spec.algebra, s).is_zero(), tag + " nonzero quadratic defect");
      }
    }
  }
  o.detail << "4 algebras x n in {2,3,4}";
}

void isomorphism_suite(Outcome& o) {
  double slowest = 0;
  for (int n : kRanks) {
    for (const auto& [label, make] :
         std::vector<std::pair<std::string, std::function<IsoMap(int)>>>{{"iso_plus", iso_plus}, {"iso_minus", iso_minus}}) {
      const auto start = Clock::now();
      const Report report = verify_iso(make(n), 6);
      const double elapsed = seconds_since(start);
      slowest = std::max(slowest, elapsed);
      const std::string tag = rank_tag(label, n);
      o.require(report.all_pass(), tag + " failed: " + to_json(report).dump());
      o.require(elapsed < 60.0, tag + " took " + std::to_string(elapsed) + " s");
      std::set<std::string> kinds;
      for (const Check& c : report.checks) kinds.insert(c.kind);
      for (const char* kind : {"quadratic", "braid", "injective", "trace", "star"}) {
        o.require(kinds.count(kind) == 1, tag + " did not check " + kind);
      }
    }
  }
  if (o.pass) o.detail << "L=6, slowest case " << slowest << " s";
}

void eigenvalue_table(Outcome& o) {
  const RationalLaurent q = RationalLaurent::q();
  for (int n : kRanks) {
    for (int e : {0, 1, 2}) {
      for (int i = 0; i <= n; ++i) {
        const auto plus = plus_subalgebra(n, e, i);
        o.require(plus.lambda1 == (i == 0 ? RationalLaurent(1) : q), "plus symbolic i=" + std::to_string(i));
        for (int qv : {2, 3, 5}) {
          const auto numeric = plus_subalgebra(n, e, i, BigInt(qv));
          o.require(numeric.lambda1 == (i == 0 ? BigRational(1) : BigRational(qv)), "plus numeric");
        }
      }
      for (int i = 1; i <= n; ++i) {
        const auto minus = minus_subalgebra(n, e, i);
        o.require(minus.lambda1 == (i == 1 ? q * q : q), "minus symbolic i=" + std::to_string(i));
        for (int qv : {2, 3, 5}) {
          const auto numeric = minus_subalgebra(n, e, i, BigInt(qv));
          o.require(numeric.lambda1 == BigRational(i == 1 ? qv * qv : qv), "minus numeric");
        }
      }
    }
  }
  o.detail << "n in {2,3,4}, e in {0,1,2}, q in {2,3,5} and symbolic";
}

void index_identity(Outcome& o) {
  o.require(index_J1() == LaurentPoly::from_terms({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), "index_J1 != 1+q+q^2+q^3");
  const Ball ball = enumerate_ball(CoxeterSystem::finite_c(2), 8);
  LaurentPoly bfs;
  for (std::size_t k = 0; k < ball.layers.size(); ++k) {
    bfs += LaurentPoly::monomial(static_cast<int>(k), BigInt(ball.layers[k].size()));
  }
  o.require(ball.size() == 8, "finite C2 does not have order 8");
  o.require(bfs == LaurentPoly::from_terms({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}), "BFS polynomial " + to_string(bfs));
  o.require(index_J1_numerator() == bfs, "numerator differs from BFS polynomial");
  o.detail << "numerator " << to_string(bfs);
}

void weighted_length(Outcome& o) {
  std::size_t elements = 0;
  std::size_t additive_pairs = 0;
  for (int n : {2, 3}) {
    const WeightedEmbedding iota = embed_weighted(n);
    const Ball ball = enumerate_weighted_ball(iota.source(), iota.weights(), 9);
    std::vector<std::pair<AffineElt, int>> small;
    for (std::size_t k = 0; k < ball.layers.size(); ++k) {
      for (const AffineElt& w : ball.layers[k]) {
        ++elements;
        const int image_length = iota.target().length(iota.map(w));
        o.require(iota.weight_sum(w) == static_cast<int>(k), "weight sum differs from layer");
        o.require(image_length == static_cast<int>(k), "length(iota(w)) != l'(w)");
        o.require(iota.weighted_length(iota.source().reduced_word(w)) == image_length, "weighted_length mismatch");
        if (k <= 5) small.emplace_back(w, static_cast<int>(k));
      }
    }
    const AlgebraPtr hpsi = build(AlgebraName::HpsiMinus, n).algebra;
    auto T = [&](const AffineElt& w) { return basis_elt(hpsi, ExtendedElt{false, iota.map(w)}); };
    for (const auto& [w1, l1] : small) {
      for (const auto& [w2, l2] : small) {
        const AffineElt product = compose(w1, w2);
        if (iota.weight_sum(product) != l1 + l2) continue;
        ++additive_pairs;
        o.require(mul(T(w1), T(w2)) == T(product), "T_w1 T_w2 != T_w1w2 for an l'-additive pair");
      }
    }
  }
  o.detail << elements << " elements with l' <= 9, " << additive_pairs << " additive pairs with l' <= 5";
}

void formal_degree(Outcome& o) {
  const BigRational tol(1, 1'000'000'000'000LL);
  for (int n : {2, 3}) {
    for (int qv : {2, 3}) {
      for (const auto& [a, b] : {std::pair{AlgebraName::HpsiPlus, AlgebraName::Hplus},
                                 std::pair{AlgebraName::HpsiMinus, AlgebraName::Hminus}}) {
        const FdComparison c = compare_fd(build(a, n), build(b, n), 12, BigRational(qv));
        const std::string tag = to_string(a) + "/" + to_string(b) + " n=" + std::to_string(n) + " q=" + std::to_string(qv);
        o.require(c.layers_equal && c.layers_a.size() == 13, tag + " layer counts differ");
        o.require(abs_value(c.fd_a.value - c.fd_b.value) < tol, tag + " truncated fd differs");
        o.require(abs_value(c.exact_a - c.exact_b) < tol, tag + " exact fd differs");
        o.require(c.pass(), tag + " comparison failed");
      }
    }
  }
  const auto dihedral = CoxeterSystem::infinite_dihedral();
  const std::vector<int> unit{1, 1};
  for (int qv : {2, 3, 4}) {
    o.require(steinberg_fd_exact(dihedral, unit, BigRational(qv)) == BigRational(qv - 1, qv + 1),
              "dihedral fd != (q-1)/(q+1)");
  }
  const FormalDegree truncated = steinberg_fd(poincare(dihedral, unit, 14), 3);
  o.require(abs_value(truncated.value - BigRational(1, 2)) < BigRational(1, 100000), "dihedral truncated fd far from 1/2");
  o.detail << "layers k <= 12, n in {2,3}, q in {2,3}; dihedral fd(3) = 1/2";
}

void oracle_equivalence(Outcome& o) {
  std::size_t pairs = 0;
  std::size_t discrepancies = 0;
  for (const AlgebraPtr& a : c2_regimes()) {
    testing::RewriteOracle oracle = testing::RewriteOracle::from_algebra(*a);
    const auto ball = testing::extended_ball(*a, 3);
    for (const ExtendedElt& x : ball) {
      for (const ExtendedElt& y : ball) {
        ++pairs;
        const HeckeElt expected = testing::to_hecke(a, oracle.multiply(a->reduced_word(x), a->reduced_word(y)));
        if (mul(basis_elt(a, x), basis_elt(a, y)) != expected) ++discrepancies;
      }
    }
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.detail << pairs << " basis pairs, " << discrepancies << " discrepancies";
}

void hilbert_structure(Outcome& o) {
  std::size_t pairs = 0;
  for (const AlgebraPtr& a : c2_regimes()) {
    const auto ball = testing::extended_ball(*a, 4);
    std::vector<HeckeElt> basis;
    for (const ExtendedElt& x : ball) basis.push_back(basis_elt(a, x));
    for (const HeckeElt& x : basis) {
      o.require(star(star(x)) == x, a->name() + " star is not an involution");
      for (const HeckeElt& y : basis) {
        ++pairs;
        const HeckeElt xy = mul(x, y);
        o.require(trace(xy) == trace(mul(y, x)), a->name() + " trace is not symmetric");
        o.require(star(xy) == mul(star(y), star(x)), a->name() + " star is not an anti-automorphism");
      }
    }
    for (int gen : a->generators()) {
      const HeckeElt t = generator_elt(a, gen);
      const int exponent = gen == kSigma ? 0 : a->parameter_exponent(gen);
      const HeckeElt inverse = LaurentPoly::q(-exponent) * (t - (LaurentPoly::q(exponent) - 1));
      o.require(mul(t, inverse) == one(a) && mul(inverse, t) == one(a), a->name() + " generator inverse");
      if (exponent == 0) o.require(mul(t, t) == one(a), a->name() + " T^-1 != T for a parameter-1 generator");
    }
  }
  o.detail << pairs << " basis pairs with l <= 4";
}

void growth_sanity(Outcome& o) {
  const auto oracle = testing::word_enumeration_counts(testing::affine_c_matrices(2), 5);
  const auto layers = enumerate_ball(CoxeterSystem::affine_c(2), 5).layer_sizes();
  o.require(oracle == layers, "C~2 layers differ from word enumeration");
  o.require(layers == std::vector<std::size_t>{1, 3, 5, 8, 11, 13}, "C~2 layers differ from 1,3,5,8,11,13");
  const auto dihedral = enumerate_ball(CoxeterSystem::infinite_dihedral(), 14).layer_sizes();
  for (std::size_t k = 1; k < dihedral.size(); ++k) o.require(dihedral[k] == 2, "dihedral N_k != 2");
  o.detail << "C~2 N_k = 1 3 5 8 11 13; dihedral N_k = 2 for 1 <= k <= 14";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"presentation suite", presentation_suite},
      {"isomorphism suite", isomorphism_suite},
      {"eigenvalue table", eigenvalue_table},
      {"index identity", index_identity},
      {"weighted length", weighted_length},
      {"formal degree", formal_degree},
      {"oracle equivalence", oracle_equivalence},
      {"hilbert structure", hilbert_structure},
      {"growth sanity", growth_sanity},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      criteria[k].second(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (!outcome.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " [" << timing
              << "] " << outcome.detail.str() << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
