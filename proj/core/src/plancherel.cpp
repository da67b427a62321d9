#include "iwahori/plancherel.hpp"

#include <unordered_map>

#include "iwahori/detail/layers.hpp"
#include "iwahori/errors.hpp"
#include "iwahori/specdims.hpp"

namespace iwahori {

LaurentPoly PoincareSeries::layer(int k) const {
  if (k < 0 || k > truncation()) throw InvalidArgument("layer index out of range");
  return LaurentPoly::monomial(k, counts[static_cast<std::size_t>(k)]);
}

LaurentPoly PoincareSeries::total() const {
  LaurentPoly sum;
  for (int k = 0; k <= truncation(); ++k) sum += layer(k);
  return sum;
}

namespace {

template <typename Layers>
PoincareSeries from_layers(const Layers& layers) {
  PoincareSeries series;
  for (const auto& layer : layers) series.counts.emplace_back(layer.size());
  return series;
}

void check_bound(int max_weight, int cap) {
  if (max_weight < 0) throw InvalidArgument("negative truncation");
  if (max_weight > cap) {
    throw CapExceeded("truncation " + std::to_string(max_weight) + " exceeds cap " + std::to_string(cap));
  }
}

BigRational abs_value(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

// Whether the standard parabolic on the positions in mask is finite.
bool parabolic_is_finite(const CoxeterSystem& system, unsigned mask) {
  const unsigned full = (1u << system.generator_count()) - 1;
  switch (system.kind()) {
    case SystemKind::FiniteC:
      return true;
    case SystemKind::AffineC:
    case SystemKind::AffineB:
    case SystemKind::InfiniteDihedral:
    case SystemKind::PrimedC:
      return mask != full;
    case SystemKind::Parabolic:
      break;
  }
  std::vector<int> labels;
  for (std::size_t p = 0; p < system.generator_count(); ++p) {
    if (mask & (1u << p)) labels.push_back(system.labels()[p]);
  }
  const std::vector<int> unit(labels.size(), 1);
  try {
    finite_poincare(system.parabolic(labels), unit, 100'000);
    return true;
  } catch (const CapExceeded&) {
    return false;
  }
}

}  // namespace

PoincareSeries poincare(const CoxeterSystem& system, std::span<const int> weights, int max_weight, int cap) {
  return from_layers(enumerate_weighted_ball(system, weights, max_weight, cap).layers);
}

PoincareSeries poincare(const HeckeAlgebra& algebra, int max_weight, int cap) {
  check_bound(max_weight, cap);
  const std::vector<int> gens = algebra.generators();
  std::vector<int> weights;
  for (int g : gens) weights.push_back(algebra.parameter_exponent(g));
  return from_layers(detail::weighted_layers<ExtendedElt, ExtendedEltHash>(
      algebra.identity(), weights, max_weight,
      [&](std::size_t p, const ExtendedElt& x) { return algebra.left_multiply(gens[p], x); }));
}

LaurentPoly finite_poincare(const CoxeterSystem& system, std::span<const int> weights, std::size_t max_elements) {
  if (weights.size() != system.generator_count()) throw InvalidArgument("one weight per generator required");
  std::unordered_map<AffineElt, int, AffineEltHash> weight_of;
  std::vector<AffineElt> frontier{system.identity()};
  weight_of.emplace(system.identity(), 0);
  LaurentPoly total(1);
  while (!frontier.empty()) {
    std::vector<AffineElt> next;
    for (const AffineElt& w : frontier) {
      const int base = weight_of.at(w);
      for (std::size_t p = 0; p < weights.size(); ++p) {
        AffineElt v = compose(system.generator(system.labels()[p]), w);
        if (weight_of.contains(v)) continue;
        const int weight = base + weights[p];
        weight_of.emplace(v, weight);
        total.add_term(weight, BigInt(1));
        next.push_back(std::move(v));
        if (weight_of.size() > max_elements) {
          throw CapExceeded("group has more than " + std::to_string(max_elements) + " elements");
        }
      }
    }
    frontier = std::move(next);
  }
  return total;
}

FormalDegree steinberg_fd(const PoincareSeries& series, const BigRational& q, const BigRational& tol) {
  if (q <= 1) throw InvalidArgument("steinberg_fd needs q > 1");
  if (series.counts.empty()) throw InvalidArgument("empty Poincare series");
  FormalDegree fd;
  const BigRational inverse = 1 / q;
  BigRational scale(1);
  BigRational sum(0);
  std::vector<BigRational> increments;
  for (const BigInt& count : series.counts) {
    increments.emplace_back(BigRational(count) * scale);
    sum += increments.back();
    fd.partial_sums.push_back(sum);
    scale *= inverse;
  }
  fd.value = 1 / sum;
  fd.converged = increments.back() / sum < tol;
  const std::size_t m = increments.size();
  fd.diverging = m >= 3 && increments[m - 1] > increments[m - 2] && increments[m - 2] > increments[m - 3];
  if (fd.converged) {
    fd.tail_note = "last increment below tolerance relative to the partial sum";
  } else if (fd.diverging) {
    fd.tail_note = "increments still growing at layer " + std::to_string(series.truncation()) +
                   "; partial sum is far from the limit";
  } else {
    fd.tail_note = "not converged at layer " + std::to_string(series.truncation()) + "; last relative increment " +
                   to_string(increments.back() / sum);
  }
  return fd;
}

BigRational steinberg_fd_exact(const CoxeterSystem& system, std::span<const int> weights, const BigRational& q) {
  if (q <= 1) throw InvalidArgument("steinberg_fd_exact needs q > 1");
  if (weights.size() != system.generator_count()) throw InvalidArgument("one weight per generator required");
  const std::size_t count = system.generator_count();
  if (count > 16) throw InvalidArgument("too many generators");
  BigRational sum(0);
  for (unsigned mask = 0; mask < (1u << count); ++mask) {
    if (!parabolic_is_finite(system, mask)) continue;
    std::vector<int> labels;
    std::vector<int> sub_weights;
    for (std::size_t p = 0; p < count; ++p) {
      if (mask & (1u << p)) {
        labels.push_back(system.labels()[p]);
        sub_weights.push_back(weights[p]);
      }
    }
    const BigRational w_j = evaluate(finite_poincare(system.parabolic(labels), sub_weights), q);
    sum += (labels.size() % 2 == 0 ? BigRational(1) : BigRational(-1)) / w_j;
  }
  return sum;
}

BigRational steinberg_fd_exact(const HeckeAlgebra& algebra, const BigRational& q) {
  std::vector<int> weights;
  for (int label : algebra.system().labels()) weights.push_back(algebra.parameter_exponent(label));
  const BigRational value = steinberg_fd_exact(algebra.system(), weights, q);
  return algebra.extended() ? BigRational(value / 2) : value;
}

bool FdComparison::pass() const {
  return layers_equal && abs_value(fd_a.value - fd_b.value) < kDefaultTolerance &&
         abs_value(exact_a - exact_b) < kDefaultTolerance;
}

FdComparison compare_fd(const AlgebraSpec& a, const AlgebraSpec& b, int max_layer, const BigRational& q, int e,
                        const BigRational& tol) {
  auto linked = [](AlgebraName x, AlgebraName y) {
    auto plus = [](AlgebraName z) { return z == AlgebraName::Hplus || z == AlgebraName::HpsiPlus; };
    return x != y && plus(x) == plus(y);
  };
  if (!linked(a.name, b.name)) {
    throw InvalidArgument("compare_fd: " + to_string(a.name) + " and " + to_string(b.name) + " are not linked");
  }
  if (a.n != b.n) {
    throw InvalidArgument("compare_fd: ranks differ (" + std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
  }
  FdComparison report;
  report.algebra_a = to_string(a.name);
  report.algebra_b = to_string(b.name);
  report.n = a.n;
  report.max_layer = max_layer;
  report.q = q;
  report.layers_a = poincare(*a.algebra, max_layer).counts;
  report.layers_b = poincare(*b.algebra, max_layer).counts;
  report.layers_equal = report.layers_a == report.layers_b;
  for (std::size_t k = 0; k < report.layers_a.size(); ++k) {
    if (report.layers_a[k] != report.layers_b[k]) {
      report.first_mismatch = static_cast<int>(k);
      break;
    }
  }
  auto ratio = [&](AlgebraName name) {
    const Normalization norm = normalization(name, a.n, e);
    return BigRational(evaluate(norm.vol, q) / evaluate(norm.dim, q));
  };
  auto scaled = [](FormalDegree fd, const BigRational& r) {
    fd.value *= r;
    return fd;
  };
  report.ratio_a = ratio(a.name);
  report.ratio_b = ratio(b.name);
  report.fd_a = scaled(steinberg_fd(PoincareSeries{report.layers_a}, q, tol), report.ratio_a);
  report.fd_b = scaled(steinberg_fd(PoincareSeries{report.layers_b}, q, tol), report.ratio_b);
  report.exact_a = steinberg_fd_exact(*a.algebra, q) * report.ratio_a;
  report.exact_b = steinberg_fd_exact(*b.algebra, q) * report.ratio_b;
  return report;
}

CosetSeriesCheck primed_coset_series(int n, int max_length, int cap) {
  const WeightedEmbedding iota(n);
  CosetSeriesCheck check;
  check.n = n;
  check.max_length = max_length;
  const Ball ball = enumerate_ball(iota.target(), max_length, cap);
  for (const auto& layer : ball.layers) {
    BigInt count = 0;
    for (const AffineElt& w : layer) {
      if (iota.image().contains(w)) ++count;
    }
    check.embedded.push_back(count);
  }
  check.weighted = poincare(iota.source(), iota.weights(), max_length, cap).counts;
  return check;
}

}  // namespace iwahori
