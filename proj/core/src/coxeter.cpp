#include "iwahori/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "iwahori/detail/layers.hpp"
#include "iwahori/errors.hpp"

namespace iwahori {

// ---------------------------------------------------------------------------
// AffineRoot / AffineElt

bool AffineRoot::is_positive() const {
  if (shift != 0) return shift > 0;
  for (int a : alpha) {
    if (a != 0) return a > 0;
  }
  throw InvalidArgument("zero vector is not a root");
}

AffineElt::AffineElt(int dim) : columns_(static_cast<std::size_t>(dim)),
                                translation_(static_cast<std::size_t>(dim), 0) {
  if (dim < 0) throw InvalidArgument("negative dimension");
  std::iota(columns_.begin(), columns_.end(), 1);
}

AffineElt::AffineElt(std::vector<int> signed_columns, std::vector<long long> translation)
    : columns_(std::move(signed_columns)), translation_(std::move(translation)) {
  if (columns_.size() != translation_.size()) {
    throw InvalidArgument("linear part and translation differ in size");
  }
  std::vector<bool> used(columns_.size(), false);
  for (int c : columns_) {
    const int col = std::abs(c) - 1;
    if (c == 0 || col >= dim() || used[static_cast<std::size_t>(col)]) {
      throw InvalidArgument("linear part is not a signed permutation");
    }
    used[static_cast<std::size_t>(col)] = true;
  }
}

int AffineElt::column(int row) const { return std::abs(columns_.at(static_cast<std::size_t>(row))) - 1; }

int AffineElt::sign(int row) const { return columns_.at(static_cast<std::size_t>(row)) > 0 ? 1 : -1; }

int AffineElt::entry(int row, int col) const { return column(row) == col ? sign(row) : 0; }

std::vector<long long> AffineElt::apply(std::span<const long long> x) const {
  if (static_cast<int>(x.size()) != dim()) throw InvalidArgument("point has wrong dimension");
  std::vector<long long> y(x.size());
  for (int i = 0; i < dim(); ++i) {
    y[static_cast<std::size_t>(i)] =
        sign(i) * x[static_cast<std::size_t>(column(i))] + translation_[static_cast<std::size_t>(i)];
  }
  return y;
}

AffineElt AffineElt::inverse() const {
  // x = A^T (y - b)
  std::vector<int> cols(columns_.size());
  std::vector<long long> shift(columns_.size(), 0);
  for (int i = 0; i < dim(); ++i) {
    const int j = column(i);
    const int s = sign(i);
    cols[static_cast<std::size_t>(j)] = s * (i + 1);
    shift[static_cast<std::size_t>(j)] = -s * translation_[static_cast<std::size_t>(i)];
  }
  return AffineElt(std::move(cols), std::move(shift));
}

bool AffineElt::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (columns_[static_cast<std::size_t>(i)] != i + 1 || translation_[static_cast<std::size_t>(i)] != 0) {
      return false;
    }
  }
  return true;
}

std::string AffineElt::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? " " : "") << columns_[i];
  out << "] + (";
  for (std::size_t i = 0; i < translation_.size(); ++i) out << (i ? ", " : "") << translation_[i];
  out << ')';
  return out.str();
}

AffineElt compose(const AffineElt& u, const AffineElt& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("compose: rank mismatch");
  const int n = u.dim();
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::vector<long long> shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int k = u.column(i);
    const int s = u.sign(i);
    cols[static_cast<std::size_t>(i)] = s * v.sign(k) * (v.column(k) + 1);
    shift[static_cast<std::size_t>(i)] =
        s * v.translation()[static_cast<std::size_t>(k)] + u.translation()[static_cast<std::size_t>(i)];
  }
  return AffineElt(std::move(cols), std::move(shift));
}

AffineRoot act_on_root(const AffineElt& w, const AffineRoot& r) {
  if (static_cast<int>(r.alpha.size()) != w.dim()) throw InvalidArgument("root has wrong dimension");
  AffineRoot out;
  out.alpha.resize(r.alpha.size());
  long long pairing = 0;
  for (int i = 0; i < w.dim(); ++i) {
    const int a = w.sign(i) * r.alpha[static_cast<std::size_t>(w.column(i))];
    out.alpha[static_cast<std::size_t>(i)] = a;
    pairing += static_cast<long long>(a) * w.translation()[static_cast<std::size_t>(i)];
  }
  out.shift = r.shift - pairing;
  return out;
}

AffineElt reflection(const AffineRoot& r) {
  const int n = static_cast<int>(r.alpha.size());
  int norm = 0;
  for (int a : r.alpha) norm += a * a;
  if (norm != 1 && norm != 2 && norm != 4) throw InvalidArgument("not a root of type B or C");
  std::vector<int> coroot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int twice = 2 * r.alpha[static_cast<std::size_t>(i)];
    if (twice % norm != 0) throw InvalidArgument("coroot is not integral");
    coroot[static_cast<std::size_t>(i)] = twice / norm;
  }
  // Linear part I - coroot * alpha^T, translation -shift * coroot.
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  std::vector<long long> shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = (i == j ? 1 : 0) - coroot[static_cast<std::size_t>(i)] * r.alpha[static_cast<std::size_t>(j)];
      if (m == 0) continue;
      if ((m != 1 && m != -1) || cols[static_cast<std::size_t>(i)] != 0) {
        throw InvalidArgument("reflection is not a signed permutation");
      }
      cols[static_cast<std::size_t>(i)] = m * (j + 1);
    }
    shift[static_cast<std::size_t>(i)] = -r.shift * coroot[static_cast<std::size_t>(i)];
  }
  return AffineElt(std::move(cols), std::move(shift));
}

std::size_t AffineEltHash::operator()(const AffineElt& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](long long v) {
    h ^= std::hash<long long>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int c : w.signed_columns()) mix(c);
  for (long long t : w.translation()) mix(t);
  return h;
}

std::size_t ExtendedEltHash::operator()(const ExtendedElt& x) const noexcept {
  const std::size_t h = AffineEltHash{}(x.w);
  return x.sigma ? ~h : h;
}

// ---------------------------------------------------------------------------
// CoxeterSystem

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::AffineC: return "AffineC";
    case SystemKind::AffineB: return "AffineB";
    case SystemKind::FiniteC: return "FiniteC";
    case SystemKind::InfiniteDihedral: return "InfiniteDihedral";
    case SystemKind::PrimedC: return "PrimedC";
    case SystemKind::Parabolic: return "Parabolic";
  }
  return "?";
}

namespace {

std::vector<int> unit(int dim, int i, int value) {
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = value;
  return v;
}

AffineRoot root(std::vector<int> alpha, long long shift = 0) { return AffineRoot{std::move(alpha), shift}; }

// e_i - e_(i+1), zero-based i.
AffineRoot adjacent(int dim, int i) {
  auto v = unit(dim, i, 1);
  v[static_cast<std::size_t>(i + 1)] = -1;
  return root(std::move(v));
}

using Matrix = std::vector<std::vector<int>>;

Matrix commuting(std::size_t size) {
  Matrix m(size, std::vector<int>(size, 2));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

void bond(Matrix& m, std::size_t a, std::size_t b, int order) {
  m[a][b] = order;
  m[b][a] = order;
}

// Positions 0..size-1 in a C~ chain: 4 at both ends, 3 inside; infinity if
// only two nodes.
Matrix affine_c_chain(std::size_t size) {
  Matrix m = commuting(size);
  if (size == 2) {
    bond(m, 0, 1, kInfiniteOrder);
    return m;
  }
  for (std::size_t i = 0; i + 1 < size; ++i) {
    const bool end = i == 0 || i + 2 == size;
    bond(m, i, i + 1, end ? 4 : 3);
  }
  return m;
}

std::vector<int> iota_labels(int first, int count) {
  std::vector<int> labels(static_cast<std::size_t>(count));
  std::iota(labels.begin(), labels.end(), first);
  return labels;
}

}  // namespace

CoxeterSystem::CoxeterSystem(SystemKind kind, int rank, int dim, std::vector<int> labels,
                             std::vector<AffineRoot> roots, Matrix matrix)
    : kind_(kind), rank_(rank), dim_(dim), labels_(std::move(labels)), roots_(std::move(roots)),
      matrix_(std::move(matrix)), sigma_(dim) {
  generators_.reserve(roots_.size());
  for (const auto& r : roots_) generators_.push_back(reflection(r));
}

CoxeterSystem CoxeterSystem::affine_c(int n) {
  if (n < 1) throw InvalidArgument("AffineC needs n >= 1");
  std::vector<AffineRoot> roots;
  roots.push_back(root(unit(n, 0, -2), 1));
  for (int i = 0; i + 1 < n; ++i) roots.push_back(adjacent(n, i));
  roots.push_back(root(unit(n, n - 1, 2)));
  return CoxeterSystem(SystemKind::AffineC, n, n, iota_labels(0, n + 1), std::move(roots),
                       affine_c_chain(static_cast<std::size_t>(n) + 1));
}

CoxeterSystem CoxeterSystem::affine_b(int n) {
  if (n < 1) throw InvalidArgument("AffineB needs n >= 1");
  std::vector<AffineRoot> roots;
  Matrix m = commuting(static_cast<std::size_t>(n) + 1);
  if (n == 1) {
    roots.push_back(root(unit(1, 0, -1), 1));
    roots.push_back(root(unit(1, 0, 1)));
    bond(m, 0, 1, kInfiniteOrder);
  } else {
    auto theta = unit(n, 0, -1);
    theta[1] = -1;
    roots.push_back(root(std::move(theta), 1));
    for (int i = 0; i + 1 < n; ++i) roots.push_back(adjacent(n, i));
    roots.push_back(root(unit(n, n - 1, 1)));
    if (n == 2) {
      bond(m, 0, 2, 4);
      bond(m, 1, 2, 4);
    } else {
      bond(m, 0, 2, 3);
      bond(m, 1, 2, 3);
      for (std::size_t i = 2; i + 1 < static_cast<std::size_t>(n); ++i) bond(m, i, i + 1, 3);
      bond(m, static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n), 4);
    }
  }
  CoxeterSystem system(SystemKind::AffineB, n, n, iota_labels(0, n + 1), std::move(roots), std::move(m));
  // x1 -> 1 - x1: normalizes the B~n alcove and swaps s0 with s1.
  system.sigma_ = reflection(root(unit(n, 0, -2), 1));
  return system;
}

CoxeterSystem CoxeterSystem::finite_c(int n) {
  if (n < 1) throw InvalidArgument("FiniteC needs n >= 1");
  std::vector<AffineRoot> roots;
  for (int i = 0; i + 1 < n; ++i) roots.push_back(adjacent(n, i));
  roots.push_back(root(unit(n, n - 1, 2)));
  Matrix m = commuting(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
    bond(m, i, i + 1, i + 2 == static_cast<std::size_t>(n) ? 4 : 3);
  }
  return CoxeterSystem(SystemKind::FiniteC, n, n, iota_labels(1, n), std::move(roots), std::move(m));
}

CoxeterSystem CoxeterSystem::infinite_dihedral() {
  std::vector<AffineRoot> roots{root({-2}, 1), root({2})};
  return CoxeterSystem(SystemKind::InfiniteDihedral, 1, 1, {0, 1}, std::move(roots), affine_c_chain(2));
}

CoxeterSystem CoxeterSystem::primed_c(int n) {
  if (n < 2) throw InvalidArgument("PrimedC needs n >= 2");
  std::vector<AffineRoot> roots;
  roots.push_back(root(unit(n, 1, -2), 1));  // s'1 = s1 s0 s1 reflects in -2e2 + 1
  for (int i = 1; i + 1 < n; ++i) roots.push_back(adjacent(n, i));
  roots.push_back(root(unit(n, n - 1, 2)));
  return CoxeterSystem(SystemKind::PrimedC, n, n, iota_labels(1, n), std::move(roots),
                       affine_c_chain(static_cast<std::size_t>(n)));
}

CoxeterSystem CoxeterSystem::parabolic(std::span<const int> labels) const {
  std::vector<std::size_t> keep;
  for (int label : labels) keep.push_back(position(label));
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> sub_labels;
  std::vector<AffineRoot> sub_roots;
  Matrix m(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    sub_labels.push_back(labels_[keep[a]]);
    sub_roots.push_back(roots_[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) m[a][b] = matrix_[keep[a]][keep[b]];
  }
  return CoxeterSystem(SystemKind::Parabolic, static_cast<int>(keep.size()), dim_, std::move(sub_labels),
                       std::move(sub_roots), std::move(m));
}

CoxeterSystem CoxeterSystem::relabeled(std::vector<int> labels) const {
  if (labels.size() != labels_.size()) throw InvalidArgument("relabeled: wrong number of labels");
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("relabeled: duplicate labels");
  }
  CoxeterSystem copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::string CoxeterSystem::name() const {
  if (kind_ == SystemKind::InfiniteDihedral) return "InfiniteDihedral";
  return to_string(kind_) + "(" + std::to_string(rank_) + ")";
}

bool CoxeterSystem::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t CoxeterSystem::position(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("generator index " + std::to_string(label) + " out of range for " + name());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

const AffineElt& CoxeterSystem::generator(int label) const { return generators_[position(label)]; }

const AffineRoot& CoxeterSystem::simple_root(int label) const { return roots_[position(label)]; }

int CoxeterSystem::coxeter_entry(int a, int b) const { return matrix_[position(a)][position(b)]; }

AffineElt CoxeterSystem::from_word(const Word& word) const {
  AffineElt w = identity();
  for (int label : word) w = compose(w, generator(label));
  return w;
}

bool CoxeterSystem::is_left_descent(const AffineElt& w, int label) const {
  return act_on_root(w.inverse(), simple_root(label)).is_negative();
}

bool CoxeterSystem::is_right_descent(const AffineElt& w, int label) const {
  return act_on_root(w, simple_root(label)).is_negative();
}

std::vector<int> CoxeterSystem::left_descents(const AffineElt& w) const {
  std::vector<int> out;
  const AffineElt inv = w.inverse();
  for (std::size_t p = 0; p < labels_.size(); ++p) {
    if (act_on_root(inv, roots_[p]).is_negative()) out.push_back(labels_[p]);
  }
  return out;
}

Word CoxeterSystem::reduced_word(const AffineElt& w, TieBreak tie) const {
  if (w.dim() != dim_) throw InvalidArgument("element has wrong dimension for " + name());
  Word word;
  AffineElt rest = w;
  // Visit labels in increasing (or decreasing) order; the first descent wins.
  std::vector<std::size_t> order(labels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tie == TieBreak::Smallest ? labels_[a] < labels_[b] : labels_[a] > labels_[b];
  });
  while (!rest.is_identity()) {
    const AffineElt inv = rest.inverse();
    bool stripped = false;
    for (std::size_t p : order) {
      if (act_on_root(inv, roots_[p]).is_negative()) {
        word.push_back(labels_[p]);
        rest = compose(generators_[p], rest);
        stripped = true;
        break;
      }
    }
    if (!stripped) throw InvalidArgument("element " + w.to_string() + " is not in " + name());
  }
  return word;
}

int CoxeterSystem::length(const AffineElt& w) const { return static_cast<int>(reduced_word(w).size()); }

bool CoxeterSystem::contains(const AffineElt& w) const {
  if (w.dim() != dim_) return false;
  try {
    reduced_word(w);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

void CoxeterSystem::require_affine_b(const char* what) const {
  if (kind_ != SystemKind::AffineB) {
    throw InvalidArgument(std::string(what) + " is only defined for AffineB, not " + name());
  }
}

int CoxeterSystem::sigma_label(int label) const {
  require_affine_b("sigma_label");
  position(label);
  if (label == 0) return 1;
  if (label == 1) return 0;
  return label;
}

AffineElt CoxeterSystem::diagram_automorphism(const AffineElt& w) const {
  require_affine_b("diagram_automorphism");
  Word word = reduced_word(w);
  for (int& label : word) label = sigma_label(label);
  return from_word(word);
}

AffineElt CoxeterSystem::sigma_conjugate(const AffineElt& w) const {
  require_affine_b("sigma_conjugate");
  return compose(sigma_, compose(w, sigma_));  // sigma is an involution
}

const AffineElt& CoxeterSystem::sigma_element() const {
  require_affine_b("sigma_element");
  return sigma_;
}

// ---------------------------------------------------------------------------
// Balls

std::size_t Ball::size() const {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

std::vector<std::size_t> Ball::layer_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& layer : layers) sizes.push_back(layer.size());
  return sizes;
}

namespace {

void check_cap(int bound, int cap) {
  if (bound < 0) throw InvalidArgument("negative ball radius");
  if (bound > cap) {
    throw CapExceeded("ball radius " + std::to_string(bound) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Ball enumerate_ball(const CoxeterSystem& system, int max_length, int cap) {
  check_cap(max_length, cap);
  Ball ball;
  std::unordered_set<AffineElt, AffineEltHash> seen;
  ball.layers.push_back({system.identity()});
  seen.insert(system.identity());
  for (int k = 1; k <= max_length; ++k) {
    std::vector<AffineElt> next;
    for (const AffineElt& w : ball.layers.back()) {
      for (int label : system.labels()) {
        AffineElt v = compose(system.generator(label), w);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    ball.layers.push_back(std::move(next));
  }
  return ball;
}

Ball enumerate_weighted_ball(const CoxeterSystem& system, std::span<const int> weights, int max_weight,
                             int cap) {
  check_cap(max_weight, cap);
  if (weights.size() != system.generator_count()) {
    throw InvalidArgument("one weight per generator required");
  }
  Ball ball;
  ball.layers = detail::weighted_layers<AffineElt, AffineEltHash>(
      system.identity(), weights, max_weight, [&](std::size_t p, const AffineElt& x) {
        return compose(system.generator(system.labels()[p]), x);
      });
  return ball;
}

// ---------------------------------------------------------------------------
// Word syntax

Word parse_word(std::string_view text) {
  Word word;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return word;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = trim(text.substr(start, end - start));
    if (token == "sigma") {
      word.push_back(kSigma);
    } else {
      if (token.empty()) throw InvalidArgument("empty token in word");
      int value = 0;
      for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw InvalidArgument("bad generator token '" + std::string(token) + "'");
        }
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw InvalidArgument("generator index too large");
      }
      word.push_back(value);
    }
    start = end + 1;
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += word[i] == kSigma ? std::string("sigma") : std::to_string(word[i]);
  }
  return out;
}

}  // namespace iwahori
