#include "iwahori/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

#include "iwahori/errors.hpp"

namespace iwahori {

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(std::string name, CoxeterSystem system, std::vector<int> parameter_exponents,
                           bool extended)
    : name_(std::move(name)), system_(std::move(system)), exponents_(std::move(parameter_exponents)),
      extended_(extended) {
  const auto& labels = system_.labels();
  if (exponents_.size() != labels.size()) {
    throw InvalidArgument(name_ + ": one parameter per generator required");
  }
  for (int a : exponents_) {
    if (a < 0) throw InvalidArgument(name_ + ": parameters must be q^a with a >= 0");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const int m = system_.coxeter_entry(labels[i], labels[j]);
      if (m != kInfiniteOrder && m % 2 == 1 && exponents_[i] != exponents_[j]) {
        throw InvalidArgument(name_ + ": parameters differ across an odd bond");
      }
    }
  }
  if (extended_) {
    if (system_.kind() != SystemKind::AffineB) {
      throw InvalidArgument(name_ + ": only AffineB systems carry the diagram automorphism");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (exponents_[i] != exponents_[system_.position(system_.sigma_label(labels[i]))]) {
        throw InvalidArgument(name_ + ": parameters are not invariant under sigma");
      }
    }
  }
}

std::vector<int> HeckeAlgebra::generators() const {
  std::vector<int> gens;
  if (extended_) gens.push_back(kSigma);
  gens.insert(gens.end(), system_.labels().begin(), system_.labels().end());
  return gens;
}

bool HeckeAlgebra::has_generator(int gen) const {
  return gen == kSigma ? extended_ : system_.has_label(gen);
}

int HeckeAlgebra::parameter_exponent(int gen) const {
  if (gen == kSigma) {
    if (!extended_) throw InvalidArgument(name_ + " has no generator sigma");
    return 0;
  }
  return exponents_[system_.position(gen)];
}

int HeckeAlgebra::braid_order(int a, int b) const {
  if (a == b) {
    has_generator(a) ? void() : throw InvalidArgument(name_ + ": unknown generator");
    return 1;
  }
  if (a != kSigma && b != kSigma) return system_.coxeter_entry(a, b);
  const int other = a == kSigma ? b : a;
  if (!extended_) throw InvalidArgument(name_ + " has no generator sigma");
  system_.position(other);
  if (other == 0 || other == 1) return system_.rank() == 1 ? kInfiniteOrder : 4;
  return 2;
}

ExtendedElt HeckeAlgebra::element(const Word& word) const {
  ExtendedElt x = identity();
  for (int gen : word) x = right_multiply(x, gen);
  return x;
}

ExtendedElt HeckeAlgebra::multiply(const ExtendedElt& x, const ExtendedElt& y) const {
  // (e1, w1)(e2, w2) = (e1 xor e2, sigma^e2(w1) w2)
  if ((x.sigma || y.sigma) && !extended_) throw InvalidArgument(name_ + " has no generator sigma");
  const AffineElt left = y.sigma ? apply_sigma(x.w) : x.w;
  return ExtendedElt{x.sigma != y.sigma, compose(left, y.w)};
}

ExtendedElt HeckeAlgebra::left_multiply(int gen, const ExtendedElt& x) const {
  if (gen == kSigma) return multiply(ExtendedElt{true, system_.identity()}, x);
  const int label = x.sigma ? system_.sigma_label(gen) : gen;
  return ExtendedElt{x.sigma, compose(system_.generator(label), x.w)};
}

ExtendedElt HeckeAlgebra::right_multiply(const ExtendedElt& x, int gen) const {
  if (gen == kSigma) return multiply(x, ExtendedElt{true, system_.identity()});
  return ExtendedElt{x.sigma, compose(x.w, system_.generator(gen))};
}

ExtendedElt HeckeAlgebra::inverse(const ExtendedElt& x) const {
  // (sigma^e w)^-1 = w^-1 sigma^e = sigma^e sigma^e(w^-1)
  const AffineElt inv = x.w.inverse();
  return ExtendedElt{x.sigma, x.sigma ? apply_sigma(inv) : inv};
}

bool HeckeAlgebra::contains(const ExtendedElt& x) const {
  if (x.sigma && !extended_) return false;
  return system_.contains(x.w);
}

int HeckeAlgebra::weight(const ExtendedElt& x) const {
  int total = 0;
  for (int label : system_.reduced_word(x.w)) total += parameter_exponent(label);
  return total;
}

Word HeckeAlgebra::reduced_word(const ExtendedElt& x, CoxeterSystem::TieBreak tie) const {
  Word word;
  if (x.sigma) word.push_back(kSigma);
  const Word rest = system_.reduced_word(x.w, tie);
  word.insert(word.end(), rest.begin(), rest.end());
  return word;
}

bool HeckeAlgebra::is_left_descent(const ExtendedElt& x, int label) const {
  return system_.is_left_descent(x.w, x.sigma ? system_.sigma_label(label) : label);
}

bool HeckeAlgebra::is_right_descent(const ExtendedElt& x, int label) const {
  return system_.is_right_descent(x.w, label);
}

bool HeckeAlgebra::same_structure(const HeckeAlgebra& other) const {
  return name_ == other.name_ && extended_ == other.extended_ && exponents_ == other.exponents_ &&
         system_.kind() == other.system_.kind() && system_.rank() == other.system_.rank() &&
         system_.labels() == other.system_.labels();
}

AlgebraPtr make_algebra(std::string name, CoxeterSystem system, std::vector<int> parameter_exponents,
                        bool extended) {
  return std::make_shared<const HeckeAlgebra>(std::move(name), std::move(system),
                                              std::move(parameter_exponents), extended);
}

// ---------------------------------------------------------------------------
// HeckeElt

namespace {

using Terms = HeckeElt::Terms;

void accumulate(Terms& terms, const ExtendedElt& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// T_s applied to every term, on the given side.
Terms apply_generator(const HeckeAlgebra& algebra, int gen, const Terms& in, Side side) {
  Terms out;
  if (gen == kSigma) {
    for (const auto& [x, c] : in) {
      accumulate(out, side == Side::Left ? algebra.left_multiply(gen, x) : algebra.right_multiply(x, gen), c);
    }
    return out;
  }
  const LaurentPoly qs = algebra.parameter(gen);
  const LaurentPoly qs_minus_one = qs - 1;
  for (const auto& [x, c] : in) {
    const bool descent = side == Side::Left ? algebra.is_left_descent(x, gen) : algebra.is_right_descent(x, gen);
    const ExtendedElt y = side == Side::Left ? algebra.left_multiply(gen, x) : algebra.right_multiply(x, gen);
    if (descent) {
      // T_s T_x = q_s T_{sx} + (q_s - 1) T_x when l(sx) < l(x)
      accumulate(out, y, c * qs);
      accumulate(out, x, c * qs_minus_one);
    } else {
      accumulate(out, y, c);
    }
  }
  return out;
}

}  // namespace

HeckeElt::HeckeElt(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InvalidArgument("HeckeElt needs an algebra");
}

HeckeElt::HeckeElt(AlgebraPtr algebra, Terms terms) : HeckeElt(std::move(algebra)) {
  for (auto& [x, c] : terms) accumulate(terms_, x, c);
}

LaurentPoly HeckeElt::coefficient(const ExtendedElt& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add_term(const ExtendedElt& x, const LaurentPoly& c) { accumulate(terms_, x, c); }

void HeckeElt::require_compatible(const HeckeElt& other, const char* what) const {
  if (algebra_ != other.algebra_ && !algebra_->same_structure(*other.algebra_)) {
    throw InvalidArgument(std::string(what) + ": elements of different algebras (" + algebra_->name() +
                          ", " + other.algebra_->name() + ")");
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  require_compatible(other, "add");
  for (const auto& [x, c] : other.terms_) accumulate(terms_, x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  require_compatible(other, "subtract");
  for (const auto& [x, c] : other.terms_) accumulate(terms_, x, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt out(algebra_);
  for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), x, -c);
  return out;
}

HeckeElt operator+(HeckeElt a, const LaurentPoly& c) {
  a.add_term(a.algebra().identity(), c);
  return a;
}

HeckeElt operator-(HeckeElt a, const LaurentPoly& c) {
  a.add_term(a.algebra().identity(), -c);
  return a;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt out(h.algebra_);
  if (c.is_zero()) return out;
  for (const auto& [x, coeff] : h.terms_) out.add_term(x, c * coeff);
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return mul(a, b); }

bool operator==(const HeckeElt& a, const HeckeElt& b) {
  if (a.algebra_ != b.algebra_ && !a.algebra_->same_structure(*b.algebra_)) return false;
  return a.terms_ == b.terms_;
}

HeckeElt one(const AlgebraPtr& algebra) { return scalar(algebra, LaurentPoly(1)); }

HeckeElt scalar(const AlgebraPtr& algebra, const LaurentPoly& c) {
  HeckeElt h(algebra);
  h.add_term(algebra->identity(), c);
  return h;
}

HeckeElt basis_elt(const AlgebraPtr& algebra, const ExtendedElt& w) {
  if (!algebra->contains(w)) {
    throw InvalidArgument("element " + w.w.to_string() + " is not in the group of " + algebra->name());
  }
  HeckeElt h(algebra);
  h.add_term(w, LaurentPoly(1));
  return h;
}

HeckeElt generator_elt(const AlgebraPtr& algebra, int gen) {
  if (!algebra->has_generator(gen)) throw InvalidArgument(algebra->name() + ": unknown generator");
  return basis_elt(algebra, algebra->element({gen}));
}

HeckeElt word_product(const AlgebraPtr& algebra, const Word& word) {
  HeckeElt h = one(algebra);
  for (int gen : word) h = mul_gen(gen, h, Side::Right);
  return h;
}

HeckeElt mul_gen(int gen, const HeckeElt& h, Side side) {
  const HeckeAlgebra& algebra = h.algebra();
  if (!algebra.has_generator(gen)) throw InvalidArgument(algebra.name() + ": unknown generator");
  return HeckeElt(h.algebra_ptr(), apply_generator(algebra, gen, h.terms(), side));
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !a.algebra().same_structure(b.algebra())) {
    throw InvalidArgument("mul: elements of different algebras (" + a.algebra().name() + ", " +
                          b.algebra().name() + ")");
  }
  const HeckeAlgebra& algebra = a.algebra();
  Terms result;
  for (const auto& [y, c] : b.terms()) {
    // a T_y = a T_sigma^e T_{s1} ... T_{sk} for a reduced word of y
    Terms current = a.terms();
    for (int gen : algebra.reduced_word(y)) current = apply_generator(algebra, gen, current, Side::Right);
    for (const auto& [x, coeff] : current) accumulate(result, x, coeff * c);
  }
  return HeckeElt(a.algebra_ptr(), std::move(result));
}

LaurentPoly trace(const HeckeElt& h) { return h.coefficient(h.algebra().identity()); }

HeckeElt star(const HeckeElt& h) {
  HeckeElt out(h.algebra_ptr());
  for (const auto& [x, c] : h.terms()) out.add_term(h.algebra().inverse(x), c);
  return out;
}

LaurentPoly inner(const HeckeElt& a, const HeckeElt& b, const RationalLaurent& norm_vol,
                  const RationalLaurent& norm_dim) {
  if (norm_dim.is_zero()) throw InvalidArgument("inner: zero dimension normalization");
  const auto ratio = divide_exact(norm_vol, norm_dim);
  const auto integral = ratio ? to_integral(*ratio) : std::nullopt;
  if (!integral) {
    throw InexactDivision("inner: vol/dim = (" + to_string(norm_vol) + ")/(" + to_string(norm_dim) +
                          ") is not a Laurent polynomial over Z");
  }
  return *integral * trace(mul(star(a), b));
}

HeckeElt quadratic_defect(const AlgebraPtr& algebra, int gen) {
  const HeckeElt t = generator_elt(algebra, gen);
  return mul(t + LaurentPoly(1), t - algebra->parameter(gen));
}

HeckeElt braid_defect(const AlgebraPtr& algebra, int a, int b) {
  const int m = algebra->braid_order(a, b);
  if (m == kInfiniteOrder || m == 1) return HeckeElt(algebra);
  Word left;
  Word right;
  for (int k = 0; k < m; ++k) {
    left.push_back(k % 2 == 0 ? a : b);
    right.push_back(k % 2 == 0 ? b : a);
  }
  return word_product(algebra, left) - word_product(algebra, right);
}

bool check_quadratic(const AlgebraPtr& algebra, int gen) { return quadratic_defect(algebra, gen).is_zero(); }

bool check_braid(const AlgebraPtr& algebra, int a, int b) { return braid_defect(algebra, a, b).is_zero(); }

std::string to_string(const HeckeElt& h) {
  if (h.is_zero()) return "0";
  const HeckeAlgebra& algebra = h.algebra();
  std::vector<std::pair<Word, const LaurentPoly*>> rows;
  for (const auto& [x, c] : h.terms()) rows.emplace_back(algebra.reduced_word(x), &c);
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return std::make_tuple(l.first.size(), l.first) < std::make_tuple(r.first.size(), r.first);
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << " + ";
    out << '(' << to_string(*rows[i].second) << ")*T[" << format_word(rows[i].first) << ']';
  }
  return out.str();
}

}  // namespace iwahori
