#include "iwahori/laurent.hpp"

#include <sstream>

namespace iwahori {

namespace {

void write_coefficient(std::ostream& out, const BigInt& c, bool /*standalone*/) { out << c; }

void write_coefficient(std::ostream& out, const BigRational& c, bool standalone) {
  if (standalone || boost::multiprecision::denominator(c) == 1) {
    out << c;
  } else {
    out << '(' << c << ')';
  }
}

template <typename Coeff>
std::string render(const BasicLaurent<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Coeff magnitude = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (e == 0) {
      write_coefficient(out, magnitude, true);
      continue;
    }
    if (!unit) write_coefficient(out, magnitude, false);
    out << 'q';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace

RationalLaurent to_rational(const LaurentPoly& p) {
  RationalLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, BigRational(c));
  return out;
}

std::optional<LaurentPoly> to_integral(const RationalLaurent& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    out.add_term(e, boost::multiprecision::numerator(c));
  }
  return out;
}

std::string to_string(const LaurentPoly& p) { return render(p); }
std::string to_string(const RationalLaurent& p) { return render(p); }

std::string to_string(const BigRational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace iwahori
