#include "iwahori/serialize.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "iwahori/errors.hpp"

namespace iwahori {

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

Json to_json(const BigRational& value) {
  if (denominator(value) == 1) return to_json(BigInt(numerator(value)));
  return to_string(value);
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
  return out;
}

Json to_json(const RationalLaurent& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
  return out;
}

Json to_json(const HeckeElt& h) {
  std::vector<std::pair<Word, const LaurentPoly*>> rows;
  for (const auto& [x, c] : h.terms()) rows.emplace_back(h.algebra().reduced_word(x), &c);
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return std::make_tuple(l.first.size(), l.first) < std::make_tuple(r.first.size(), r.first);
  });
  Json out = Json::array();
  for (const auto& [word, c] : rows) out.push_back({{"word", format_word(word)}, {"coeff", to_json(*c)}});
  return out;
}

Json to_json(const Check& check) {
  Json out{{"kind", check.kind}, {"indices", check.indices}, {"pass", check.pass}};
  if (check.witness) out["witness"] = *check.witness;
  return out;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) checks.push_back(to_json(c));
  return {{"algebra", report.algebra}, {"n", report.n}, {"checks", checks}};
}

Json to_json(const PoincareSeries& series) {
  Json layers = Json::array();
  for (const BigInt& c : series.counts) layers.push_back(to_json(c));
  return {{"layers", layers}, {"total", to_json(series.total())}};
}

Json to_json(const FormalDegree& fd) {
  Json sums = Json::array();
  for (const BigRational& s : fd.partial_sums) sums.push_back(to_json(s));
  return {{"partial_sums", sums},
          {"fd", to_json(fd.value)},
          {"fd_float", fd.value.convert_to<double>()},
          {"converged", fd.converged},
          {"diverging", fd.diverging},
          {"tail_note", fd.tail_note}};
}

Json to_json(const FdComparison& c) {
  Json layers_a = Json::array();
  Json layers_b = Json::array();
  for (const BigInt& k : c.layers_a) layers_a.push_back(to_json(k));
  for (const BigInt& k : c.layers_b) layers_b.push_back(to_json(k));
  Json out{{"algebra_a", c.algebra_a},
           {"algebra_b", c.algebra_b},
           {"n", c.n},
           {"max_layer", c.max_layer},
           {"q", to_json(c.q)},
           {"layers_a", layers_a},
           {"layers_b", layers_b},
           {"layers_equal", c.layers_equal},
           {"ratio_a", to_json(c.ratio_a)},
           {"ratio_b", to_json(c.ratio_b)},
           {"fd_a", to_json(c.fd_a)},
           {"fd_b", to_json(c.fd_b)},
           {"fd_exact_a", to_json(c.exact_a)},
           {"fd_exact_b", to_json(c.exact_b)},
           {"pass", c.pass()}};
  out["first_mismatch"] = c.first_mismatch ? Json(*c.first_mismatch) : Json(nullptr);
  return out;
}

Json to_json(const CosetSeriesCheck& check) {
  Json embedded = Json::array();
  Json weighted = Json::array();
  for (const BigInt& k : check.embedded) embedded.push_back(to_json(k));
  for (const BigInt& k : check.weighted) weighted.push_back(to_json(k));
  return {{"n", check.n},
          {"max_length", check.max_length},
          {"embedded", embedded},
          {"weighted", weighted},
          {"pass", check.pass()}};
}

namespace {

template <typename Value>
Json datum_json(const SubalgebraDatum<Value>& datum) {
  return {{"d", to_json(datum.d)},
          {"d1", to_json(datum.d1)},
          {"d2", to_json(datum.d2)},
          {"lambda1", to_json(datum.lambda1)},
          {"lambda2", to_json(datum.lambda2)}};
}

}  // namespace

Json to_json(const SubalgebraDatum<RationalLaurent>& datum) { return datum_json(datum); }

Json to_json(const SubalgebraDatum<BigRational>& datum) { return datum_json(datum); }

BigInt big_int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

BigRational big_rational_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const BigInt den = big_int_from_json(text.substr(slash + 1));
      if (den == 0) throw InvalidArgument("zero denominator in " + text);
      return BigRational(big_int_from_json(text.substr(0, slash)), den);
    }
  }
  return BigRational(big_int_from_json(j));
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("Laurent polynomial must be an array of [exponent, coefficient]");
  LaurentPoly p;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw InvalidArgument("bad Laurent term " + term.dump());
    }
    p.add_term(term[0].get<int>(), big_int_from_json(term[1]));
  }
  return p;
}

HeckeElt hecke_from_json(const AlgebraPtr& algebra, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("Hecke element must be an array of terms");
  HeckeElt h(algebra);
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("word") || !term.contains("coeff") || !term["word"].is_string()) {
      throw InvalidArgument("bad Hecke term " + term.dump());
    }
    const Word word = parse_word(term["word"].get<std::string>());
    for (int gen : word) {
      if (!algebra->has_generator(gen)) throw InvalidArgument("word uses a generator outside " + algebra->name());
    }
    h.add_term(algebra->element(word), laurent_from_json(term["coeff"]));
  }
  return h;
}

Report report_from_json(const Json& j) {
  try {
    Report report;
    report.algebra = j.at("algebra").get<std::string>();
    report.n = j.at("n").get<int>();
    for (const Json& c : j.at("checks")) {
      Check check;
      check.kind = c.at("kind").get<std::string>();
      check.indices = c.at("indices").get<std::vector<int>>();
      check.pass = c.at("pass").get<bool>();
      if (c.contains("witness")) check.witness = c["witness"].get<std::string>();
      report.checks.push_back(std::move(check));
    }
    return report;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace iwahori
