#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include "iwahori/errors.hpp"
#include "iwahori/plancherel.hpp"
#include "iwahori/presentations.hpp"
#include "iwahori/serialize.hpp"
#include "iwahori/specdims.hpp"

namespace iwahori::cli {
namespace {

struct Outcome {
  Json payload;
  bool pass = true;
};

struct Options {
  std::string format = "json";
  std::string out_path;
  std::string n = "2";
  std::string q;
  int e = 0;
  std::string algebra;
  std::string system;
  int max_length = -1;

  // word
  std::string word;
  std::string op = "length";
  // mul
  std::string a;
  std::string b;
  std::string a_json;
  std::string b_json;
  // iso
  std::string which = "plus";
  std::vector<std::string> image_overrides;
  // dims
  int i = -1;
  // poincare / fd
  std::string weights;
  std::string tol = "1e-12";
  bool compare = false;
};

int ball_cap() {
  if (const char* env = std::getenv("IWAHORI_BALL_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0 && value <= 64) return static_cast<int>(value);
    throw InvalidArgument("IWAHORI_BALL_CAP must be an integer in 0..64");
  }
  return kDefaultBallCap;
}

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidArgument(std::string("bad ") + what + " '" + text + "'");
  return value;
}

// "3" or "2..4".
std::vector<int> parse_ranks(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_int(text, "rank")};
  const int lo = parse_int(text.substr(0, dots), "rank");
  const int hi = parse_int(text.substr(dots + 2), "rank");
  if (lo > hi) throw InvalidArgument("empty rank range " + text);
  std::vector<int> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(n);
  return ranks;
}

int single_rank(const Options& o) {
  const std::vector<int> ranks = parse_ranks(o.n);
  if (ranks.size() != 1) throw InvalidArgument("this command takes a single --n");
  return ranks.front();
}

std::optional<BigInt> parse_q(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  const int q = parse_int(text, "q");
  require_numeric_q(q);
  return BigInt(q);
}

// Integers, p/q, and decimal or scientific notation.
BigRational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) return big_rational_from_json(Json(text));
  std::string mantissa = text;
  int exponent = 0;
  if (const auto pos = text.find_first_of("eE"); pos != std::string::npos) {
    mantissa = text.substr(0, pos);
    exponent = parse_int(text.substr(pos + 1), "exponent");
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw InvalidArgument("bad number '" + text + "'");
    }
  }
  if (digits.empty() || exponent < -400 || exponent > 400) throw InvalidArgument("bad number '" + text + "'");
  BigRational value{BigInt(digits)};
  const BigRational ten(10);
  for (int k = 0; k < std::abs(exponent); ++k) value = exponent > 0 ? BigRational(value * ten) : BigRational(value / ten);
  return negative ? BigRational(-value) : value;
}

CoxeterSystem parse_system(const std::string& name, int n) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "affinec") return CoxeterSystem::affine_c(n);
  if (lower == "affineb") return CoxeterSystem::affine_b(n);
  if (lower == "finitec") return CoxeterSystem::finite_c(n);
  if (lower == "infinitedihedral") return CoxeterSystem::infinite_dihedral();
  if (lower == "primedc") return CoxeterSystem::primed_c(n);
  throw InvalidArgument("unknown system '" + name + "' (AffineC, AffineB, FiniteC, InfiniteDihedral, PrimedC)");
}

std::vector<int> parse_weights(const std::string& text, std::size_t count) {
  if (text.empty()) return std::vector<int>(count, 1);
  std::vector<int> weights = parse_word(text);
  if (weights.size() != count) throw InvalidArgument("--weights needs one entry per generator");
  return weights;
}

Json word_json(const Word& word) { return format_word(word); }

Json element_json(const AffineElt& w) {
  return {{"signed_columns", w.signed_columns()}, {"translation", w.translation()}, {"text", w.to_string()}};
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome cmd_word(const Options& o) {
  const Word word = parse_word(o.word);
  const int n = single_rank(o);
  Json out{{"word", format_word(word)}, {"op", o.op}, {"n", n}};

  if (o.op == "weighted-length") {
    const WeightedEmbedding iota = embed_weighted(n);
    out["system"] = iota.source().name();
    out["image_word"] = word_json(iota.expand(word));
    out["result"] = iota.weighted_length(word);
    out["weight_sum"] = iota.weight_sum(iota.source().from_word(word));
    return {out, out["result"] == out["weight_sum"]};
  }

  if (!o.algebra.empty()) {
    const AlgebraPtr algebra = build_unchecked(parse_algebra_name(o.algebra), n).algebra;
    for (int gen : word) {
      if (!algebra->has_generator(gen)) throw InvalidArgument("generator not in " + algebra->name());
    }
    const ExtendedElt x = algebra->element(word);
    out["algebra"] = algebra->name();
    if (o.op == "length") {
      out["result"] = algebra->length(x);
    } else if (o.op == "reduced") {
      out["result"] = word_json(algebra->reduced_word(x));
      out["reduced_largest"] = word_json(algebra->reduced_word(x, CoxeterSystem::TieBreak::Largest));
    } else if (o.op == "inverse") {
      out["result"] = word_json(algebra->reduced_word(algebra->inverse(x)));
    } else if (o.op == "element") {
      out["result"] = element_json(x.w);
      out["sigma"] = x.sigma;
    } else if (o.op == "weight") {
      out["result"] = algebra->weight(x);
    } else {
      throw InvalidArgument("op '" + o.op + "' is not available with --algebra");
    }
    return {out, true};
  }

  const CoxeterSystem system = parse_system(o.system.empty() ? "AffineC" : o.system, n);
  const AffineElt w = system.from_word(word);
  out["system"] = system.name();
  if (o.op == "length") {
    out["result"] = system.length(w);
  } else if (o.op == "reduced") {
    out["result"] = word_json(system.reduced_word(w));
    out["reduced_largest"] = word_json(system.reduced_word(w, CoxeterSystem::TieBreak::Largest));
  } else if (o.op == "element") {
    out["result"] = element_json(w);
  } else if (o.op == "descents") {
    std::vector<int> right;
    for (int label : system.labels()) {
      if (system.is_right_descent(w, label)) right.push_back(label);
    }
    out["result"] = {{"left", system.left_descents(w)}, {"right", right}};
  } else if (o.op == "inverse") {
    out["result"] = word_json(system.reduced_word(w.inverse()));
  } else if (o.op == "sigma") {
    const AffineElt by_word = system.diagram_automorphism(w);
    const AffineElt by_conjugation = system.sigma_conjugate(w);
    out["result"] = word_json(system.reduced_word(by_word));
    out["consistent"] = by_word == by_conjugation;
    return {out, by_word == by_conjugation};
  } else {
    throw InvalidArgument("unknown op '" + o.op +
                          "' (length, reduced, element, descents, inverse, sigma, weighted-length, weight)");
  }
  return {out, true};
}

HeckeElt operand(const AlgebraPtr& algebra, const std::string& word, const std::string& json, const char* name) {
  if (!json.empty() && !word.empty()) throw InvalidArgument(std::string("give either --") + name + " or --" + name + "-json");
  if (!json.empty()) {
    try {
      return hecke_from_json(algebra, Json::parse(json));
    } catch (const Json::parse_error& e) {
      throw InvalidArgument(std::string("--") + name + "-json: " + e.what());
    }
  }
  const Word w = parse_word(word);
  for (int gen : w) {
    if (!algebra->has_generator(gen)) throw InvalidArgument("generator not in " + algebra->name());
  }
  return word_product(algebra, w);
}

Outcome cmd_mul(const Options& o) {
  if (o.algebra.empty()) throw InvalidArgument("mul needs --algebra");
  const AlgebraPtr algebra = build(parse_algebra_name(o.algebra), single_rank(o)).algebra;
  const HeckeElt a = operand(algebra, o.a, o.a_json, "a");
  const HeckeElt b = operand(algebra, o.b, o.b_json, "b");
  const HeckeElt product = mul(a, b);
  return {Json{{"algebra", algebra->name()},
               {"a", to_json(a)},
               {"b", to_json(b)},
               {"product", to_json(product)},
               {"trace", to_json(trace(product))}},
          true};
}

Outcome cmd_verify(const Options& o) {
  const std::string which = o.algebra.empty() ? "all" : o.algebra;
  const int max_length = o.max_length < 0 ? 6 : o.max_length;
  if (max_length > ball_cap()) throw CapExceeded("--max-length exceeds the ball cap");
  std::vector<AlgebraName> names;
  if (which == "all") {
    names.assign(std::begin(kAllAlgebras), std::end(kAllAlgebras));
  } else {
    names.push_back(parse_algebra_name(which));
  }
  Json reports = Json::array();
  bool pass = true;
  for (int n : parse_ranks(o.n)) {
    for (AlgebraName name : names) {
      if (n < min_rank(name)) throw InvalidArgument(to_string(name) + " needs n >= " + std::to_string(min_rank(name)));
      const Report report = verify_presentation(build_unchecked(name, n));
      pass = pass && report.all_pass();
      reports.push_back(to_json(report));
    }
    if (which == "all") {
      for (const Report& report : {verify_iso(iso_plus(n), max_length), verify_iso(iso_minus(n), max_length)}) {
        pass = pass && report.all_pass();
        reports.push_back(to_json(report));
      }
    }
  }
  return {Json{{"reports", reports}, {"pass", pass}}, pass};
}

Outcome cmd_iso(const Options& o) {
  const int n = single_rank(o);
  const int max_length = o.max_length < 0 ? 6 : o.max_length;
  if (max_length > ball_cap()) throw CapExceeded("--max-length exceeds the ball cap");
  IsoMap map;
  if (o.which == "plus") {
    map = iso_plus(n);
  } else if (o.which == "minus") {
    map = iso_minus(n);
  } else {
    throw InvalidArgument("--which must be plus or minus");
  }
  for (const std::string& spec : o.image_overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw InvalidArgument("--image expects gen=word, got '" + spec + "'");
    const Word gen = parse_word(spec.substr(0, eq));
    if (gen.size() != 1 || !map.source.algebra->has_generator(gen[0])) {
      throw InvalidArgument("--image: unknown source generator in '" + spec + "'");
    }
    const Word target_word = parse_word(spec.substr(eq + 1));
    for (int g : target_word) {
      if (!map.target.algebra->has_generator(g)) throw InvalidArgument("--image: unknown target generator");
    }
    map.images.insert_or_assign(gen[0], word_product(map.target.algebra, target_word));
  }
  const Report report = verify_iso(map, max_length);
  Json images = Json::object();
  for (const auto& [gen, image] : map.images) images[format_word({gen})] = to_json(image);
  return {Json{{"report", to_json(report)}, {"images", images}, {"pass", report.all_pass()}}, report.all_pass()};
}

Outcome cmd_dims(const Options& o) {
  const int n = single_rank(o);
  const std::optional<BigInt> q = parse_q(o.q.empty() ? "symbolic" : o.q);
  auto dim = [&](int i, TauSign sign) -> Json {
    return q ? to_json(dim_tau(n, o.e, i, sign, *q)) : to_json(dim_tau(n, o.e, i, sign));
  };
  Json out{{"n", n}, {"e", o.e}, {"q", q ? to_json(*q) : Json("symbolic")}};
  if (o.i >= 0) {
    out["i"] = o.i;
    if (o.i == 0) {
      out["full"] = dim(0, TauSign::Full);
    } else {
      out["plus"] = dim(o.i, TauSign::Plus);
      out["minus"] = dim(o.i, TauSign::Minus);
    }
    return {out, true};
  }
  Json rows = Json::array();
  rows.push_back({{"i", 0}, {"sign", to_string(TauSign::Full)}, {"dim", dim(0, TauSign::Full)}});
  for (int i = 1; i <= n; ++i) {
    for (TauSign sign : {TauSign::Plus, TauSign::Minus}) {
      rows.push_back({{"i", i}, {"sign", to_string(sign)}, {"dim", dim(i, sign)}});
    }
  }
  out["rows"] = rows;

  Json plus = Json::array();
  for (int i = 0; i <= n; ++i) {
    Json datum = q ? to_json(plus_subalgebra(n, o.e, i, *q)) : to_json(plus_subalgebra(n, o.e, i));
    datum["i"] = i;
    plus.push_back(datum);
  }
  out["plus_subalgebras"] = plus;
  if (n >= 2) {
    Json minus = Json::array();
    for (int i = 1; i <= n; ++i) {
      Json datum = q ? to_json(minus_subalgebra(n, o.e, i, *q)) : to_json(minus_subalgebra(n, o.e, i));
      datum["i"] = i;
      minus.push_back(datum);
    }
    out["minus_subalgebras"] = minus;
  }
  out["index_J1"] = q ? to_json(evaluate(index_J1(), BigRational(*q))) : to_json(index_J1());
  return {out, true};
}

Outcome cmd_poincare(const Options& o) {
  const int max_length = o.max_length < 0 ? 6 : o.max_length;
  const int n = single_rank(o);
  Json out;
  PoincareSeries series;
  if (!o.algebra.empty()) {
    const AlgebraPtr algebra = build(parse_algebra_name(o.algebra), n).algebra;
    series = poincare(*algebra, max_length, ball_cap());
    out["algebra"] = algebra->name();
  } else {
    const CoxeterSystem system = parse_system(o.system.empty() ? "AffineC" : o.system, n);
    const std::vector<int> weights = parse_weights(o.weights, system.generator_count());
    series = poincare(system, weights, max_length, ball_cap());
    out["system"] = system.name();
    out["weights"] = weights;
  }
  out["max_length"] = max_length;
  out.update(to_json(series));
  return {out, true};
}

Outcome cmd_fd(const Options& o) {
  const std::string q_text = o.q.empty() ? "2" : o.q;
  if (q_text == "symbolic") throw InvalidArgument("fd needs a numeric --q");
  const BigRational q(*parse_q(q_text));
  const BigRational tol = parse_rational(o.tol);
  if (tol <= 0) throw InvalidArgument("--tol must be positive");
  const int max_layer = o.max_length < 0 ? 12 : o.max_length;
  const int n = single_rank(o);

  if (o.compare) {
    if (o.algebra.empty()) throw InvalidArgument("--compare needs --algebra");
    const AlgebraName name = parse_algebra_name(o.algebra);
    AlgebraName partner = AlgebraName::Hplus;
    switch (name) {
      case AlgebraName::Hplus: partner = AlgebraName::HpsiPlus; break;
      case AlgebraName::HpsiPlus: partner = AlgebraName::Hplus; break;
      case AlgebraName::Hminus: partner = AlgebraName::HpsiMinus; break;
      case AlgebraName::HpsiMinus: partner = AlgebraName::Hminus; break;
    }
    if (max_layer > ball_cap()) throw CapExceeded("--max-layer exceeds the ball cap");
    const FdComparison comparison = compare_fd(build(name, n), build(partner, n), max_layer, q, o.e, tol);
    return {to_json(comparison), comparison.pass()};
  }

  Json out;
  PoincareSeries series;
  BigRational exact;
  if (!o.algebra.empty()) {
    const AlgebraPtr algebra = build(parse_algebra_name(o.algebra), n).algebra;
    series = poincare(*algebra, max_layer, ball_cap());
    exact = steinberg_fd_exact(*algebra, q);
    out["algebra"] = algebra->name();
  } else {
    const CoxeterSystem system = parse_system(o.system.empty() ? "AffineC" : o.system, n);
    const std::vector<int> weights = parse_weights(o.weights, system.generator_count());
    series = poincare(system, weights, max_layer, ball_cap());
    exact = steinberg_fd_exact(system, weights, q);
    out["system"] = system.name();
    out["weights"] = weights;
  }
  const FormalDegree fd = steinberg_fd(series, q, tol);
  out["q"] = to_json(q);
  out["layers"] = to_json(series)["layers"];
  out.update(to_json(fd));
  out["fd_exact"] = to_json(exact);
  out["fd_exact_float"] = exact.convert_to<double>();
  return {out, true};
}

// ---------------------------------------------------------------------------
// Output

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
    if (flat) {
      std::string line;
      for (const Json& v : j) line += (line.empty() ? "" : " ") + scalar_text(v);
      rows.emplace_back(path, line);
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", rows);
    }
  } else {
    rows.emplace_back(path, scalar_text(j));
  }
}

std::string render(const Json& payload, const std::string& format) {
  if (format == "json") return payload.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(payload, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream text;
  for (const auto& [key, value] : rows) text << std::left << std::setw(static_cast<int>(width) + 2) << key << value << "\n";
  return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with affine Iwahori-Hecke algebras", "iwahori"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
    sub->add_option("--n", o.n, "Rank (verify also takes a range such as 2..4)");
  };

  CLI::App* word = app.add_subcommand("word", "Length, reduced words and other group operations");
  common(word);
  word->add_option("--system", o.system, "AffineC, AffineB, FiniteC, InfiniteDihedral or PrimedC");
  word->add_option("--algebra", o.algebra, "Use the group of an algebra (allows sigma)");
  word->add_option("--w", o.word, "Comma-separated generator word")->required();
  word->add_option("--op", o.op, "length, reduced, element, descents, inverse, sigma, weighted-length, weight");

  CLI::App* mul_cmd = app.add_subcommand("mul", "Multiply two Hecke algebra elements");
  common(mul_cmd);
  mul_cmd->add_option("--algebra", o.algebra, "Hplus, HpsiPlus, Hminus or HpsiMinus")->required();
  mul_cmd->add_option("--a", o.a, "Left factor as a generator word");
  mul_cmd->add_option("--b", o.b, "Right factor as a generator word");
  mul_cmd->add_option("--a-json", o.a_json, "Left factor as a JSON element");
  mul_cmd->add_option("--b-json", o.b_json, "Right factor as a JSON element");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check presentations (and isomorphisms with --algebra all)");
  common(verify_cmd);
  verify_cmd->add_option("--algebra", o.algebra, "An algebra name or 'all'");
  verify_cmd->add_option("--max-length", o.max_length, "Ball radius for isomorphism checks");

  CLI::App* iso_cmd = app.add_subcommand("iso", "Verify an isomorphism on a ball");
  common(iso_cmd);
  iso_cmd->add_option("--which", o.which, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  iso_cmd->add_option("--max-length", o.max_length, "Ball radius");
  iso_cmd->add_option("--image", o.image_overrides, "Override an image, e.g. 0=1");

  CLI::App* dims_cmd = app.add_subcommand("dims", "Minimal type dimensions and subalgebra eigenvalues");
  common(dims_cmd);
  dims_cmd->add_option("--q", o.q, "Integer >= 2 or 'symbolic'");
  dims_cmd->add_option("--e", o.e, "Valuation of 2")->check(CLI::NonNegativeNumber);
  dims_cmd->add_option("--i", o.i, "Single lattice index")->check(CLI::NonNegativeNumber);

  CLI::App* poincare_cmd = app.add_subcommand("poincare", "Weighted growth series");
  common(poincare_cmd);
  poincare_cmd->add_option("--algebra", o.algebra, "Weights from an algebra's parameters");
  poincare_cmd->add_option("--system", o.system, "Coxeter system");
  poincare_cmd->add_option("--weights", o.weights, "Per-generator weights, e.g. 3,1,1");
  poincare_cmd->add_option("--max-length", o.max_length, "Truncation");

  CLI::App* fd_cmd = app.add_subcommand("fd", "Steinberg formal degree");
  common(fd_cmd);
  fd_cmd->add_option("--algebra", o.algebra, "Algebra");
  fd_cmd->add_option("--system", o.system, "Coxeter system");
  fd_cmd->add_option("--weights", o.weights, "Per-generator weights");
  fd_cmd->add_option("--q", o.q, "Integer >= 2");
  fd_cmd->add_option("--e", o.e, "Valuation of 2")->check(CLI::NonNegativeNumber);
  fd_cmd->add_option("--max-layer,--max-length", o.max_length, "Truncation");
  fd_cmd->add_option("--tol", o.tol, "Convergence tolerance");
  fd_cmd->add_flag("--compare", o.compare, "Compare with the linked algebra");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> handlers{
      {word, cmd_word},   {mul_cmd, cmd_mul},           {verify_cmd, cmd_verify}, {iso_cmd, cmd_iso},
      {dims_cmd, cmd_dims}, {poincare_cmd, cmd_poincare}, {fd_cmd, cmd_fd}};
  try {
    for (const auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      const Outcome outcome = handler(o);
      const std::string text = render(outcome.payload, o.format);
      if (o.out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(o.out_path);
        if (!file) throw InvalidArgument("cannot write " + o.out_path);
        file << text;
      }
      return outcome.pass ? kExitOk : kExitCheckFailed;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace iwahori::cli
