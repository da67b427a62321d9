#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "iwahori/presentations.hpp"
#include "iwahori/serialize.hpp"

using namespace iwahori;

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// "path value" rows of the table format.
std::map<std::string, std::string> table_rows(const std::string& text) {
  std::map<std::string, std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    const auto value = line.find_first_not_of(' ', space);
    rows[line.substr(0, space)] = value == std::string::npos ? "" : line.substr(value);
  }
  return rows;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, VerifyExample) {
  const Result r = run({"verify", "--algebra", "HpsiPlus", "--n", "2"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.json().at("pass").get<bool>());
}

TEST(Cli, DimsExample) {
  const Result r = run({"dims", "--n", "2", "--e", "0", "--q", "3", "--i", "1"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json().at("plus"), 2);
  EXPECT_EQ(r.json().at("minus"), 1);
}

TEST(Cli, WordLengthExample) {
  const Result r = run({"word", "--system", "AffineC", "--n", "2", "--w", "1,0,1", "--op", "length"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json().at("result"), 3);
}

TEST(Cli, WeightedLengthMatchesImageLength) {
  const Result r = run({"word", "--n", "3", "--w", "2,1", "--op", "weighted-length"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json().at("result"), 4);
  EXPECT_EQ(r.json().at("weight_sum"), 4);
}

TEST(Cli, DimsTableRows) {
  const Json j = run({"dims", "--n", "3", "--q", "symbolic"}).json();
  EXPECT_EQ(j.at("q"), "symbolic");
  EXPECT_EQ(j.at("rows").size(), 7u);
  EXPECT_EQ(j.at("rows")[0].at("sign"), to_string(TauSign::Full));
  EXPECT_TRUE(j.contains("plus_subalgebras"));
  EXPECT_EQ(j.at("index_J1"), to_json(index_J1()));
}

TEST(Cli, VerifyAllRunsTheFullSuite) {
  const Result r = run({"verify", "--algebra", "all", "--n", "2..3", "--max-length", "3"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  // four algebras and two isomorphisms per rank
  EXPECT_EQ(r.json().at("reports").size(), 12u);
}

TEST(Cli, IsoFailureReportsWitness) {
  const Result ok = run({"iso", "--which", "minus", "--n", "2", "--max-length", "3"});
  EXPECT_EQ(ok.status, cli::kExitOk) << ok.err;
  const Result bad = run({"iso", "--which", "plus", "--n", "2", "--max-length", "3", "--image", "0=1"});
  EXPECT_EQ(bad.status, cli::kExitCheckFailed);
  const Json report = bad.json().at("report");
  bool found = false;
  for (const Json& check : report.at("checks")) {
    if (!check.at("pass").get<bool>() && check.contains("witness")) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"word", "--n", "2"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"word", "--system", "AffineC", "--w", "1,9"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"dims", "--n", "2", "--q", "1"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--algebra", "Hminus", "--n", "1"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"dims", "--format", "xml"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).status, cli::kExitOk);
}

TEST(Cli, SymbolicQDisablesFd) {
  const Result r = run({"fd", "--algebra", "HpsiPlus", "--n", "2", "--q", "symbolic"});
  EXPECT_EQ(r.status, cli::kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, FdOutput) {
  const Result r = run({"fd", "--system", "InfiniteDihedral", "--q", "3", "--max-layer", "14", "--tol", "1e-5"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j.at("fd_exact"), "1/2");
  EXPECT_TRUE(j.at("converged").get<bool>());
  EXPECT_EQ(j.at("layers").size(), 15u);
  EXPECT_TRUE(j.contains("partial_sums"));
  EXPECT_TRUE(j.contains("fd"));
}

TEST(Cli, FdCompare) {
  const Result r = run({"fd", "--algebra", "HpsiMinus", "--n", "2", "--q", "3", "--compare"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.json().at("layers_equal").get<bool>());
}

TEST(Cli, TableAndJsonCarryTheSamePayload) {
  const std::vector<std::vector<std::string>> commands{
      {"dims", "--n", "2", "--q", "5"},
      {"word", "--system", "AffineC", "--n", "2", "--w", "1,0,1", "--op", "descents"},
      {"poincare", "--algebra", "HpsiMinus", "--n", "2", "--max-length", "5"},
      {"fd", "--algebra", "Hplus", "--n", "2", "--q", "2", "--max-layer", "6"},
  };
  for (auto args : commands) {
    const Json j = run(args).json();
    args.insert(args.end(), {"--format", "table"});
    const Result table = run(args);
    ASSERT_EQ(table.status, cli::kExitOk) << table.err;
    const auto rows = table_rows(table.out);
    const Json leaves = j.flatten();
    for (const auto& [path, value] : leaves.items()) {
      // table paths use dots and [k]; json pointers use slashes
      std::string key;
      std::istringstream parts(path.substr(1));
      std::string part;
      std::vector<std::string> segments;
      while (std::getline(parts, part, '/')) segments.push_back(part);
      bool leaf_array = false;
      for (std::size_t k = 0; k < segments.size(); ++k) {
        const bool index = !segments[k].empty() && std::all_of(segments[k].begin(), segments[k].end(), ::isdigit);
        if (index && k + 1 == segments.size()) {
          leaf_array = true;
          break;
        }
        key += index ? "[" + segments[k] + "]" : (key.empty() ? "" : ".") + segments[k];
      }
      ASSERT_TRUE(rows.count(key)) << key;
      const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      if (leaf_array) {
        EXPECT_NE((" " + rows.at(key) + " ").find(" " + text + " "), std::string::npos) << key;
      } else {
        EXPECT_EQ(rows.at(key), text) << key;
      }
    }
  }
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "iwahori_cli_out.json";
  std::filesystem::remove(path);
  const Result r = run({"dims", "--n", "2", "--q", "3", "--out", path.string()});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  const Json j = Json::parse(file);
  EXPECT_EQ(j, run({"dims", "--n", "2", "--q", "3"}).json());
  std::filesystem::remove(path);
}

TEST(Cli, BallCapFromEnvironment) {
  {
    ScopedEnv env("IWAHORI_BALL_CAP", "4");
    EXPECT_EQ(run({"poincare", "--system", "AffineC", "--n", "2", "--max-length", "5"}).status, cli::kExitUsage);
    EXPECT_EQ(run({"poincare", "--system", "AffineC", "--n", "2", "--max-length", "4"}).status, cli::kExitOk);
  }
  {
    ScopedEnv env("IWAHORI_BALL_CAP", "lots");
    EXPECT_EQ(run({"poincare", "--system", "AffineC", "--n", "2", "--max-length", "2"}).status, cli::kExitUsage);
  }
}

TEST(Cli, MulRoundTripsThroughJson) {
  const Result first = run({"mul", "--algebra", "Hplus", "--n", "2", "--a", "sigma,1", "--b", "1,2"});
  ASSERT_EQ(first.status, cli::kExitOk) << first.err;
  const Json product = first.json().at("product");

  const AlgebraPtr algebra = build(AlgebraName::Hplus, 2).algebra;
  const HeckeElt expected = mul(word_product(algebra, {kSigma, 1}), word_product(algebra, {1, 2}));
  EXPECT_EQ(hecke_from_json(algebra, product), expected);

  const Result second =
      run({"mul", "--algebra", "Hplus", "--n", "2", "--a-json", product.dump(), "--b", "0"});
  ASSERT_EQ(second.status, cli::kExitOk) << second.err;
  EXPECT_EQ(hecke_from_json(algebra, second.json().at("product")), mul(expected, generator_elt(algebra, 0)));
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"poincare", "--algebra", "Hminus", "--n", "3", "--max-length", "6"};
  EXPECT_EQ(run(args).out, run(args).out);
}
