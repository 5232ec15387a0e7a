// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "howson/certificate.hpp"
#include "howson/cli.hpp"
#include "howson/constructions.hpp"
#include "howson/errors.hpp"
#include "oracles.hpp"

using namespace howson;
namespace fs = std::filesystem;

namespace {

  constexpr double        rank_law_seconds   = 10.0;
  constexpr double        product_seconds    = 1.0;
  constexpr std::size_t   rank_law_depth     = 8;
  constexpr std::size_t   probe_samples      = 10000;
  constexpr std::size_t   lemma2_samples     = 1000;
  constexpr std::size_t   product_depth      = 20;
  constexpr std::uint64_t seed               = 1;
  char const* const       squares_spec       = "rank 2; a -> a a; b -> b b";
  char const* const       diag_spec          = "product; A: dim 1; [[2]]; B: dim 1; [[3]]";

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
  }

  int cli(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    int                code = cli::run(args, o, e);
    if (out) {
      *out = o.str();
    }
    return code;
  }

  FreeEndo squares() {
    return parse_free_endo(squares_spec);
  }

  Basis singleton(FreeEndo const& e) {
    return hall_complement(e.image_graph(), ComplementSize::single);
  }

  Outcome rank_law() {
    auto start = std::chrono::steady_clock::now();
    auto e     = squares();
    auto k     = singleton(e);
    if (k.size() != 1) {
      return {false, "complement has " + std::to_string(k.size()) + " words"};
    }
    auto ranks = rank_growth(e, k, rank_law_depth);
    double t   = seconds_since(start);
    bool   ok  = ranks.size() == rank_law_depth + 1;
    std::string table;
    for (std::size_t r = 0; r < ranks.size(); ++r) {
      ok = ok && ranks[r] == r + 1;
      table += (r ? " " : "") + std::to_string(ranks[r]);
    }
    return {ok && t < rank_law_seconds,
            "K = {" + to_string(k.front()) + "}, ranks " + table + ", " + fixed(t)
                + " s (limit " + fixed(rank_law_seconds) + " s)"};
  }

  Outcome product_probe() {
    auto               e = squares();
    auto               k = singleton(e);
    std::vector<Basis> parts;
    for (std::size_t n = 0; n <= 5; ++n) {
      parts.push_back(build_Kn(k, e, n));
    }
    auto positive = free_product_probe(parts, probe_samples, seed);
    bool pos_ok   = positive.passed && positive.samples == probe_samples;

    auto a        = parse_word("a", 2);
    auto negative = free_product_probe({{a}, {parse_word("aa", 2)}}, probe_samples, seed);
    Word product(2);
    bool syllables_ok = !negative.witness.empty();
    std::string witness;
    for (auto const& w : negative.witness) {
      syllables_ok = syllables_ok && !w.is_identity();
      product      = product * w;
      witness += (witness.empty() ? "" : " · ") + to_string(w);
    }
    bool neg_ok = !negative.passed && syllables_ok && product.is_identity();
    return {pos_ok && neg_ok,
            "K_0..K_5: " + std::to_string(positive.samples) + " samples, "
                + (positive.passed ? "no collisions" : "collision")
                + "; control [<a>, <a^2>] rejected with witness " + witness};
  }

  Outcome base_intersection_probe() {
    auto e = squares();
    auto r = lemma2_probe(e, singleton(e), lemma2_samples, seed, {6, 4});
    bool ok = r.passed && r.negative_samples == lemma2_samples
              && r.nonnegative_samples == lemma2_samples;
    return {ok, std::to_string(r.negative_samples) + " words with a negative index, "
                    + std::to_string(r.nonnegative_samples)
                    + " with indices >= 0, indices in [-4, 4], at most 6 syllables"
                    + (r.failure.empty() ? "" : ": " + r.failure)};
  }

  Outcome round_trip() {
    auto dir = fs::temp_directory_path() / "howson_acceptance";
    fs::create_directories(dir);
    auto path = (dir / "squares.json").string();
    if (int code = cli({"certify", squares_spec, "--rmax", "6", "--seed", "1", "--out", path});
        code != 0) {
      return {false, "certify exited " + std::to_string(code)};
    }
    if (int code = cli({"verify", path}); code != 0) {
      return {false, "verify of a fresh certificate exited " + std::to_string(code)};
    }
    std::ifstream  in(path);
    nlohmann::json good = nlohmann::json::parse(in);

    std::vector<std::pair<std::string, nlohmann::json>> mutants;
    for (std::size_t r = 0; r < good["levels"].size(); ++r) {
      for (int delta : {-1, 1}) {
        auto m = good;
        m["levels"][r]["rank"] = m["levels"][r]["rank"].get<int>() + delta;
        mutants.emplace_back("rank r=" + std::to_string(r), m);
      }
      auto        m    = good;
      std::string word = m["levels"][r]["generators"][0]["base_expr"];
      for (std::size_t i = 0; i < word.size(); ++i) {
        auto        w = word;
        w[i]          = w[i] == 'b' ? 'a' : 'b';
        auto        n = good;
        n["levels"][r]["generators"][0]["base_expr"] = w;
        mutants.emplace_back("letter " + std::to_string(i) + " r=" + std::to_string(r), n);
      }
    }
    std::size_t caught = 0;
    std::string missed;
    auto        mutant_path = (dir / "mutant.json").string();
    for (auto const& [name, m] : mutants) {
      std::ofstream(mutant_path) << m.dump(2);
      if (cli({"verify", mutant_path}) != 0) {
        ++caught;
      } else if (missed.empty()) {
        missed = name;
      }
    }
    return {caught == mutants.size(),
            "certify 0, verify 0, " + std::to_string(caught) + "/"
                + std::to_string(mutants.size()) + " single-field mutants rejected"
                + (missed.empty() ? "" : ", missed " + missed)};
  }

  Outcome dual_expressions() {
    auto e = squares();
    CertifyOptions options;
    options.depth = rank_law_depth;
    auto    c     = certify_theorem2(e, options);
    Basis   k;
    for (auto const& w : c.complement) {
      k.push_back(parse_word(w, 2));
    }
    FreeHnn     g{FreeBase(e)};
    std::size_t checked = 0, equal = 0;
    for (auto const& level : c.levels) {
      for (std::size_t i = 0; i < level.generators.size(); ++i) {
        auto r   = static_cast<long long>(level.r);
        auto tr  = g.power(g.stable_letter(), r);
        auto lhs = g.multiply(g.multiply(g.invert(tr), g.from_base(k[i])), tr);
        auto base = parse_word(level.generators[i].base_expr, 2);
        auto rhs  = g.from_base(base);
        ++checked;
        if (g.equals(lhs, rhs) && lhs == rhs && base == power(e, level.r).apply(k[i])) {
          ++equal;
        }
      }
    }
    bool ok = checked == rank_law_depth + 1 && equal == checked;
    return {ok, std::to_string(equal) + "/" + std::to_string(checked)
                    + " generators satisfy t^-r k t^r = k phi^r for r = 0.."
                    + std::to_string(rank_law_depth)};
  }

  Outcome product_instance() {
    auto start    = std::chrono::steady_clock::now();
    auto instance = std::get<ProductInstance>(parse_instance(diag_spec));
    CertifyOptions options;
    options.depth = product_depth;
    auto c        = certify_theorem3(instance, std::nullopt, options);
    double t      = seconds_since(start);
    bool   ok     = c.element == "b" && c.levels.size() == product_depth;
    std::size_t first_bad = 0;
    for (auto const& l : c.levels) {
      auto s     = oracle::geometric_sum(3, l.m);
      auto bpart = s == 1 ? std::string("b") : "b^" + std::to_string(s);
      bool good  = s != 0 && l.normal_form == "(" + std::to_string(l.m) + ", " + bpart + ", 0)"
                  && l.t_exponent == static_cast<long long>(l.m);
      if (!good && first_bad == 0) {
        first_bad = l.m;
      }
      ok = ok && good;
    }
    for (auto const& o : c.obligations) {
      ok = ok && o.holds;
    }
    return {ok && t < product_seconds,
            "(tb)^m = (m, ((3^m - 1)/2) b, 0) for m = 1.."
                + std::to_string(product_depth) + ", last "
                + c.levels.back().normal_form + ", " + fixed(t) + " s (limit "
                + fixed(product_seconds) + " s)"
                + (first_bad ? ", first mismatch m=" + std::to_string(first_bad) : "")};
  }

  std::size_t membership_disagreements(Basis const& gens, std::size_t length,
                                       std::size_t factors) {
    auto        g     = SubgroupGraph::build(gens, gens.front().rank());
    auto        ball  = oracle::subgroup_ball(gens, factors, length);
    auto        b     = basis(g);
    std::size_t wrong = 0;
    for (auto const& w : oracle::reduced_words(gens.front().rank(), length)) {
      bool member = g.contains(w);
      auto e      = express(g, w);
      if ((ball.count(w) && !member) || e.has_value() != member
          || (e && oracle::product_of(b, *e) != w)) {
        ++wrong;
      }
    }
    return wrong;
  }

  Outcome oracle_suites() {
    std::size_t words = 0, membership = 0;
    for (auto const& texts : std::vector<std::vector<char const*>>{
             {"aa", "bb", "ab"}, {"a", "bab"}, {"aba", "bAb"}, {"abA"}, {"aab", "bbaBA"}}) {
      Basis gens;
      for (auto t : texts) {
        gens.push_back(parse_word(t, 2));
      }
      membership += membership_disagreements(gens, 6, 6);
      words += oracle::reduced_words(2, 6).size();
    }

    FreeHnn      free_g(FreeBase(parse_free_endo("a -> aa")));
    HnnExtension z_g(AbelianBase(parse_matrix_endo("dim 1; [[2]]")));
    auto         exprs = oracle::bs12_expressions(4);
    std::map<std::string, std::string> by_form, by_map;
    std::size_t                        equality = 0;
    for (auto const& x : exprs) {
      auto form   = free_g.format(free_g.parse(x));
      auto affine = oracle::to_string(oracle::bs12_evaluate(x));
      auto [i, fi] = by_form.emplace(form, affine);
      auto [j, fj] = by_map.emplace(affine, form);
      if (z_g.format(z_g.parse(x)) != form || i->second != affine || j->second != form) {
        ++equality;
      }
    }
    return {membership == 0 && equality == 0 && exprs.size() == 681,
            std::to_string(words) + " membership queries, " + std::to_string(membership)
                + " disagreements; " + std::to_string(exprs.size())
                + " BS(1,2) expressions (all pairs), " + std::to_string(equality)
                + " disagreements"};
  }

  Outcome gating() {
    int identity      = cli({"certify", "a -> a; b -> b"});
    int cyclic        = cli({"certify", "a -> a a"});
    int analyze_non   = cli({"analyze", "a -> a; b -> a"});
    int certify_non   = cli({"certify", "a -> a; b -> a"});
    bool ok = identity == 3 && cyclic == 3 && analyze_non == 3 && certify_non == 3;
    return {ok, "identity " + std::to_string(identity) + ", rank 1 "
                    + std::to_string(cyclic) + ", non-injective analyze "
                    + std::to_string(analyze_non) + " / certify "
                    + std::to_string(certify_non)};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 rank law", rank_law},
      {"AC2 free product probe", product_probe},
      {"AC3 base intersection probe", base_intersection_probe},
      {"AC4 certificate round trip", round_trip},
      {"AC5 dual expressions", dual_expressions},
      {"AC6 product instance", product_instance},
      {"AC7 oracle suites", oracle_suites},
      {"AC8 hypothesis gating", gating},
  };
  int failures = 0;
  for (auto const& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
