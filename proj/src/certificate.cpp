#include "howson/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "howson/constructions.hpp"
#include "howson/errors.hpp"
#include "howson/expression.hpp"

namespace howson {

  namespace {

    using ojson = nlohmann::ordered_json;

    std::string f_expression(std::size_t r, std::size_t i) {
      std::string k = "k" + std::to_string(i + 1);
      if (r == 0) {
        return k;
      }
      std::string exp = r == 1 ? "" : "^" + std::to_string(r);
      return "t^-" + std::to_string(r) + " " + k + " t" + exp;
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
      }
      return out;
    }

    // Everything in a free-base certificate that is a pure function of the
    // endomorphism, the complement and the sampling parameters.
    std::vector<Obligation> theorem2_obligations(FreeEndo const& e,
                                                 Basis const&    k,
                                                 std::size_t     depth,
                                                 std::uint64_t   seed,
                                                 std::size_t product_samples,
                                                 std::size_t lemma2_samples,
                                                 std::size_t depth_limit) {
      std::vector<Obligation> out;
      std::size_t const       n = e.rank();
      out.push_back({"non_cyclic_base", n >= 2, "rank " + std::to_string(n)});
      bool const injective = e.is_injective();
      out.push_back({"injective", injective,
                     "image rank " + std::to_string(e.image_graph().rank())});
      auto index = e.image_graph().index();
      out.push_back({"not_surjective", !(index && *index == 1),
                     "image index "
                         + (index ? std::to_string(*index) : "infinite")});
      if (!injective) {
        return out;
      }

      bool const k_nontrivial
          = !k.empty()
            && std::none_of(k.begin(), k.end(),
                            [](Word const& w) { return w.is_identity(); });
      Basis joint = e.images();
      joint.insert(joint.end(), k.begin(), k.end());
      std::size_t const joint_rank = SubgroupGraph::build(joint, n).rank();
      bool const        complement = k_nontrivial && joint_rank == n + k.size();
      out.push_back({"free_complement", complement,
                     "rank <Gφ ∪ K> = " + std::to_string(joint_rank)
                         + ", rank Gφ + |K| = " + std::to_string(n + k.size())});

      std::vector<Basis> levels{k};
      for (std::size_t r = 1; r <= depth; ++r) {
        Basis next;
        for (auto const& w : levels.back()) {
          next.push_back(e.apply(w));
        }
        levels.push_back(std::move(next));
      }
      std::vector<std::size_t>   ranks;
      std::vector<SubgroupGraph> graphs;
      Basis                      all;
      for (auto const& level : levels) {
        all.insert(all.end(), level.begin(), level.end());
        graphs.push_back(SubgroupGraph::build(all, n));
        ranks.push_back(graphs.back().rank());
      }
      bool rank_law = true;
      for (std::size_t r = 0; r < ranks.size(); ++r) {
        rank_law = rank_law && ranks[r] == (r + 1) * k.size();
      }
      out.push_back({"rank_law", rank_law,
                     "rank(M_r) for r = 0.." + std::to_string(depth) + ": "
                         + join(ranks)});

      bool chain = true;
      for (std::size_t r = 0; r + 1 < graphs.size(); ++r) {
        chain = chain && ranks[r] < ranks[r + 1];
        for (std::size_t j = 0; j <= r; ++j) {
          for (auto const& w : levels[j]) {
            chain = chain && graphs[r + 1].contains(w);
          }
        }
      }
      out.push_back({"ascending_chain", chain,
                     "M_r strictly inside M_(r+1) for r < "
                         + std::to_string(depth)});

      std::size_t const  part_count = std::min<std::size_t>(depth, 5) + 1;
      std::vector<Basis> parts(levels.begin(),
                               levels.begin() + static_cast<long>(part_count));
      std::string probe_detail = "K_0..K_" + std::to_string(part_count - 1)
                                 + ", " + std::to_string(product_samples)
                                 + " samples";
      bool probe_ok = false;
      try {
        auto probe = free_product_probe(parts, product_samples, seed);
        probe_ok   = probe.passed;
        if (!probe.passed) {
          probe_detail += ", identity collision found";
        }
      } catch (DegeneratePartError const& err) {
        probe_detail += std::string(", ") + err.what();
      }
      out.push_back({"free_product_probe", probe_ok, probe_detail});

      std::string lemma2_detail = std::to_string(lemma2_samples)
                                  + " words with a negative index, "
                                  + std::to_string(lemma2_samples)
                                  + " with non-negative indices";
      bool lemma2_ok = false;
      try {
        auto probe = lemma2_probe(e, k, lemma2_samples, seed + 1, {}, depth_limit);
        lemma2_ok  = probe.passed;
        if (!probe.passed) {
          lemma2_detail += ", " + probe.failure;
        }
      } catch (Error const& err) {
        lemma2_detail += std::string(", ") + err.what();
      }
      out.push_back({"lemma2_probe", lemma2_ok, lemma2_detail});
      return out;
    }

    void require_all(std::vector<Obligation> const& obligations) {
      for (auto const& o : obligations) {
        if (!o.holds) {
          throw ConstructionError("obligation " + o.name + " failed: " + o.detail);
        }
      }
    }

    std::optional<std::string> compare_obligations(
        std::vector<Obligation> const& recorded,
        std::vector<Obligation> const& recomputed) {
      for (auto const& o : recomputed) {
        if (!o.holds) {
          return "obligation " + o.name + " does not hold: " + o.detail;
        }
      }
      if (recorded.size() != recomputed.size()) {
        return "expected " + std::to_string(recomputed.size())
               + " obligations, certificate records "
               + std::to_string(recorded.size());
      }
      for (std::size_t i = 0; i < recorded.size(); ++i) {
        if (!(recorded[i] == recomputed[i])) {
          return "obligation " + recomputed[i].name + " recorded as '"
                 + recorded[i].detail + "', recomputed '"
                 + recomputed[i].detail + "'";
        }
      }
      return std::nullopt;
    }

    // --- product base ----------------------------------------------------

    bool injective(FreeBase const& f) {
      return f.endo().is_injective();
    }
    bool injective(AbelianBase const& f) {
      return ab_classify(f.endo()).injective;
    }
    bool surjective(FreeBase const& f) {
      return f.endo().is_surjective();
    }
    bool surjective(AbelianBase const& f) {
      return ab_classify(f.endo()).surjective;
    }

    template <class F>
    std::optional<std::size_t> generator_outside_image(F const& f) {
      for (std::size_t i = 0; i < f.generator_count(); ++i) {
        if (!f.image_contains(f.generator(i))) {
          return i;
        }
      }
      return std::nullopt;
    }

    template <class Base>
    typename Base::Element parse_element(Base const& base, std::string_view text) {
      auto x = base.identity();
      for (auto const& s : expand_expression(text)) {
        auto g = generator_index(s.name, base.generator_count());
        if (!g) {
          throw ParseError("'" + s.name + "' is not a base generator");
        }
        auto gen = base.generator(*g - 1);
        x        = base.multiply(x, s.inverse ? base.invert(gen) : gen);
      }
      return x;
    }

    struct Theorem3Evidence {
      std::vector<PowerLevel> levels;
      std::vector<ChainLink>  chain;
      std::vector<Obligation> obligations;
    };

    // Checks the hypotheses; returns the failure message, if any, and
    // reports which kind of failure it is through `witness_problem`.
    template <class A, class B>
    std::optional<std::string> theorem3_hypotheses(
        ProductBase<A, B> const& g, typename ProductBase<A, B>::Element const& b,
        bool& witness_problem) {
      witness_problem = false;
      if (!injective(g.left()) || !injective(g.right())) {
        return "factor endomorphisms must be injective";
      }
      if (surjective(g.left())) {
        return "Aφ = A: the A-endomorphism is onto";
      }
      if (surjective(g.right())) {
        return "Bφ = B: the B-endomorphism is onto";
      }
      witness_problem = true;
      if (!g.left().is_identity(b.first)) {
        return "element " + format_runs(g.runs(b), g.generator_count())
               + " does not lie in B";
      }
      if (g.right().is_identity(b.second) || g.right().image_contains(b.second)) {
        return "element " + format_runs(g.runs(b), g.generator_count())
               + " lies in Bφ";
      }
      return std::nullopt;
    }

    template <class A, class B>
    Theorem3Evidence theorem3_evidence(
        ProductBase<A, B> const& g, typename ProductBase<A, B>::Element const& b,
        std::size_t depth, std::size_t depth_limit) {
      using GBase = ProductBase<A, B>;
      HnnExtension<GBase> const whole(g, depth_limit);
      HnnExtension<B> const     quotient(g.right(), depth_limit);
      auto const&               bb    = g.right();
      std::size_t const         count = g.generator_count();
      auto name = [&](typename GBase::Element const& x) {
        return format_runs(g.runs(x), count);
      };

      Theorem3Evidence ev;
      auto a_out = *generator_outside_image(g.left());
      auto b_out = *generator_outside_image(g.right());
      ev.obligations.push_back(
          {"factors_injective", true, "A and B endomorphisms are injective"});
      ev.obligations.push_back(
          {"A_not_onto", true,
           name(g.from_left(g.left().generator(a_out))) + " is not in Aφ"});
      ev.obligations.push_back(
          {"B_not_onto", true,
           name(g.from_right(g.right().generator(b_out))) + " is not in Bφ"});
      ev.obligations.push_back({"b_outside_image", true, name(b) + " is not in Bφ"});

      auto const tb  = whole.multiply(whole.stable_letter(), whole.from_base(b));
      auto const tbq = quotient.multiply(quotient.stable_letter(),
                                         quotient.from_base(b.second));
      auto       x   = whole.identity();
      auto       y   = quotient.identity();
      auto       p   = b.second;
      bool       noncancel = true, exponent = true, projection = true;
      for (std::size_t m = 1; m <= depth; ++m) {
        x = whole.multiply(x, tb);
        y = quotient.multiply(y, tbq);
        if (m > 1) {
          p = bb.multiply(bb.apply(p), b.second);
        }
        auto rho = quotient.normalize(x.m, x.g.second, x.n);
        projection = projection && g.left().is_identity(x.g.first)
                     && quotient.equals(rho, y);
        auto t_m = quotient.power(quotient.stable_letter(),
                                  static_cast<long long>(m));
        noncancel = noncancel && !bb.is_identity(p) && y.m == m && y.n == 0
                    && y.g == p && !quotient.equals(y, t_m);
        exponent = exponent
                   && whole.t_exponent(x) == static_cast<long long>(m);
        ev.levels.push_back({m, whole.format(x), name(g.from_right(p)),
                             whole.t_exponent(x)});
      }
      std::string const range = "m = 1.." + std::to_string(depth);
      ev.obligations.push_back(
          {"non_cancellation", noncancel,
           "(tb)^m = t^m · bφ^(m-1)···bφ·b != t^m in B(φ) for " + range});
      ev.obligations.push_back(
          {"t_exponent", exponent, "t_exponent((tb)^m) = m for " + range});
      ev.obligations.push_back(
          {"rho_projection", projection,
           "ρ((tb)^m) equals (tb)^m computed in B(φ) for " + range});

      auto const tb_inv = whole.invert(tb);
      auto const t      = whole.stable_letter();
      bool       chain  = true;
      bool       conj   = true;
      for (std::size_t k = 0; k < depth; ++k) {
        auto tk  = whole.power(t, static_cast<long long>(k));
        auto tk1 = whole.multiply(tk, t);
        auto conjugate = [&](auto const& tt, auto const& a) {
          return whole.multiply(whole.multiply(tt, whole.from_base(a)),
                                whole.invert(tt));
        };
        auto w = conjugate(tk1, g.from_left(g.left().generator(a_out)));
        // Elements of t^k A t^-k have canonical form (j, a, j) with j <= k.
        bool outside = w.m == k + 1 && w.n == k + 1;
        bool link    = true;
        for (std::size_t i = 0; i < g.left().generator_count(); ++i) {
          auto a   = g.from_left(g.left().generator(i));
          auto lhs = whole.multiply(whole.multiply(tb, conjugate(tk, a)), tb_inv);
          link     = link && whole.equals(lhs, conjugate(tk1, a));
        }
        chain = chain && outside;
        conj  = conj && link;
        ev.chain.push_back({k, whole.format(w), link});
      }
      std::string const krange = "k = 0.." + std::to_string(depth == 0 ? 0 : depth - 1);
      ev.obligations.push_back(
          {"kernel_chain", chain,
           "t^(k+1) A t^-(k+1) is not inside t^k A t^-k for " + krange});
      ev.obligations.push_back(
          {"conjugation_identity", conj,
           "(tb) t^k A t^-k (tb)^-1 = t^(k+1) A t^-(k+1) for " + krange});
      return ev;
    }

    // --- JSON ------------------------------------------------------------

    ojson obligations_json(std::vector<Obligation> const& os) {
      ojson arr = ojson::array();
      for (auto const& o : os) {
        ojson j;
        j["name"]   = o.name;
        j["holds"]  = o.holds;
        j["detail"] = o.detail;
        arr.push_back(std::move(j));
      }
      return arr;
    }

    ojson to_json2(Theorem2Certificate const& c) {
      ojson j;
      j["schema"]      = certificate_schema;
      j["tool"]        = tool_version;
      j["kind"]        = "theorem2";
      j["endo"]        = c.endo;
      j["complement"]  = c.complement;
      j["depth"]       = c.depth;
      j["seed"]        = c.seed;
      j["depth_limit"] = c.depth_limit;
      j["samples"]     = ojson{{"free_product", c.product_samples},
                           {"lemma2", c.lemma2_samples}};
      ojson levels = ojson::array();
      for (auto const& l : c.levels) {
        ojson gens = ojson::array();
        for (auto const& g : l.generators) {
          ojson gj;
          gj["base_expr"] = g.base_expr;
          gj["f_expr"]    = g.f_expr;
          gens.push_back(std::move(gj));
        }
        ojson lj;
        lj["r"]          = l.r;
        lj["generators"] = std::move(gens);
        lj["rank"]       = l.rank;
        levels.push_back(std::move(lj));
      }
      j["levels"]      = std::move(levels);
      j["obligations"] = obligations_json(c.obligations);
      return j;
    }

    ojson to_json3(Theorem3Certificate const& c) {
      ojson j;
      j["schema"]      = certificate_schema;
      j["tool"]        = tool_version;
      j["kind"]        = "theorem3";
      j["endo"]        = c.endo;
      j["element"]     = c.element;
      j["depth"]       = c.depth;
      j["seed"]        = c.seed;
      j["depth_limit"] = c.depth_limit;
      ojson levels     = ojson::array();
      for (auto const& l : c.levels) {
        ojson lj;
        lj["m"]           = l.m;
        lj["normal_form"] = l.normal_form;
        lj["product"]     = l.product;
        lj["t_exponent"]  = l.t_exponent;
        levels.push_back(std::move(lj));
      }
      j["levels"] = std::move(levels);
      ojson chain = ojson::array();
      for (auto const& l : c.chain) {
        ojson lj;
        lj["k"]           = l.k;
        lj["witness"]     = l.witness;
        lj["conjugation"] = l.conjugation;
        chain.push_back(std::move(lj));
      }
      j["chain"]       = std::move(chain);
      j["obligations"] = obligations_json(c.obligations);
      return j;
    }

    std::vector<Obligation> obligations_from(nlohmann::json const& arr) {
      std::vector<Obligation> out;
      for (auto const& o : arr) {
        out.push_back({o.at("name").get<std::string>(), o.at("holds").get<bool>(),
                       o.at("detail").get<std::string>()});
      }
      return out;
    }

    // --- verification ----------------------------------------------------

    Verdict fail(std::string why) {
      return {false, std::move(why)};
    }

    FreeHnn::Element evaluate_f_expression(FreeHnn const&      hnn,
                                           Basis const&        k,
                                           std::string const& text) {
      auto x = hnn.identity();
      for (auto const& s : expand_expression(text)) {
        FreeHnn::Element atom;
        if (s.name == "t") {
          atom = hnn.letter(HnnLetter::t(s.inverse));
        } else if (s.name.size() > 1 && s.name[0] == 'k') {
          std::size_t i = std::stoul(s.name.substr(1));
          if (i == 0 || i > k.size()) {
            throw ParseError("F-expression refers to missing generator " + s.name);
          }
          atom = hnn.from_base(s.inverse ? invert(k[i - 1]) : k[i - 1]);
        } else {
          throw ParseError("F-expression uses '" + s.name
                           + "', which is not a generator of F");
        }
        x = hnn.multiply(x, atom);
      }
      return x;
    }

    Verdict verify2(Theorem2Certificate const& c) {
      FreeEndo const e = parse_free_endo(c.endo);
      if (e.rank() < 2) {
        return fail("base group is cyclic");
      }
      if (!e.is_injective()) {
        return fail("endomorphism is not injective");
      }
      if (e.is_surjective()) {
        return fail("endomorphism is surjective");
      }
      Basis k;
      for (auto const& s : c.complement) {
        k.push_back(parse_word(s, e.rank()));
      }
      if (k.empty()) {
        return fail("complement is empty");
      }
      if (c.levels.size() != c.depth + 1) {
        return fail("expected " + std::to_string(c.depth + 1)
                    + " levels, certificate records "
                    + std::to_string(c.levels.size()));
      }
      FreeHnn const hnn(FreeBase(e), c.depth_limit);
      Basis         all;
      std::size_t   previous_rank = 0;
      for (std::size_t i = 0; i < c.levels.size(); ++i) {
        auto const& level = c.levels[i];
        std::string where = "level r=" + std::to_string(i);
        if (level.r != i) {
          return fail(where + ": recorded index " + std::to_string(level.r));
        }
        if (level.generators.size() != k.size()) {
          return fail(where + ": expected " + std::to_string(k.size())
                      + " generators");
        }
        std::size_t const before = all.size();
        for (std::size_t j = 0; j < level.generators.size(); ++j) {
          auto const& gen  = level.generators[j];
          auto        f    = evaluate_f_expression(hnn, k, gen.f_expr);
          Word        base = parse_word(gen.base_expr, e.rank());
          if (!hnn.equals(f, hnn.from_base(base))) {
            return fail(where + ", generator " + std::to_string(j + 1)
                        + ": '" + gen.f_expr + "' and '" + gen.base_expr
                        + "' differ in G(φ)");
          }
          all.push_back(std::move(base));
        }
        auto graph = SubgroupGraph::build(all, e.rank());
        for (std::size_t j = 0; j < before; ++j) {
          if (!graph.contains(all[j])) {
            return fail(where + ": M_(r-1) is not contained in M_r");
          }
        }
        std::size_t const rank = graph.rank();
        if (rank != level.rank) {
          return fail(where + ": recorded rank " + std::to_string(level.rank)
                      + ", recomputed " + std::to_string(rank));
        }
        if (rank != (i + 1) * k.size()) {
          return fail(where + ": rank " + std::to_string(rank)
                      + " breaks the free-product rank law");
        }
        if (i > 0 && rank <= previous_rank) {
          return fail(where + ": ranks are not strictly increasing");
        }
        previous_rank = rank;
      }
      auto recomputed = theorem2_obligations(e, k, c.depth, c.seed,
                                             c.product_samples,
                                             c.lemma2_samples, c.depth_limit);
      if (auto why = compare_obligations(c.obligations, recomputed)) {
        return fail(*why);
      }
      return {};
    }

    Verdict verify3(Theorem3Certificate const& c) {
      auto instance = parse_instance(c.endo);
      auto product  = std::get_if<ProductInstance>(&instance);
      if (!product) {
        return fail("theorem3 certificates need a product base group");
      }
      return with_product(*product, [&](auto const& g) -> Verdict {
        auto b = parse_element(g, c.element);
        bool witness_problem = false;
        if (auto why = theorem3_hypotheses(g, b, witness_problem)) {
          return fail(*why);
        }
        auto ev = theorem3_evidence(g, b, c.depth, c.depth_limit);
        if (c.levels.size() != ev.levels.size()) {
          return fail("expected " + std::to_string(ev.levels.size())
                      + " power levels");
        }
        for (std::size_t i = 0; i < ev.levels.size(); ++i) {
          if (!(c.levels[i] == ev.levels[i])) {
            return fail("power level m=" + std::to_string(i + 1)
                        + ": recorded " + c.levels[i].normal_form
                        + ", recomputed " + ev.levels[i].normal_form);
          }
        }
        if (c.chain.size() != ev.chain.size()) {
          return fail("expected " + std::to_string(ev.chain.size())
                      + " chain links");
        }
        for (std::size_t i = 0; i < ev.chain.size(); ++i) {
          if (!(c.chain[i] == ev.chain[i])) {
            return fail("chain link k=" + std::to_string(i) + ": recorded "
                        + c.chain[i].witness + ", recomputed "
                        + ev.chain[i].witness);
          }
        }
        if (auto why = compare_obligations(c.obligations, ev.obligations)) {
          return fail(*why);
        }
        return {};
      });
    }

  }  // namespace

  Theorem2Certificate certify_theorem2(FreeEndo const&       e,
                                       CertifyOptions const& options) {
    if (e.rank() < 2) {
      throw NotApplicableError(
          "base group is cyclic; HNN-extensions of Z are Howson groups");
    }
    if (!e.is_injective()) {
      throw NotApplicableError("endomorphism is not injective");
    }
    if (e.is_surjective()) {
      throw NotApplicableError(
          "endomorphism is an automorphism; only the non-surjective case is "
          "handled");
    }
    if (options.depth > options.depth_limit) {
      throw DepthLimitError("depth " + std::to_string(options.depth)
                            + " exceeds the depth limit "
                            + std::to_string(options.depth_limit));
    }
    Basis const k = hall_complement(e.image_graph(), options.complement);

    Theorem2Certificate c;
    c.endo            = to_string(e);
    c.depth           = options.depth;
    c.seed            = options.seed;
    c.depth_limit     = options.depth_limit;
    c.product_samples = options.product_samples;
    c.lemma2_samples  = options.lemma2_samples;
    for (auto const& w : k) {
      c.complement.push_back(to_string(w));
    }
    auto ranks = rank_growth(e, k, options.depth, options.depth_limit);
    for (std::size_t r = 0; r <= options.depth; ++r) {
      Level level;
      level.r    = r;
      level.rank = ranks[r];
      auto kr    = build_Kn(k, e, r, options.depth_limit);
      for (std::size_t i = 0; i < kr.size(); ++i) {
        level.generators.push_back({to_string(kr[i]), f_expression(r, i)});
      }
      c.levels.push_back(std::move(level));
    }
    c.obligations = theorem2_obligations(e, k, options.depth, options.seed,
                                         options.product_samples,
                                         options.lemma2_samples,
                                         options.depth_limit);
    require_all(c.obligations);
    return c;
  }

  Theorem3Certificate certify_theorem3(ProductInstance const&     instance,
                                       std::optional<std::string> element,
                                       CertifyOptions const&      options) {
    return with_product(instance, [&](auto const& g) {
      std::string text = element.value_or(generator_name(
          g.left().generator_count() + 1, g.generator_count()));
      auto b = parse_element(g, text);
      bool witness_problem = false;
      if (auto why = theorem3_hypotheses(g, b, witness_problem)) {
        if (witness_problem) {
          throw InvalidWitnessError(*why);
        }
        throw NotApplicableError(*why);
      }
      auto ev = theorem3_evidence(g, b, options.depth, options.depth_limit);
      require_all(ev.obligations);
      Theorem3Certificate c;
      c.endo        = g.spec();
      c.element     = format_runs(g.runs(b), g.generator_count());
      c.depth       = options.depth;
      c.seed        = options.seed;
      c.depth_limit = options.depth_limit;
      c.levels      = std::move(ev.levels);
      c.chain       = std::move(ev.chain);
      c.obligations = std::move(ev.obligations);
      return c;
    });
  }

  nlohmann::ordered_json to_json(Certificate const& c) {
    return std::visit(
        [](auto const& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                       Theorem2Certificate>) {
            return to_json2(x);
          } else {
            return to_json3(x);
          }
        },
        c);
  }

  Certificate certificate_from_json(nlohmann::json const& j) {
    try {
      if (!j.is_object()) {
        throw ParseError("certificate must be a JSON object");
      }
      if (j.at("schema").get<int>() != certificate_schema) {
        throw ParseError("unsupported certificate schema "
                         + j.at("schema").dump());
      }
      auto kind = j.at("kind").get<std::string>();
      if (kind == "theorem2") {
        Theorem2Certificate c;
        c.endo            = j.at("endo").get<std::string>();
        c.complement      = j.at("complement").get<std::vector<std::string>>();
        c.depth           = j.at("depth").get<std::size_t>();
        c.seed            = j.at("seed").get<std::uint64_t>();
        c.depth_limit     = j.at("depth_limit").get<std::size_t>();
        c.product_samples = j.at("samples").at("free_product").get<std::size_t>();
        c.lemma2_samples  = j.at("samples").at("lemma2").get<std::size_t>();
        for (auto const& lj : j.at("levels")) {
          Level l;
          l.r    = lj.at("r").get<std::size_t>();
          l.rank = lj.at("rank").get<std::size_t>();
          for (auto const& gj : lj.at("generators")) {
            l.generators.push_back({gj.at("base_expr").get<std::string>(),
                                    gj.at("f_expr").get<std::string>()});
          }
          c.levels.push_back(std::move(l));
        }
        c.obligations = obligations_from(j.at("obligations"));
        return c;
      }
      if (kind == "theorem3") {
        Theorem3Certificate c;
        c.endo        = j.at("endo").get<std::string>();
        c.element     = j.at("element").get<std::string>();
        c.depth       = j.at("depth").get<std::size_t>();
        c.seed        = j.at("seed").get<std::uint64_t>();
        c.depth_limit = j.at("depth_limit").get<std::size_t>();
        for (auto const& lj : j.at("levels")) {
          c.levels.push_back({lj.at("m").get<std::size_t>(),
                              lj.at("normal_form").get<std::string>(),
                              lj.at("product").get<std::string>(),
                              lj.at("t_exponent").get<long long>()});
        }
        for (auto const& lj : j.at("chain")) {
          c.chain.push_back({lj.at("k").get<std::size_t>(),
                             lj.at("witness").get<std::string>(),
                             lj.at("conjugation").get<bool>()});
        }
        c.obligations = obligations_from(j.at("obligations"));
        return c;
      }
      throw ParseError("unknown certificate kind '" + kind + "'");
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed certificate: ") + e.what());
    }
  }

  Certificate parse_certificate(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
  }

  std::string dump_certificate(Certificate const& c) {
    return to_json(c).dump(2) + "\n";
  }

  Verdict verify_certificate(Certificate const& c) {
    try {
      return std::visit(
          [](auto const& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                         Theorem2Certificate>) {
              return verify2(x);
            } else {
              return verify3(x);
            }
          },
          c);
    } catch (Error const& err) {
      return fail(err.what());
    }
  }

}  // namespace howson
