#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "howson/free_endo.hpp"
#include "howson/hnn.hpp"
#include "howson/instance.hpp"
#include "howson/subgroup_graph.hpp"

namespace howson {

  inline constexpr int         certificate_schema = 1;
  inline constexpr char const* tool_version       = "howson 1.0.0";

  struct CertifyOptions {
    std::size_t    depth           = 6;
    std::uint64_t  seed            = 1;
    ComplementSize complement      = ComplementSize::single;
    std::size_t    depth_limit     = default_depth_limit;
    std::size_t    product_samples = 10000;
    std::size_t    lemma2_samples  = 1000;
  };

  struct Obligation {
    std::string name;
    bool        holds = false;
    std::string detail;

    bool operator==(Obligation const&) const = default;
  };

  // A generator of M_r written twice: as a base word kφ^r and as the word
  // t^-r k t^r over the generators of F = ⟨K, t⟩.
  struct WitnessGenerator {
    std::string base_expr;
    std::string f_expr;
  };

  struct Level {
    std::size_t                   r = 0;
    std::vector<WitnessGenerator> generators;
    std::size_t                   rank = 0;
  };

  // Non-finitely-generated intersection F ∩ G for a free base: the
  // ascending chain M_0 < M_1 < ... inside F ∩ G.
  struct Theorem2Certificate {
    std::string              endo;
    std::vector<std::string> complement;
    std::size_t              depth           = 0;
    std::uint64_t            seed            = 0;
    std::size_t              depth_limit     = default_depth_limit;
    std::size_t              product_samples = 0;
    std::size_t              lemma2_samples  = 0;
    std::vector<Level>       levels;
    std::vector<Obligation>  obligations;
  };

  struct PowerLevel {
    std::size_t m = 0;
    std::string normal_form;  // of (tb)^m in G(φ)
    std::string product;      // bφ^(m-1) ... bφ b, multiplied directly
    long long   t_exponent = 0;

    bool operator==(PowerLevel const&) const = default;
  };

  struct ChainLink {
    std::size_t k = 0;
    std::string witness;  // t^(k+1) a t^-(k+1), outside t^k A t^-k
    bool        conjugation = false;

    bool operator==(ChainLink const&) const = default;
  };

  // C = ⟨A, t⟩ and D = ⟨A, tb⟩ intersect in the union of t^k A t^-k.
  struct Theorem3Certificate {
    std::string             endo;
    std::string             element;
    std::size_t             depth       = 0;
    std::uint64_t           seed        = 0;
    std::size_t             depth_limit = default_depth_limit;
    std::vector<PowerLevel> levels;
    std::vector<ChainLink>  chain;
    std::vector<Obligation> obligations;
  };

  using Certificate = std::variant<Theorem2Certificate, Theorem3Certificate>;

  // Throws NotApplicableError when the hypotheses fail (rank 1 base,
  // non-injective or surjective φ), ConstructionError when a check fails
  // and DepthLimitError past the depth limit.
  Theorem2Certificate certify_theorem2(FreeEndo const&       e,
                                       CertifyOptions const& options = {});

  // `element` is written in the product's generator names and defaults to
  // the first generator of B. Throws InvalidWitnessError when it is not an
  // element of B outside Bφ.
  Theorem3Certificate certify_theorem3(ProductInstance const&     instance,
                                       std::optional<std::string> element,
                                       CertifyOptions const&      options = {});

  nlohmann::ordered_json to_json(Certificate const& c);
  // Throws ParseError on malformed structure.
  Certificate            certificate_from_json(nlohmann::json const& j);
  Certificate            parse_certificate(std::string_view text);
  // Canonical text: fixed field order, two-space indent, trailing newline.
  std::string            dump_certificate(Certificate const& c);

  struct Verdict {
    bool        ok = true;
    std::string failure;  // first failed check
  };

  // Recomputes every claim from the recorded inputs and witnesses.
  Verdict verify_certificate(Certificate const& c);

}  // namespace howson
