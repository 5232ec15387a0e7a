#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "howson/free_endo.hpp"
#include "howson/hnn.hpp"
#include "howson/subgroup_graph.hpp"

namespace howson {

  using FreeHnn = HnnExtension<FreeBase>;

  // K_n = t^-n K t^n = Kφ^n. The images are computed with power(e, n) and
  // each one is checked against the HNN engine; a disagreement throws
  // ConstructionError.
  Basis build_Kn(Basis const&    k,
                 FreeEndo const& e,
                 std::size_t     n,
                 std::size_t     depth_limit = default_depth_limit);

  // rank(M_r) for r = 0..r_max, where M_r = ⟨K_0 ∪ ... ∪ K_r⟩. Each entry
  // must equal (r + 1)|K|; a deficit means K is not a free complement of
  // Gφ and throws ConstructionError. r_max above depth_limit throws
  // DepthLimitError.
  std::vector<std::size_t> rank_growth(FreeEndo const& e,
                                       Basis const&    k,
                                       std::size_t     r_max,
                                       std::size_t depth_limit = default_depth_limit);

  struct ProbeResult {
    bool              passed  = true;
    std::size_t       samples = 0;
    std::vector<Word> witness;  // alternating syllables multiplying to 1
  };

  // Samples alternating products s_1 ... s_L (2 <= L <= 6, consecutive
  // syllables from different parts, each a nonidentity element of its part)
  // and fails on the first product equal to the identity. Throws
  // DegeneratePartError if a part has no nonidentity element.
  ProbeResult free_product_probe(std::vector<Basis> const& parts,
                                 std::size_t               samples,
                                 std::uint64_t             seed);

  struct Lemma2Options {
    std::size_t max_syllables = 6;
    long long   max_index     = 4;
  };

  struct Lemma2Result {
    bool        passed               = true;
    std::size_t negative_samples     = 0;
    std::size_t nonnegative_samples  = 0;
    std::string failure;
  };

  // Samples words v_1 ... v_r of N with v_i = t^-n_i g_i t^n_i, g_i ∈ K
  // nonidentity and n_i != n_{i+1}. Words with a negative index must leave
  // the base group; words with all indices >= 0 must land in it, at the
  // product of the g_i φ^n_i. `samples` words of each kind are drawn.
  Lemma2Result lemma2_probe(FreeEndo const&      e,
                            Basis const&         k,
                            std::size_t          samples,
                            std::uint64_t        seed,
                            Lemma2Options const& options     = {},
                            std::size_t          depth_limit = default_depth_limit);

}  // namespace howson
