#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "howson/word.hpp"

namespace howson {

  struct GraphAccess;

  // Free generating set of a subgroup, as words in the ambient free group.
  using Basis = std::vector<Word>;

  // Folded, based core graph (Stallings automaton) of a finitely generated
  // subgroup of the free group of rank `alphabet_rank`.
  //
  // Vertices are numbered in breadth-first order from the basepoint 0,
  // scanning outgoing edges in Letter slot order, so two graphs accept the
  // same subgroup iff they compare equal.
  class SubgroupGraph {
   public:
    struct Edge {
      std::size_t from;
      std::size_t label;  // generator index, 1-based
      std::size_t to;

      friend auto operator<=>(Edge const&, Edge const&) = default;
    };

    // Trivial subgroup: a single vertex and no edges.
    explicit SubgroupGraph(std::size_t alphabet_rank = 0);

    // Folds the flower of `generators`, trims hairs and canonicalises.
    static SubgroupGraph build(std::span<Word const> generators,
                               std::size_t           alphabet_rank);

    // Folds an arbitrary labelled graph based at `base` (edges may be
    // unfolded, may leave hairs). Only the component of `base` survives.
    static SubgroupGraph from_edges(std::size_t            vertex_count,
                                    std::span<Edge const>  edges,
                                    std::size_t            base,
                                    std::size_t            alphabet_rank);

    std::size_t alphabet_rank() const {
      return _rank;
    }
    std::size_t vertex_count() const {
      return _vertices;
    }
    std::size_t edge_count() const;
    // Free rank of the subgroup: E - V + 1.
    std::size_t rank() const {
      return edge_count() + 1 - _vertices;
    }
    // Number of vertices when every vertex has every label in and out;
    // nullopt stands for infinite index.
    std::optional<std::size_t> index() const;

    std::optional<std::size_t> target(std::size_t vertex, Letter x) const;
    // End vertex of the path reading `w` from `start`, if it exists.
    std::optional<std::size_t> read(std::size_t start, Word const& w) const;
    // Throws AlphabetError on a rank mismatch.
    bool contains(Word const& w) const;

    // Positive edges in (from, label, to) order.
    std::vector<Edge> edges() const;

    // `V <count>`, `B 0`, then one `E <from> <label> <to>` row per edge.
    std::string serialize() const;

    friend bool operator==(SubgroupGraph const&, SubgroupGraph const&) = default;

   private:
    friend struct GraphAccess;

    std::size_t                 _rank     = 0;
    std::size_t                 _vertices = 1;
    std::vector<std::int32_t>   _table;  // vertex * 2 * rank + slot, -1 if absent
  };

  // Core of the pullback graph; accepts exactly the intersection.
  SubgroupGraph intersect(SubgroupGraph const& g1, SubgroupGraph const& g2);

  // One word per edge outside the breadth-first spanning tree, in edge
  // order. `build(basis(g)) == g`.
  Basis basis(SubgroupGraph const& g);

  // Signed 1-based indices e such that the product of basis(g)[|e_i| - 1]
  // raised to sign(e_i) equals w; nullopt if w is not in the subgroup.
  std::optional<std::vector<int>> express(SubgroupGraph const& g,
                                          Word const&          w);

  // Product of basis words selected by an `express` result.
  Word recompose(Basis const& basis, std::span<int const> expression);

  enum class ComplementSize { full, single };

  // Free complement K of an infinite-index subgroup H, obtained by
  // completing each partial label permutation of H's graph (missing targets
  // go to the smallest vertex lacking that incoming label) and reading off
  // the new non-tree edges. ⟨H ∪ K⟩ = H ∗ ⟨K⟩ is checked by rank additivity
  // before returning. `single` keeps only the shortlex-least word.
  // Throws NoComplementError for finite index.
  Basis hall_complement(SubgroupGraph const& g,
                        ComplementSize       size = ComplementSize::full);

}  // namespace howson
