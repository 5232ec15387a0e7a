#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "howson/subgroup_graph.hpp"
#include "howson/word.hpp"

namespace howson {

  namespace detail {
    struct ProvenanceCache;
  }

  // Endomorphism of the free group of rank n, given by the images of the
  // generators.
  class FreeEndo {
   public:
    FreeEndo(std::size_t rank, std::vector<Word> images);

    static FreeEndo identity(std::size_t rank);

    std::size_t rank() const {
      return _rank;
    }
    std::vector<Word> const& images() const {
      return _images;
    }
    // Stallings graph of the image subgroup.
    SubgroupGraph const& image_graph() const {
      return *_image_graph;
    }

    Word apply(Word const& w) const;

    // Free groups are Hopfian, so the images freely generate their span
    // exactly when that span has rank n; this is injectivity.
    bool is_injective() const;
    // Surjective iff the image subgroup has index 1.
    bool is_surjective() const;

    bool image_contains(Word const& w) const {
      return _image_graph->contains(w);
    }

    // The unique u with apply(u) == w, or nullopt if w is not an image.
    // Throws ContractError unless the endomorphism is injective.
    std::optional<Word> preimage(Word const& w) const;

    friend bool operator==(FreeEndo const& x, FreeEndo const& y) {
      return x._rank == y._rank && x._images == y._images;
    }

   private:
    std::size_t                              _rank;
    std::vector<Word>                        _images;
    std::shared_ptr<SubgroupGraph const>     _image_graph;
    std::shared_ptr<detail::ProvenanceCache> _provenance;
  };

  // (f ∘ g)(w) = f(g(w)).
  FreeEndo compose(FreeEndo const& f, FreeEndo const& g);
  // k-fold composite; power(e, 0) is the identity.
  FreeEndo power(FreeEndo const& e, std::size_t k);

  // `rank 2; a -> a a; b -> b b`. The rank clause is optional, in which case
  // the rank is the number of rules. Every generator needs exactly one rule.
  FreeEndo    parse_free_endo(std::string_view spec);
  std::string to_string(FreeEndo const& e);

}  // namespace howson
