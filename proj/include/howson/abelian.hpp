#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace howson {

  // Element of Z^n in coordinates of a fixed free basis.
  class AbelianVector {
   public:
    AbelianVector() = default;
    explicit AbelianVector(std::size_t dimension) : _coords(dimension, 0) {}
    explicit AbelianVector(std::vector<std::int64_t> coords)
        : _coords(std::move(coords)) {}

    static AbelianVector unit(std::size_t dimension, std::size_t i);

    std::size_t dimension() const {
      return _coords.size();
    }
    std::int64_t operator[](std::size_t i) const {
      return _coords[i];
    }
    std::vector<std::int64_t> const& coords() const {
      return _coords;
    }
    bool is_zero() const;

    friend bool operator==(AbelianVector const&, AbelianVector const&) = default;

   private:
    std::vector<std::int64_t> _coords;
  };

  // All arithmetic is checked and throws OverflowError.
  AbelianVector add(AbelianVector const& x, AbelianVector const& y);
  AbelianVector negate(AbelianVector const& x);

  // Endomorphism x -> M x of Z^n.
  class MatrixEndo {
   public:
    explicit MatrixEndo(std::vector<std::vector<std::int64_t>> rows);

    static MatrixEndo identity(std::size_t dimension);

    std::size_t dimension() const {
      return _rows.size();
    }
    std::vector<std::vector<std::int64_t>> const& rows() const {
      return _rows;
    }

    AbelianVector apply(AbelianVector const& x) const;
    // Exact determinant by fraction-free elimination.
    std::int64_t determinant() const;

    friend bool operator==(MatrixEndo const&, MatrixEndo const&) = default;

   private:
    std::vector<std::vector<std::int64_t>> _rows;
  };

  struct AbelianClassification {
    bool injective;
    bool surjective;
  };

  // Injective iff det != 0, surjective iff |det| == 1.
  AbelianClassification ab_classify(MatrixEndo const& m);

  // Unique integer solution of M x = v via a column Hermite form, or
  // nullopt. Throws ContractError when det M == 0.
  std::optional<AbelianVector> ab_preimage(MatrixEndo const&    m,
                                           AbelianVector const& v);
  bool ab_image_contains(MatrixEndo const& m, AbelianVector const& v);

  // `dim 2; [[2,0],[0,3]]`
  MatrixEndo  parse_matrix_endo(std::string_view spec);
  std::string to_string(MatrixEndo const& m);

}  // namespace howson
