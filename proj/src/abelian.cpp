#include "howson/abelian.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "howson/checked.hpp"
#include "howson/errors.hpp"
#include "text_util.hpp"

namespace howson {

  using checked::add;
  using checked::mul;
  using checked::sub;

  namespace {

    using Matrix = std::vector<std::vector<std::int64_t>>;

    struct Gcd {
      std::int64_t g, s, t;  // g = s a + t b, g >= 0
    };

    Gcd extended_gcd(std::int64_t a, std::int64_t b) {
      std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = sub(r0, mul(q, r1));
        std::int64_t s2 = sub(s0, mul(q, s1));
        std::int64_t t2 = sub(t0, mul(q, t1));
        r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
      }
      if (r0 < 0) {
        return {checked::neg(r0), checked::neg(s0), checked::neg(t0)};
      }
      return {r0, s0, t0};
    }

    // Column operation on columns i, j of every matrix in `ms`:
    //   (ci, cj) <- (p ci + q cj, r ci + s cj).
    void column_op(std::vector<Matrix*> const& ms, std::size_t i, std::size_t j,
                   std::int64_t p, std::int64_t q, std::int64_t r,
                   std::int64_t s) {
      for (Matrix* m : ms) {
        for (auto& row : *m) {
          std::int64_t a = row[i];
          std::int64_t b = row[j];
          row[i]         = add(mul(p, a), mul(q, b));
          row[j]         = add(mul(r, a), mul(s, b));
        }
      }
    }

  }  // namespace

  AbelianVector AbelianVector::unit(std::size_t dimension, std::size_t i) {
    AbelianVector v(dimension);
    v._coords[i] = 1;
    return v;
  }

  bool AbelianVector::is_zero() const {
    return std::all_of(_coords.begin(), _coords.end(),
                       [](std::int64_t c) { return c == 0; });
  }

  AbelianVector add(AbelianVector const& x, AbelianVector const& y) {
    if (x.dimension() != y.dimension()) {
      throw AlphabetError("adding vectors of different dimensions");
    }
    std::vector<std::int64_t> out(x.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = checked::add(x[i], y[i]);
    }
    return AbelianVector(std::move(out));
  }

  AbelianVector negate(AbelianVector const& x) {
    std::vector<std::int64_t> out(x.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = checked::neg(x[i]);
    }
    return AbelianVector(std::move(out));
  }

  MatrixEndo::MatrixEndo(std::vector<std::vector<std::int64_t>> rows)
      : _rows(std::move(rows)) {
    for (auto const& row : _rows) {
      if (row.size() != _rows.size()) {
        throw ContractError("matrix endomorphism must be square");
      }
    }
  }

  MatrixEndo MatrixEndo::identity(std::size_t dimension) {
    Matrix rows(dimension, std::vector<std::int64_t>(dimension, 0));
    for (std::size_t i = 0; i < dimension; ++i) {
      rows[i][i] = 1;
    }
    return MatrixEndo(std::move(rows));
  }

  AbelianVector MatrixEndo::apply(AbelianVector const& x) const {
    if (x.dimension() != dimension()) {
      throw AlphabetError("vector dimension does not match the matrix");
    }
    std::vector<std::int64_t> out(dimension(), 0);
    for (std::size_t i = 0; i < dimension(); ++i) {
      for (std::size_t j = 0; j < dimension(); ++j) {
        out[i] = add(out[i], mul(_rows[i][j], x[j]));
      }
    }
    return AbelianVector(std::move(out));
  }

  std::int64_t MatrixEndo::determinant() const {
    std::size_t const n = dimension();
    if (n == 0) {
      return 1;
    }
    Matrix       a    = _rows;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          // Bareiss: the division is exact.
          a[i][j] = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])) / prev;
        }
      }
      prev = a[k][k];
    }
    return mul(sign, a[n - 1][n - 1]);
  }

  AbelianClassification ab_classify(MatrixEndo const& m) {
    auto det = m.determinant();
    return {det != 0, det == 1 || det == -1};
  }

  std::optional<AbelianVector> ab_preimage(MatrixEndo const&    m,
                                           AbelianVector const& v) {
    std::size_t const n = m.dimension();
    if (v.dimension() != n) {
      throw AlphabetError("vector dimension does not match the matrix");
    }
    if (m.determinant() == 0) {
      throw ContractError("image membership needs a non-singular matrix");
    }
    // Reduce M to lower-triangular H = M U with U unimodular.
    Matrix h = m.rows();
    Matrix u = MatrixEndo::identity(n).rows();
    std::vector<Matrix*> both{&h, &u};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h[i][j] == 0) {
          continue;
        }
        auto [g, s, t] = extended_gcd(h[i][i], h[i][j]);
        std::int64_t a = h[i][i] / g;
        std::int64_t b = h[i][j] / g;
        // det [[s, -b], [t, a]] = s a + t b = 1.
        column_op(both, i, j, s, t, checked::neg(b), a);
      }
    }
    // Solve H y = v by forward substitution, then x = U y.
    std::vector<std::int64_t> y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t rhs = v[i];
      for (std::size_t j = 0; j < i; ++j) {
        rhs = sub(rhs, mul(h[i][j], y[j]));
      }
      if (rhs % h[i][i] != 0) {
        return std::nullopt;
      }
      y[i] = rhs / h[i][i];
    }
    std::vector<std::int64_t> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        x[i] = add(x[i], mul(u[i][j], y[j]));
      }
    }
    AbelianVector result(std::move(x));
    if (m.apply(result) != v) {
      throw ConstructionError("Hermite solve produced a wrong preimage");
    }
    return result;
  }

  bool ab_image_contains(MatrixEndo const& m, AbelianVector const& v) {
    return ab_preimage(m, v).has_value();
  }

  MatrixEndo parse_matrix_endo(std::string_view spec) {
    auto semi = spec.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("matrix spec needs 'dim N; [[...]]'");
    }
    auto head = trim(spec.substr(0, semi));
    if (!starts_with_word(head, "dim")) {
      throw ParseError("matrix spec must start with 'dim'");
    }
    std::size_t dim  = parse_count(std::string_view(head).substr(3), "dim");
    auto        body = trim(spec.substr(semi + 1));
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(body);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("bad matrix literal: ") + e.what());
    }
    if (!parsed.is_array() || parsed.size() != dim) {
      throw ParseError("matrix must have " + std::to_string(dim) + " rows");
    }
    Matrix rows;
    for (auto const& row : parsed) {
      if (!row.is_array() || row.size() != dim) {
        throw ParseError("matrix rows must have " + std::to_string(dim)
                         + " entries");
      }
      std::vector<std::int64_t> r;
      for (auto const& x : row) {
        if (!x.is_number_integer()) {
          throw ParseError("matrix entries must be integers");
        }
        r.push_back(x.get<std::int64_t>());
      }
      rows.push_back(std::move(r));
    }
    if (dim == 0) {
      throw ParseError("matrix dimension must be positive");
    }
    return MatrixEndo(std::move(rows));
  }

  std::string to_string(MatrixEndo const& m) {
    std::ostringstream out;
    out << "dim " << m.dimension() << "; [";
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      out << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        out << (j ? "," : "") << m.rows()[i][j];
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

}  // namespace howson
