#include "howson/base_group.hpp"

namespace howson {

  std::vector<Run> FreeBase::runs(Word const& x) const {
    std::vector<Run> out;
    for (Letter l : x) {
      std::size_t g = l.generator() - 1;
      if (!out.empty() && out.back().first == g
          && (out.back().second < 0) == l.is_inverse()) {
        out.back().second += l.sign();
      } else {
        out.emplace_back(g, l.sign());
      }
    }
    return out;
  }

  std::vector<Run> AbelianBase::runs(AbelianVector const& x) const {
    std::vector<Run> out;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
      if (x[i] != 0) {
        out.emplace_back(i, x[i]);
      }
    }
    return out;
  }

  std::string format_runs(std::vector<Run> const& runs,
                          std::size_t             generator_count) {
    if (runs.empty()) {
      return "1";
    }
    std::string out;
    for (auto [g, e] : runs) {
      if (!out.empty()) {
        out.push_back(' ');
      }
      out += generator_name(g + 1, generator_count);
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
    }
    return out;
  }

}  // namespace howson
