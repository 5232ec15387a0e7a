#include "howson/free_endo.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "howson/errors.hpp"
#include "text_util.hpp"

namespace howson {

  namespace detail {

    // The flower of image loops folded while every edge carries a word in
    // the domain generators. Reading a closed path at the basepoint and
    // multiplying the carried words gives a preimage of the path label.
    class ProvenanceGraph {
     public:
      explicit ProvenanceGraph(FreeEndo const& e) : _rank(e.rank()) {
        add_vertex();
        for (std::size_t i = 0; i < e.images().size(); ++i) {
          add_petal(e.images()[i], i + 1);
        }
        fold();
        index();
      }

      // Domain word carried by the path reading w from the basepoint, if it
      // is closed.
      std::optional<Word> read(Word const& w) const {
        Word        value(_rank);
        std::size_t v = 0;
        for (Letter x : w) {
          auto const& hop = _lookup[v * 2 * _rank + x.slot()];
          if (hop.edge < 0) {
            return std::nullopt;
          }
          auto const& e = _edges[static_cast<std::size_t>(hop.edge)];
          value         = value * (x.is_inverse() ? invert(e.label) : e.label);
          v             = static_cast<std::size_t>(x.is_inverse() ? e.from : e.to);
        }
        if (v != 0) {
          return std::nullopt;
        }
        return value;
      }

     private:
      struct Edge {
        int         from;
        std::size_t gen;
        int         to;
        Word        label;
        bool        alive = true;
      };
      struct Hop {
        int edge = -1;
      };

      int add_vertex() {
        _incident.emplace_back();
        _alive.push_back(true);
        return static_cast<int>(_incident.size()) - 1;
      }

      void add_edge(int from, std::size_t gen, int to, Word label) {
        _edges.push_back({from, gen, to, std::move(label)});
        auto id = _edges.size() - 1;
        _incident[static_cast<std::size_t>(from)].push_back(id);
        if (to != from) {
          _incident[static_cast<std::size_t>(to)].push_back(id);
        }
      }

      void add_petal(Word const& image, std::size_t domain_generator) {
        if (image.is_identity()) {
          return;
        }
        int cur = 0;
        for (std::size_t i = 0; i < image.length(); ++i) {
          int  next  = i + 1 == image.length() ? 0 : add_vertex();
          Word label = i == 0 ? Word::generator(_rank, domain_generator)
                              : Word(_rank);
          Letter x = image[i];
          if (x.is_inverse()) {
            add_edge(next, x.generator(), cur, invert(label));
          } else {
            add_edge(cur, x.generator(), next, label);
          }
          cur = next;
        }
      }

      struct Step {
        std::size_t edge;
        int         end;
        Word        value;
      };

      void fold() {
        std::vector<int> work;
        for (std::size_t v = 0; v < _incident.size(); ++v) {
          work.push_back(static_cast<int>(v));
        }
        std::vector<std::optional<Step>> seen(2 * _rank);
        while (!work.empty()) {
          int u = work.back();
          work.pop_back();
          if (!_alive[static_cast<std::size_t>(u)]) {
            continue;
          }
          std::fill(seen.begin(), seen.end(), std::nullopt);
          auto& inc = _incident[static_cast<std::size_t>(u)];
          std::sort(inc.begin(), inc.end());
          inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
          std::erase_if(inc, [&](std::size_t id) { return !_edges[id].alive; });
          bool folded = false;
          for (std::size_t id : inc) {
            auto const& e = _edges[id];
            std::vector<std::pair<Letter, Step>> steps;
            if (e.from == u) {
              steps.push_back({Letter::positive(e.gen), {id, e.to, e.label}});
            }
            if (e.to == u) {
              steps.push_back(
                  {Letter::negative(e.gen), {id, e.from, invert(e.label)}});
            }
            for (auto& [x, step] : steps) {
              auto& slot = seen[x.slot()];
              if (!slot) {
                slot = step;
                continue;
              }
              if (slot->edge == step.edge) {
                continue;  // a loop seen from both sides
              }
              identify(*slot, step, work);
              work.push_back(u);
              folded = true;
              break;
            }
            if (folded) {
              break;
            }
          }
        }
      }

      // Identifies two edges leaving the same vertex with the same letter.
      void identify(Step first, Step second, std::vector<int>& work) {
        if (first.end == second.end) {
          if (first.value != second.value) {
            throw ConstructionError(
                "image folding found a kernel element; endomorphism is not "
                "injective");
          }
          _edges[second.edge].alive = false;
          work.push_back(first.end);
          return;
        }
        if (second.end == 0) {
          std::swap(first, second);
        }
        int const  keep  = first.end;
        int const  drop  = second.end;
        Word const delta = invert(first.value) * second.value;
        Word const delta_inv = invert(delta);
        for (std::size_t id : _incident[static_cast<std::size_t>(drop)]) {
          auto& e = _edges[id];
          if (!e.alive) {
            continue;
          }
          bool out = e.from == drop;
          bool in  = e.to == drop;
          if (out && in) {
            e.label = delta * e.label * delta_inv;
          } else if (out) {
            e.label = delta * e.label;
          } else if (in) {
            e.label = e.label * delta_inv;
          } else {
            continue;  // already moved through a duplicate entry
          }
          if (out) {
            e.from = keep;
          }
          if (in) {
            e.to = keep;
          }
          _incident[static_cast<std::size_t>(keep)].push_back(id);
        }
        _incident[static_cast<std::size_t>(drop)].clear();
        _alive[static_cast<std::size_t>(drop)] = false;
        work.push_back(keep);
      }

      void index() {
        _lookup.assign(_incident.size() * 2 * _rank, Hop{});
        for (std::size_t id = 0; id < _edges.size(); ++id) {
          auto const& e = _edges[id];
          if (!e.alive) {
            continue;
          }
          auto from = static_cast<std::size_t>(e.from);
          auto to   = static_cast<std::size_t>(e.to);
          _lookup[from * 2 * _rank + Letter::positive(e.gen).slot()].edge
              = static_cast<int>(id);
          _lookup[to * 2 * _rank + Letter::negative(e.gen).slot()].edge
              = static_cast<int>(id);
        }
      }

      std::size_t                           _rank;
      std::vector<Edge>                     _edges;
      std::vector<std::vector<std::size_t>> _incident;
      std::vector<bool>                     _alive;
      std::vector<Hop>                      _lookup;
    };

    struct ProvenanceCache {
      std::once_flag                         once;
      std::unique_ptr<ProvenanceGraph const> graph;
    };

  }  // namespace detail

  FreeEndo::FreeEndo(std::size_t rank, std::vector<Word> images)
      : _rank(rank),
        _images(std::move(images)),
        _provenance(std::make_shared<detail::ProvenanceCache>()) {
    if (_images.size() != _rank) {
      throw ContractError("endomorphism of rank " + std::to_string(_rank)
                          + " needs " + std::to_string(_rank)
                          + " images, got " + std::to_string(_images.size()));
    }
    for (auto const& w : _images) {
      if (w.rank() != _rank) {
        throw AlphabetError("image word over rank " + std::to_string(w.rank())
                            + ", expected " + std::to_string(_rank));
      }
    }
    _image_graph = std::make_shared<SubgroupGraph const>(
        SubgroupGraph::build(_images, _rank));
  }

  FreeEndo FreeEndo::identity(std::size_t rank) {
    std::vector<Word> images;
    for (std::size_t g = 1; g <= rank; ++g) {
      images.push_back(Word::generator(rank, g));
    }
    return FreeEndo(rank, std::move(images));
  }

  Word FreeEndo::apply(Word const& w) const {
    if (w.rank() != _rank) {
      throw AlphabetError("applying a rank " + std::to_string(_rank)
                          + " endomorphism to a rank "
                          + std::to_string(w.rank()) + " word");
    }
    std::vector<Letter> out;
    for (Letter x : w) {
      auto const& image = _images[x.generator() - 1];
      if (x.is_inverse()) {
        for (auto it = image.letters().rbegin(); it != image.letters().rend();
             ++it) {
          out.push_back(it->inverse());
        }
      } else {
        out.insert(out.end(), image.begin(), image.end());
      }
    }
    return Word(_rank, out);
  }

  bool FreeEndo::is_injective() const {
    return _image_graph->rank() == _rank;
  }

  bool FreeEndo::is_surjective() const {
    auto idx = _image_graph->index();
    return idx && *idx == 1;
  }

  std::optional<Word> FreeEndo::preimage(Word const& w) const {
    if (!is_injective()) {
      throw ContractError("preimage requested for a non-injective endomorphism");
    }
    if (w.rank() != _rank) {
      throw AlphabetError("preimage of a word over the wrong alphabet");
    }
    std::call_once(_provenance->once, [this] {
      _provenance->graph = std::make_unique<detail::ProvenanceGraph>(*this);
    });
    auto u = _provenance->graph->read(w);
    if (u && apply(*u) != w) {
      throw ConstructionError("preimage does not map back onto its input");
    }
    return u;
  }

  FreeEndo compose(FreeEndo const& f, FreeEndo const& g) {
    if (f.rank() != g.rank()) {
      throw AlphabetError("composing endomorphisms of different ranks");
    }
    std::vector<Word> images;
    for (auto const& w : g.images()) {
      images.push_back(f.apply(w));
    }
    return FreeEndo(f.rank(), std::move(images));
  }

  FreeEndo power(FreeEndo const& e, std::size_t k) {
    FreeEndo result = FreeEndo::identity(e.rank());
    for (std::size_t i = 0; i < k; ++i) {
      result = compose(e, result);
    }
    return result;
  }

  FreeEndo parse_free_endo(std::string_view spec) {
    auto        clauses = split_clauses(spec);
    std::size_t rank    = 0;
    bool        ranked  = false;
    if (!clauses.empty() && starts_with_word(clauses.front(), "rank")) {
      rank   = parse_count(clauses.front().substr(4), "rank");
      ranked = true;
      clauses.erase(clauses.begin());
    }
    if (!ranked) {
      rank = clauses.size();
    }
    if (rank == 0) {
      throw ParseError("endomorphism spec has no generators");
    }
    std::vector<std::optional<Word>> images(rank);
    for (auto const& clause : clauses) {
      auto arrow = clause.find("->");
      if (arrow == std::string::npos) {
        throw ParseError("expected 'generator -> image' in '" + clause + "'");
      }
      auto lhs = trim(clause.substr(0, arrow));
      auto g   = generator_index(lhs, rank);
      if (!g) {
        throw ParseError("'" + lhs + "' is not a generator of rank "
                         + std::to_string(rank));
      }
      if (images[*g - 1]) {
        throw ParseError("generator '" + lhs + "' has two rules");
      }
      auto rhs = trim(clause.substr(arrow + 2));
      if (rhs.empty()) {
        throw ParseError("empty image for '" + lhs + "'; write 1 for the identity");
      }
      images[*g - 1] = parse_word(rhs, rank);
    }
    std::vector<Word> out;
    for (std::size_t g = 1; g <= rank; ++g) {
      if (!images[g - 1]) {
        throw ParseError("no rule for generator '" + generator_name(g, rank)
                         + "'");
      }
      out.push_back(*images[g - 1]);
    }
    return FreeEndo(rank, std::move(out));
  }

  std::string to_string(FreeEndo const& e) {
    std::ostringstream out;
    out << "rank " << e.rank();
    for (std::size_t g = 1; g <= e.rank(); ++g) {
      out << "; " << generator_name(g, e.rank()) << " -> "
          << to_string(e.images()[g - 1]);
    }
    return out.str();
  }

}  // namespace howson
