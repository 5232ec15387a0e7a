#include "howson/subgroup_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "howson/errors.hpp"

namespace howson {

  namespace {

    // Union-find folding of a labelled graph. Every vertex has one target
    // slot per Letter; entries may point at stale (merged) vertices and are
    // resolved through find().
    class Folder {
     public:
      explicit Folder(std::size_t rank) : _slots(2 * rank) {}

      int add_vertex() {
        _parent.push_back(static_cast<int>(_parent.size()));
        _adj.resize(_adj.size() + _slots, -1);
        return static_cast<int>(_parent.size()) - 1;
      }

      int find(int v) {
        while (_parent[v] != v) {
          _parent[v] = _parent[_parent[v]];
          v          = _parent[v];
        }
        return v;
      }

      void add_edge(int u, Letter x, int v) {
        _work.push_back({u, x.slot(), v});
        drain();
      }

      // Reads `w` from the basepoint as far as existing edges allow, then
      // adds a fresh path that closes up at the basepoint.
      void add_loop(Word const& w) {
        if (w.is_identity()) {
          return;
        }
        int         cur = 0;
        std::size_t i   = 0;
        for (; i + 1 < w.length(); ++i) {
          int t = _adj[index(find(cur), w[i].slot())];
          if (t < 0) {
            break;
          }
          cur = find(t);
        }
        for (; i < w.length(); ++i) {
          int next = i + 1 == w.length() ? 0 : add_vertex();
          add_edge(cur, w[i], next);
          cur = find(next);
        }
      }

      // Trims non-base vertices of degree <= 1 and renumbers breadth-first.
      SubgroupGraph finish(std::size_t rank, int base) {
        base = find(base);
        std::size_t const   n = _parent.size();
        std::vector<int>    degree(n, 0);
        std::vector<bool>   alive(n, false);
        for (std::size_t v = 0; v < n; ++v) {
          if (find(static_cast<int>(v)) != static_cast<int>(v)) {
            continue;
          }
          alive[v] = true;
          for (std::size_t s = 0; s < _slots; ++s) {
            int& t = _adj[v * _slots + s];
            if (t >= 0) {
              t = find(t);
              ++degree[v];
            }
          }
        }
        std::vector<int> queue;
        for (std::size_t v = 0; v < n; ++v) {
          if (alive[v] && static_cast<int>(v) != base && degree[v] <= 1) {
            queue.push_back(static_cast<int>(v));
          }
        }
        while (!queue.empty()) {
          int v = queue.back();
          queue.pop_back();
          if (!alive[v]) {
            continue;
          }
          alive[v] = false;
          for (std::size_t s = 0; s < _slots; ++s) {
            int t = _adj[v * _slots + s];
            if (t < 0) {
              continue;
            }
            _adj[v * _slots + s] = -1;
            int& back            = _adj[t * _slots + (s ^ 1)];
            if (back == v) {
              back = -1;
              --degree[t];
              if (alive[t] && t != base && degree[t] <= 1) {
                queue.push_back(t);
              }
            }
          }
        }

        std::vector<int> order{base};
        std::vector<int> number(n, -1);
        number[base] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
          int v = order[head];
          for (std::size_t s = 0; s < _slots; ++s) {
            int t = _adj[v * _slots + s];
            if (t >= 0 && alive[t] && number[t] < 0) {
              number[t] = static_cast<int>(order.size());
              order.push_back(t);
            }
          }
        }
        std::vector<SubgroupGraph::Edge> edges;
        for (int v : order) {
          for (std::size_t s = 0; s < _slots; s += 2) {
            int t = _adj[v * _slots + s];
            if (t >= 0 && number[t] >= 0) {
              edges.push_back({static_cast<std::size_t>(number[v]), s / 2 + 1,
                               static_cast<std::size_t>(number[t])});
            }
          }
        }
        return assemble(rank, order.size(), edges);
      }

      static SubgroupGraph assemble(std::size_t                             rank,
                                    std::size_t                             vertices,
                                    std::vector<SubgroupGraph::Edge> const& edges);

     private:
      struct Item {
        int         u;
        std::size_t slot;
        int         v;
      };

      std::size_t index(int v, std::size_t slot) const {
        return static_cast<std::size_t>(v) * _slots + slot;
      }

      void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        int keep = std::min(a, b);
        int drop = std::max(a, b);
        _parent[drop] = keep;
        for (std::size_t s = 0; s < _slots; ++s) {
          int t = _adj[index(drop, s)];
          if (t >= 0) {
            _adj[index(drop, s)] = -1;
            _work.push_back({keep, s, t});
          }
        }
      }

      void drain() {
        while (!_work.empty()) {
          Item it = _work.front();
          _work.pop_front();
          int u = find(it.u);
          int v = find(it.v);
          int& out = _adj[index(u, it.slot)];
          if (out < 0) {
            out = v;
          } else {
            out = find(out);
            if (out != v) {
              merge(out, v);
              continue;  // re-examined via the merged vertex's requeued edges
            }
          }
          u = find(u);
          v = find(v);
          int& back = _adj[index(v, it.slot ^ 1)];
          if (back < 0) {
            back = u;
          } else {
            back = find(back);
            if (back != u) {
              merge(back, u);
            }
          }
        }
      }

      std::size_t            _slots;
      std::vector<int>       _parent;
      std::vector<int>       _adj;
      std::deque<Item>       _work;
    };

  }  // namespace

  // Helper with access to the private representation.
  struct GraphAccess {
    static SubgroupGraph make(std::size_t rank, std::size_t vertices,
                              std::vector<SubgroupGraph::Edge> const& edges);
  };

  SubgroupGraph Folder::assemble(std::size_t rank, std::size_t vertices,
                                 std::vector<SubgroupGraph::Edge> const& edges) {
    return GraphAccess::make(rank, vertices, edges);
  }

  SubgroupGraph::SubgroupGraph(std::size_t alphabet_rank)
      : _rank(alphabet_rank), _vertices(1), _table(2 * alphabet_rank, -1) {}

  SubgroupGraph GraphAccess::make(std::size_t rank, std::size_t vertices,
                                  std::vector<SubgroupGraph::Edge> const& edges) {
    SubgroupGraph g(rank);
    g._vertices = vertices;
    g._table.assign(vertices * 2 * rank, -1);
    for (auto const& e : edges) {
      std::size_t s = 2 * (e.label - 1);
      g._table[e.from * 2 * rank + s]     = static_cast<std::int32_t>(e.to);
      g._table[e.to * 2 * rank + s + 1]   = static_cast<std::int32_t>(e.from);
    }
    return g;
  }

  SubgroupGraph SubgroupGraph::build(std::span<Word const> generators,
                                     std::size_t           alphabet_rank) {
    Folder folder(alphabet_rank);
    folder.add_vertex();
    for (auto const& w : generators) {
      if (w.rank() != alphabet_rank) {
        throw AlphabetError("generator over rank " + std::to_string(w.rank())
                            + ", expected " + std::to_string(alphabet_rank));
      }
      folder.add_loop(w);
    }
    return folder.finish(alphabet_rank, 0);
  }

  SubgroupGraph SubgroupGraph::from_edges(std::size_t           vertex_count,
                                          std::span<Edge const> edges,
                                          std::size_t           base,
                                          std::size_t           alphabet_rank) {
    Folder folder(alphabet_rank);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      folder.add_vertex();
    }
    for (auto const& e : edges) {
      if (e.label == 0 || e.label > alphabet_rank || e.from >= vertex_count
          || e.to >= vertex_count) {
        throw AlphabetError("edge outside graph or alphabet");
      }
      folder.add_edge(static_cast<int>(e.from), Letter::positive(e.label),
                      static_cast<int>(e.to));
    }
    return folder.finish(alphabet_rank, static_cast<int>(base));
  }

  std::size_t SubgroupGraph::edge_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _table.size(); i += 2) {
      count += _table[i] >= 0 ? 1 : 0;
    }
    return count;
  }

  std::optional<std::size_t> SubgroupGraph::index() const {
    if (std::any_of(_table.begin(), _table.end(), [](auto t) { return t < 0; })) {
      return std::nullopt;
    }
    return _vertices;
  }

  std::optional<std::size_t> SubgroupGraph::target(std::size_t vertex,
                                                   Letter      x) const {
    auto t = _table[vertex * 2 * _rank + x.slot()];
    if (t < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(t);
  }

  std::optional<std::size_t> SubgroupGraph::read(std::size_t start,
                                                 Word const& w) const {
    if (w.rank() != _rank) {
      throw AlphabetError("word over rank " + std::to_string(w.rank())
                          + " read in graph of rank " + std::to_string(_rank));
    }
    std::size_t v = start;
    for (Letter x : w) {
      auto t = _table[v * 2 * _rank + x.slot()];
      if (t < 0) {
        return std::nullopt;
      }
      v = static_cast<std::size_t>(t);
    }
    return v;
  }

  bool SubgroupGraph::contains(Word const& w) const {
    auto end = read(0, w);
    return end && *end == 0;
  }

  std::vector<SubgroupGraph::Edge> SubgroupGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < _vertices; ++v) {
      for (std::size_t s = 0; s < 2 * _rank; s += 2) {
        auto t = _table[v * 2 * _rank + s];
        if (t >= 0) {
          out.push_back({v, s / 2 + 1, static_cast<std::size_t>(t)});
        }
      }
    }
    return out;
  }

  std::string SubgroupGraph::serialize() const {
    std::ostringstream out;
    out << "V " << _vertices << "\nB 0\n";
    for (auto const& e : edges()) {
      out << "E " << e.from << ' ' << e.label << ' ' << e.to << '\n';
    }
    return out.str();
  }

  SubgroupGraph intersect(SubgroupGraph const& g1, SubgroupGraph const& g2) {
    if (g1.alphabet_rank() != g2.alphabet_rank()) {
      throw AlphabetError("intersecting subgroups of different free groups");
    }
    std::size_t const                         rank = g1.alphabet_rank();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    std::vector<std::pair<std::size_t, std::size_t>>           order{{0, 0}};
    std::vector<SubgroupGraph::Edge>                           edges;
    id[{0, 0}] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      auto [p, q] = order[head];
      for (std::size_t g = 1; g <= rank; ++g) {
        auto x  = Letter::positive(g);
        auto tp = g1.target(p, x);
        auto tq = g2.target(q, x);
        if (!tp || !tq) {
          continue;
        }
        auto [it, fresh] = id.try_emplace({*tp, *tq}, order.size());
        if (fresh) {
          order.emplace_back(*tp, *tq);
        }
        edges.push_back({head, g, it->second});
      }
      // Incoming edges also reach new pairs.
      for (std::size_t g = 1; g <= rank; ++g) {
        auto x  = Letter::negative(g);
        auto tp = g1.target(p, x);
        auto tq = g2.target(q, x);
        if (!tp || !tq) {
          continue;
        }
        auto [it, fresh] = id.try_emplace({*tp, *tq}, order.size());
        if (fresh) {
          order.emplace_back(*tp, *tq);
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SubgroupGraph::from_edges(order.size(), edges, 0, rank);
  }

  namespace {

    struct SpanningTree {
      std::vector<Word>        path;      // basepoint -> vertex
      std::vector<std::size_t> tree_edge; // per positive edge: 1 if in tree
      std::vector<SubgroupGraph::Edge> edges;
    };

    SpanningTree spanning_tree(SubgroupGraph const& g) {
      std::size_t const rank = g.alphabet_rank();
      SpanningTree      st;
      st.edges = g.edges();
      st.tree_edge.assign(st.edges.size(), 0);
      st.path.assign(g.vertex_count(), Word(rank));
      std::vector<bool> seen(g.vertex_count(), false);
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> tree_in;
      seen[0] = true;
      std::vector<std::size_t> order{0};
      for (std::size_t head = 0; head < order.size(); ++head) {
        std::size_t v = order[head];
        for (std::size_t s = 0; s < 2 * rank; ++s) {
          auto x = Letter::from_slot(s);
          auto t = g.target(v, x);
          if (!t || seen[*t]) {
            continue;
          }
          seen[*t] = true;
          order.push_back(*t);
          Letter one[] = {x};
          st.path[*t]  = st.path[v] * Word(rank, one);
          // Mark the positive edge realising this step.
          SubgroupGraph::Edge e = x.is_inverse()
                                      ? SubgroupGraph::Edge{*t, x.generator(), v}
                                      : SubgroupGraph::Edge{v, x.generator(), *t};
          auto pos = std::lower_bound(st.edges.begin(), st.edges.end(), e);
          st.tree_edge[static_cast<std::size_t>(pos - st.edges.begin())] = 1;
        }
      }
      return st;
    }

    Word edge_word(SpanningTree const& st, SubgroupGraph::Edge const& e,
                   std::size_t rank) {
      Letter one[] = {Letter::positive(e.label)};
      return st.path[e.from] * Word(rank, one) * invert(st.path[e.to]);
    }

  }  // namespace

  Basis basis(SubgroupGraph const& g) {
    auto  st = spanning_tree(g);
    Basis out;
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
      if (!st.tree_edge[i]) {
        out.push_back(edge_word(st, st.edges[i], g.alphabet_rank()));
      }
    }
    return out;
  }

  std::optional<std::vector<int>> express(SubgroupGraph const& g,
                                          Word const&          w) {
    auto st = spanning_tree(g);
    // Number the non-tree edges 1, 2, ... in edge order.
    std::vector<int> number(st.edges.size(), 0);
    int              next = 0;
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
      if (!st.tree_edge[i]) {
        number[i] = ++next;
      }
    }
    if (w.rank() != g.alphabet_rank()) {
      throw AlphabetError("word and graph over different alphabets");
    }
    std::vector<int> out;
    std::size_t      v = 0;
    for (Letter x : w) {
      auto t = g.target(v, x);
      if (!t) {
        return std::nullopt;
      }
      SubgroupGraph::Edge e = x.is_inverse()
                                  ? SubgroupGraph::Edge{*t, x.generator(), v}
                                  : SubgroupGraph::Edge{v, x.generator(), *t};
      auto pos = static_cast<std::size_t>(
          std::lower_bound(st.edges.begin(), st.edges.end(), e)
          - st.edges.begin());
      if (number[pos] != 0) {
        out.push_back(x.is_inverse() ? -number[pos] : number[pos]);
      }
      v = *t;
    }
    if (v != 0) {
      return std::nullopt;
    }
    return out;
  }

  Word recompose(Basis const& b, std::span<int const> expression) {
    if (b.empty()) {
      if (!expression.empty()) {
        throw ContractError("expression over an empty basis");
      }
      return Word();
    }
    Word result(b.front().rank());
    for (int e : expression) {
      auto i = static_cast<std::size_t>(e < 0 ? -e : e);
      if (i == 0 || i > b.size()) {
        throw ContractError("basis index " + std::to_string(e) + " out of range");
      }
      result = result * (e < 0 ? invert(b[i - 1]) : b[i - 1]);
    }
    return result;
  }

  Basis hall_complement(SubgroupGraph const& g, ComplementSize size) {
    if (g.index()) {
      throw NoComplementError("subgroup has finite index "
                              + std::to_string(*g.index())
                              + "; it has no free complement");
    }
    std::size_t const rank = g.alphabet_rank();
    std::size_t const n    = g.vertex_count();
    auto              st   = spanning_tree(g);
    std::vector<SubgroupGraph::Edge> added;
    for (std::size_t label = 1; label <= rank; ++label) {
      auto              x = Letter::positive(label);
      std::vector<bool> has_in(n, false);
      for (std::size_t v = 0; v < n; ++v) {
        has_in[v] = g.target(v, x.inverse()).has_value();
      }
      std::size_t free_target = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (g.target(v, x)) {
          continue;
        }
        while (has_in[free_target]) {
          ++free_target;
        }
        has_in[free_target] = true;
        added.push_back({v, label, free_target});
      }
    }
    Basis k;
    for (auto const& e : added) {
      k.push_back(edge_word(st, e, rank));
    }
    if (size == ComplementSize::single && !k.empty()) {
      k = {*std::min_element(k.begin(), k.end())};
    }

    // ⟨H ∪ K⟩ = H ∗ ⟨K⟩ iff the union of a basis of H with K is a basis.
    Basis joint = basis(g);
    joint.insert(joint.end(), k.begin(), k.end());
    auto joined = SubgroupGraph::build(joint, rank);
    if (k.empty() || joined.rank() != g.rank() + k.size()) {
      throw ConstructionError("completion did not yield a free complement");
    }
    return k;
  }

}  // namespace howson
