#include "cgt/stallings.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cgt {

  namespace {
    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  SubgroupGraph::SubgroupGraph(std::size_t rank)
      : _rank(rank), _next(1, std::vector<std::size_t>(2 * rank, none)) {}

  std::size_t SubgroupGraph::edge_count() const noexcept {
    std::size_t count = 0;
    for (auto const& row : _next) {
      for (std::size_t s = 0; s < row.size(); s += 2) {
        count += row[s] != none;
      }
    }
    return count;
  }

  std::optional<std::size_t> SubgroupGraph::follow(std::size_t v,
                                                   Letter      l) const {
    std::size_t t = _next.at(v).at(l.slot());
    if (t == none) {
      return std::nullopt;
    }
    return t;
  }

  std::vector<GraphEdge> SubgroupGraph::edges() const {
    std::vector<GraphEdge> result;
    for (std::size_t v = 0; v < _next.size(); ++v) {
      for (std::size_t g = 0; g < _rank; ++g) {
        if (_next[v][2 * g] != none) {
          result.push_back({v, static_cast<std::uint32_t>(g), _next[v][2 * g]});
        }
      }
    }
    return result;
  }

  SubgroupGraph SubgroupGraph::from_edges(std::size_t                rank,
                                          std::size_t                vertex_count,
                                          std::span<GraphEdge const> input,
                                          std::size_t                base) {
    std::size_t const slots = 2 * rank;
    for (auto const& e : input) {
      if (e.src >= vertex_count || e.dst >= vertex_count || e.gen >= rank) {
        throw ParseError("graph edge out of range");
      }
    }
    if (base >= vertex_count) {
      throw ParseError("graph base vertex out of range");
    }

    // Fold: identify the endpoints of equally labelled edges sharing a
    // source (or a target) until nothing changes.
    UnionFind uf(vertex_count);
    bool      changed = true;
    std::vector<std::size_t> table;
    while (changed) {
      changed = false;
      table.assign(vertex_count * slots, none);
      for (auto const& e : input) {
        std::size_t s = uf.find(e.src), d = uf.find(e.dst);
        std::size_t& fwd = table[s * slots + 2 * e.gen];
        if (fwd == none) {
          fwd = d;
        } else if (uf.find(fwd) != d) {
          changed |= uf.unite(fwd, d);
          d = uf.find(d);
          s = uf.find(s);
        }
        std::size_t& bwd = table[d * slots + 2 * e.gen + 1];
        if (bwd == none) {
          bwd = s;
        } else if (uf.find(bwd) != s) {
          changed |= uf.unite(bwd, s);
        }
      }
    }

    // Adjacency on representatives.
    std::vector<std::vector<std::size_t>> adj(
        vertex_count, std::vector<std::size_t>(slots, none));
    for (auto const& e : input) {
      std::size_t s = uf.find(e.src), d = uf.find(e.dst);
      adj[s][2 * e.gen]     = d;
      adj[d][2 * e.gen + 1] = s;
    }
    base = uf.find(base);

    // Restrict to the base component.
    std::vector<bool> alive(vertex_count, false);
    {
      std::queue<std::size_t> q;
      alive[base] = true;
      q.push(base);
      while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t t : adj[v]) {
          if (t != none && !alive[t]) {
            alive[t] = true;
            q.push(t);
          }
        }
      }
    }

    // Core: repeatedly drop non-base vertices of degree <= 1. A loop
    // contributes 2 to the degree.
    auto degree = [&](std::size_t v) {
      std::size_t d = 0;
      for (std::size_t t : adj[v]) {
        d += (t != none && alive[t]);
      }
      return d;
    };
    {
      std::queue<std::size_t> q;
      for (std::size_t v = 0; v < vertex_count; ++v) {
        if (alive[v] && v != base && degree(v) <= 1) {
          q.push(v);
        }
      }
      while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        if (!alive[v]) {
          continue;
        }
        alive[v] = false;
        for (std::size_t t : adj[v]) {
          if (t != none && alive[t] && t != base && degree(t) <= 1) {
            q.push(t);
          }
        }
      }
    }

    // Canonical breadth-first renumbering.
    SubgroupGraph result(rank);
    std::vector<std::size_t> number(vertex_count, none);
    std::vector<std::size_t> order{base};
    number[base] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t s = 0; s < slots; ++s) {
        std::size_t t = adj[order[i]][s];
        if (t != none && alive[t] && number[t] == none) {
          number[t] = order.size();
          order.push_back(t);
        }
      }
    }
    result._next.assign(order.size(), std::vector<std::size_t>(slots, none));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t s = 0; s < slots; ++s) {
        std::size_t t = adj[order[i]][s];
        if (t != none && alive[t]) {
          result._next[i][s] = number[t];
        }
      }
    }
    return result;
  }

  SubgroupGraph build_subgroup_graph(std::span<Word const> words,
                                     std::size_t           rank) {
    std::vector<GraphEdge> edges;
    std::size_t            vertices = 1;
    for (auto const& w : words) {
      if (w.empty()) {
        continue;
      }
      // Petal: base -> fresh vertices -> base.
      std::size_t prev = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Letter      l    = w[i];
        std::size_t next = (i + 1 == w.size()) ? 0 : vertices++;
        if (l.gen >= rank) {
          throw ParseError("generator out of range in subgroup word");
        }
        if (l.sign > 0) {
          edges.push_back({prev, l.gen, next});
        } else {
          edges.push_back({next, l.gen, prev});
        }
        prev = next;
      }
    }
    auto result = SubgroupGraph::from_edges(rank, vertices, edges, 0);
    result._generators.assign(words.begin(), words.end());
    return result;
  }

  bool contains(SubgroupGraph const& graph, Word const& w) {
    std::size_t v = 0;
    for (Letter l : w) {
      if (l.gen >= graph.rank_of_free_group()) {
        return false;
      }
      auto t = graph.follow(v, l);
      if (!t) {
        return false;
      }
      v = *t;
    }
    return v == 0;
  }

  namespace {
    struct SpanningTree {
      std::vector<Word>                    path;       // base -> v
      std::vector<std::vector<bool>>       tree_edge;  // [src][gen]
      std::vector<std::vector<std::size_t>> basis_index;  // [src][gen]
      std::vector<Word>                    basis;
    };

    SpanningTree spanning_tree(SubgroupGraph const& graph) {
      std::size_t const n    = graph.vertex_count();
      std::size_t const rank = graph.rank_of_free_group();
      SpanningTree      tree;
      tree.path.assign(n, Word());
      tree.tree_edge.assign(n, std::vector<bool>(rank, false));
      tree.basis_index.assign(n, std::vector<std::size_t>(rank, 0));
      std::vector<bool> seen(n, false);
      std::queue<std::size_t> q;
      seen[0] = true;
      q.push(0);
      while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t s = 0; s < 2 * rank; ++s) {
          Letter l = Letter::from_slot(s);
          auto   t = graph.follow(v, l);
          if (t && !seen[*t]) {
            seen[*t]     = true;
            tree.path[*t] = tree.path[v] * Word(l);
            if (l.sign > 0) {
              tree.tree_edge[v][l.gen] = true;
            } else {
              tree.tree_edge[*t][l.gen] = true;
            }
            q.push(*t);
          }
        }
      }
      for (auto const& e : graph.edges()) {
        if (!tree.tree_edge[e.src][e.gen]) {
          tree.basis_index[e.src][e.gen] = tree.basis.size();
          tree.basis.push_back(tree.path[e.src] * gen(e.gen)
                               * tree.path[e.dst].inverse());
        }
      }
      return tree;
    }
  }  // namespace

  SubgroupBasis basis(SubgroupGraph const& graph) {
    auto tree = spanning_tree(graph);
    return {graph.edge_count() + 1 - graph.vertex_count(),
            std::move(tree.basis)};
  }

  std::optional<Word> rewrite_in_basis(SubgroupGraph const& graph,
                                       Word const&          w) {
    if (!contains(graph, w)) {
      return std::nullopt;
    }
    auto const          tree = spanning_tree(graph);
    std::vector<Letter> letters;
    std::size_t         v = 0;
    for (Letter l : w) {
      std::size_t t = *graph.follow(v, l);
      // The positively oriented edge traversed.
      std::size_t src = l.sign > 0 ? v : t;
      if (!tree.tree_edge[src][l.gen]) {
        letters.push_back(
            Letter{static_cast<std::uint32_t>(tree.basis_index[src][l.gen]),
                   l.sign});
      }
      v = t;
    }
    return Word(std::span<Letter const>(letters));
  }

  SubgroupGraph intersect(SubgroupGraph const& g1, SubgroupGraph const& g2) {
    std::size_t const rank = g1.rank_of_free_group();
    if (g2.rank_of_free_group() != rank) {
      throw DomainError("intersect: graphs over different free groups");
    }
    std::size_t const n2 = g2.vertex_count();
    std::vector<std::size_t> id(g1.vertex_count() * n2,
                                static_cast<std::size_t>(-1));
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
    std::vector<GraphEdge> edges;
    id[0] = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      for (std::size_t s = 0; s < 2 * rank; ++s) {
        Letter l  = Letter::from_slot(s);
        auto   ta = g1.follow(a, l);
        auto   tb = g2.follow(b, l);
        if (!ta || !tb) {
          continue;
        }
        std::size_t& slot = id[*ta * n2 + *tb];
        if (slot == static_cast<std::size_t>(-1)) {
          slot = pairs.size();
          pairs.emplace_back(*ta, *tb);
        }
        if (l.sign > 0) {
          edges.push_back({i, l.gen, slot});
        }
      }
    }
    return SubgroupGraph::from_edges(rank, pairs.size(), edges, 0);
  }

  bool is_malnormal(SubgroupGraph const& graph) {
    std::size_t const n    = graph.vertex_count();
    std::size_t const rank = graph.rank_of_free_group();
    UnionFind         uf(n * n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (from, to)
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t g = 0; g < rank; ++g) {
          Letter l{static_cast<std::uint32_t>(g), 1};
          auto   ta = graph.follow(a, l);
          auto   tb = graph.follow(b, l);
          if (ta && tb) {
            edges.emplace_back(a * n + b, *ta * n + *tb);
            uf.unite(a * n + b, *ta * n + *tb);
          }
        }
      }
    }
    std::vector<long> euler(n * n, 0);  // edges - vertices per component
    for (std::size_t v = 0; v < n * n; ++v) {
      euler[uf.find(v)] -= 1;
    }
    for (auto const& e : edges) {
      euler[uf.find(e.first)] += 1;
    }
    std::size_t const diagonal = uf.find(0);
    for (std::size_t v = 0; v < n * n; ++v) {
      if (uf.find(v) == v && v != diagonal && euler[v] + 1 > 0) {
        return false;
      }
    }
    return true;
  }

  bool is_whole_group(SubgroupGraph const& graph) {
    if (graph.vertex_count() != 1) {
      return false;
    }
    for (std::size_t g = 0; g < graph.rank_of_free_group(); ++g) {
      if (!graph.follow(0, Letter{static_cast<std::uint32_t>(g), 1})) {
        return false;
      }
    }
    return true;
  }

}  // namespace cgt
