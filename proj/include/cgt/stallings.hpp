// Finitely generated subgroups of a free group as folded core graphs
// (Stallings graphs): membership, rank and basis, intersection,
// malnormality.

#ifndef CGT_STALLINGS_HPP_
#define CGT_STALLINGS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

  struct GraphEdge {
    std::size_t   src;
    std::uint32_t gen;
    std::size_t   dst;

    friend bool operator==(GraphEdge const&, GraphEdge const&) = default;
  };

  // A folded, connected core graph with base vertex 0.
  //
  // Vertices are numbered by breadth-first traversal from the base, trying
  // letters in (generator, sign) order, so two graphs are label-isomorphic
  // as based graphs iff they compare equal.
  class SubgroupGraph {
   public:
    // The trivial subgroup: a single vertex and no edges.
    explicit SubgroupGraph(std::size_t rank = 0);

    // Folds, trims to the core and renumbers an arbitrary labelled graph.
    // Only the component of `base` is kept.
    static SubgroupGraph from_edges(std::size_t                 rank,
                                    std::size_t                 vertex_count,
                                    std::span<GraphEdge const>  edges,
                                    std::size_t                 base = 0);

    std::size_t rank_of_free_group() const noexcept {
      return _rank;
    }
    std::size_t vertex_count() const noexcept {
      return _next.size();
    }
    std::size_t edge_count() const noexcept;
    // Target of the edge leaving v with letter l, if any.
    std::optional<std::size_t> follow(std::size_t v, Letter l) const;
    // Positively labelled edges, sorted by (src, gen).
    std::vector<GraphEdge> edges() const;

    // Generating words the graph was built from (empty when built from
    // edges).
    std::vector<Word> const& generators() const noexcept {
      return _generators;
    }

    friend bool operator==(SubgroupGraph const& a, SubgroupGraph const& b) {
      return a._rank == b._rank && a._next == b._next;
    }

   private:
    friend SubgroupGraph build_subgroup_graph(std::span<Word const>,
                                              std::size_t);
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t                           _rank = 0;
    std::vector<std::vector<std::size_t>> _next;  // [vertex][letter slot]
    std::vector<Word>                     _generators;
  };

  SubgroupGraph build_subgroup_graph(std::span<Word const> words,
                                     std::size_t           rank);
  inline SubgroupGraph build_subgroup_graph(std::vector<Word> const& words,
                                            std::size_t              rank) {
    return build_subgroup_graph(std::span<Word const>(words), rank);
  }

  bool contains(SubgroupGraph const& graph, Word const& w);

  struct SubgroupBasis {
    std::size_t       rank = 0;
    std::vector<Word> basis;
  };

  // Free basis read off a breadth-first spanning tree: one word per
  // non-tree edge, in edge order.
  SubgroupBasis basis(SubgroupGraph const& graph);

  // Expresses w in the basis returned by basis(graph): the result is a word
  // over basis indices. Absent if w is not in the subgroup.
  std::optional<Word> rewrite_in_basis(SubgroupGraph const& graph,
                                       Word const&          w);

  SubgroupGraph intersect(SubgroupGraph const& g1, SubgroupGraph const& g2);

  // True iff H ∩ H^g = 1 for every g outside H: every component of the
  // fibre product H x H other than the one through (base, base) has rank 0.
  bool is_malnormal(SubgroupGraph const& graph);

  // True iff the graph is the bouquet of all generators, i.e. the subgroup is
  // the whole free group.
  bool is_whole_group(SubgroupGraph const& graph);

}  // namespace cgt

#endif  // CGT_STALLINGS_HPP_
