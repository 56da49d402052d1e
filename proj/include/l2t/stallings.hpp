#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "l2t/hom.hpp"
#include "l2t/word.hpp"

namespace l2t {

// Folded core graph of a finitely generated subgroup of a free group:
// deterministic in both directions (at most one outgoing and one incoming
// edge per label at each vertex), connected, with no degree-1 vertices other
// than the base.
struct CoreGraph {
  struct Edge {
    int from = 0, to = 0, label = 1;  // label in [1..rank]
    bool operator==(const Edge&) const = default;
  };

  int rank = 0;
  int base = 0;
  int num_vertices = 0;
  std::vector<Edge> edges;  // sorted canonically after construction

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Subgroup rank: E - V + 1 for a connected graph.
  int subgroup_rank() const { return edge_count() - num_vertices + 1; }
};

// Wedge of loops at the base, folded to completion and trimmed of degree-1
// non-base vertices. The base-to-base loop language is the subgroup
// generated by the words.
CoreGraph build_core(const std::vector<Word>& words, int rank);

// True iff w reads a base-to-base loop.
bool membership(const Word& w, const CoreGraph& g);

// Canonical form under base-pointed labeled isomorphism (BFS relabeling);
// equal canonical graphs iff isomorphic.
CoreGraph canonical_form(const CoreGraph& g);

// All pairwise-distinct folded graphs obtained by identifying vertices and
// folding; every quotient's subgroup contains the graph's subgroup.
// Throws std::length_error if the graph exceeds vertex_cap.
std::vector<CoreGraph> algebraic_quotients(const CoreGraph& g, int vertex_cap = 12);

// True iff no folded quotient has rank strictly below the subgroup's rank.
bool is_compressed(const CoreGraph& g, int vertex_cap = 12);
bool is_compressed(const FreeHom& phi, int vertex_cap = 12);

bool is_injective(const FreeHom& phi);
bool is_isomorphism(const FreeHom& phi);

// Exact weak-isomorphism decision for the Fox Jacobian of phi: equal ranks,
// injective, and compressed image. nullopt when the compressedness
// enumeration exceeds the vertex cap.
std::optional<bool> decide_weak_iso(const FreeHom& phi, int vertex_cap = 12);

}  // namespace l2t
