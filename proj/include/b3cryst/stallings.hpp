#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace b3cryst {

/// A word over the alphabet {+-1, ..., +-k} of an abstract free group F_k.
using FreeWord = std::vector<int>;
FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);

/// Stallings graph of a finitely generated subgroup of F_k: the wedge of the
/// generator loops, folded to confluence and pruned to its core. After
/// folding no vertex carries two equal-label edges in the same direction, so
/// words trace deterministically.
class SubgroupGraph {
 public:
  SubgroupGraph(int alphabet, const std::vector<FreeWord>& generators);

  int alphabet() const { return alphabet_; }
  int base() const { return base_; }
  int num_vertices() const;
  int num_edges() const;
  /// Edges as (source, label, target) triples, sorted; vertices are numbered
  /// by BFS from the base with label-order tie-breaking, which makes this the
  /// canonical form used for isomorphism checks.
  std::vector<std::tuple<int, int, int>> edges() const;

  /// rank = E - V + 1 of the core graph.
  int rank() const;
  /// Finite iff the graph is complete (every vertex has all 2k directions);
  /// then the index equals the vertex count.
  std::optional<int> index() const;
  bool contains(const FreeWord& w) const;

 private:
  int alphabet_;
  int base_ = 0;
  // canonical adjacency: per vertex, label -> target (out) and label -> source (in)
  std::vector<std::vector<int>> out_, in_;
};

SubgroupGraph build_and_fold(int alphabet, const std::vector<FreeWord>& generators);

/// Certificate that `generators` generate exactly the kernel of the
/// homomorphism F_k -> Z/m_1 x ... x Z/m_k sending the i-th letter to the
/// i-th unit vector: every generator must map to zero and the folded index
/// must equal the target order.
struct KernelCheck {
  bool generators_in_kernel = false;
  std::optional<int> index;
  std::uint64_t target_order = 0;
  int rank = 0;
  bool certified = false;
};

KernelCheck kernel_check(int alphabet, const std::vector<FreeWord>& generators,
                         const std::vector<std::uint64_t>& moduli);

}  // namespace b3cryst
