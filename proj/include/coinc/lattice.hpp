#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coinc/geometry.hpp"

namespace coinc {

/// Poset of all intersections of an arrangement's atoms, ordered by reverse
/// inclusion of subspaces (equivalently, partition refinement). Node 0 is the
/// bottom element (the full configuration space); nodes are sorted by
/// codimension and then lexicographically by non-singleton blocks.
class IntersectionLattice {
 public:
  IntersectionLattice(ConfigurationSpace space, int order_k, std::vector<ParticlePartition> nodes);

  const ConfigurationSpace& space() const { return space_; }
  int order_k() const { return order_k_; }
  std::size_t size() const { return nodes_.size(); }

  const ParticlePartition& partition(std::size_t node) const { return nodes_[node]; }
  int codim(std::size_t node) const { return codims_[node]; }
  int dim(std::size_t node) const { return static_cast<int>(space_.total_dim()) - codims_[node]; }
  const std::vector<std::int64_t>& mobius() const { return mobius_; }

  /// x <= y: y's subspace is contained in x's.
  bool leq(std::size_t x, std::size_t y) const;
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  std::optional<std::size_t> index_of(const ParticlePartition& p) const;
  const std::vector<std::size_t>& atoms() const { return atoms_; }
  std::size_t top() const;

  /// Elements covering `x`, ascending.
  const std::vector<std::size_t>& covers(std::size_t x) const { return covers_[x]; }
  /// All covering pairs (x, y), x covered by y, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covering_edges() const;

  /// Length of the longest chain from the bottom to x (bottom has 0).
  int height(std::size_t x) const { return heights_[x]; }

 private:
  ConfigurationSpace space_;
  int order_k_;
  std::vector<ParticlePartition> nodes_;
  std::vector<int> codims_;
  std::vector<std::vector<int>> labels_;
  std::vector<std::vector<int>> reps_;
  std::vector<std::size_t> atoms_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<int> heights_;
  std::vector<std::int64_t> mobius_;
};

/// Size limits for lattice-based operations, keyed by interaction order.
struct LatticeCaps {
  int max_particles_pairwise = 8;
  int max_particles_higher = 9;

  /// Throws CapExceeded when (n, k) is beyond the configured limits.
  void check(int n, int k) const;
};

IntersectionLattice build_lattice(const Arrangement& a, const LatticeCaps& caps = {});

/// mu(bottom, x) for every node x.
std::vector<std::int64_t> mobius(const IntersectionLattice& l);

/// Coefficients of chi(t) = sum_x mu(bottom, x) t^dim(x), lowest degree first.
std::vector<std::int64_t> characteristic_polynomial(const IntersectionLattice& l);
BigInt evaluate_polynomial(const std::vector<std::int64_t>& coeffs, const BigInt& t);
std::string format_polynomial(const std::vector<std::int64_t>& coeffs);

/// Simplicial complex given by vertex ids and facets (sorted vertex lists).
/// For order complexes the vertices are lattice nodes and the facets are the
/// maximal chains, listed bottom to top.
struct OrderComplex {
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> facets;

  bool empty() const { return vertices.empty(); }
  /// Largest facet size minus one; -1 for the empty complex.
  int dimension() const;
};

/// Order complex of the open interval (bottom, x). Throws InvalidInput for
/// x == bottom and CapExceeded past max_facets maximal chains.
OrderComplex open_interval_complex(const IntersectionLattice& l, std::size_t x,
                                   std::size_t max_facets = 1'000'000);

}  // namespace coinc
