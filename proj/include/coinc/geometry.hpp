#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinc/linalg.hpp"

namespace coinc {

/// N particles in d-dimensional Euclidean space; coordinates are grouped
/// into N consecutive blocks of d ("particle blocks").
class ConfigurationSpace {
 public:
  ConfigurationSpace(int n_particles, int space_dim);

  int n_particles() const { return n_; }
  int space_dim() const { return d_; }
  std::size_t total_dim() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(d_); }

  /// Offset of particle i's block; particles are numbered from 1.
  std::size_t block_offset(int particle) const;

  friend bool operator==(const ConfigurationSpace&, const ConfigurationSpace&) = default;

 private:
  int n_;
  int d_;
};

class Point {
 public:
  Point(ConfigurationSpace space, Vector coords);

  const ConfigurationSpace& space() const { return space_; }
  const Vector& coords() const { return coords_; }
  std::span<const Scalar> particle(int i) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(const Scalar& s, const Point& p);

 private:
  ConfigurationSpace space_;
  Vector coords_;
};

/// Parses comma-separated rational coordinates ("1/2,3,-4/5").
Point parse_point(const ConfigurationSpace& space, std::string_view text);
std::string format_point(const Point& p);

/// Set partition of {1..N} in canonical form: elements ascending within each
/// block, blocks ordered by their minimum.
class ParticlePartition {
 public:
  explicit ParticlePartition(int n, std::vector<std::vector<int>> blocks);

  static ParticlePartition singletons(int n);
  /// One block holding `members`, every other particle a singleton.
  static ParticlePartition with_block(int n, std::vector<int> members);
  /// Builds a partition from a block label per particle (labels[i-1] for
  /// particle i); equal labels share a block.
  static ParticlePartition from_labels(std::span<const int> labels);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<std::vector<int>> non_singleton_blocks() const;

  /// Block index of each particle (entry i-1 for particle i).
  std::vector<int> labels() const;

  /// Sum over blocks of (|B| - 1).
  int excess() const;

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const ParticlePartition& coarser) const;

  /// Finest common coarsening (intersection of the corresponding flats).
  ParticlePartition join(const ParticlePartition& other) const;

  /// Image under the particle relabeling i -> images[i-1].
  ParticlePartition relabeled(std::span<const int> images) const;

  /// "V_123" for one nontrivial block, "V_12|34" for several, "X" for the
  /// all-singletons partition.
  std::string label() const;
  /// "{1,2}{3}" style listing of every block.
  std::string to_string() const;

  friend bool operator==(const ParticlePartition&, const ParticlePartition&) = default;
  friend auto operator<=>(const ParticlePartition&, const ParticlePartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Linear coincidence subspace, identified by its partition. Equations are
/// x_r - x_j = 0 (all d coordinates) for every non-representative j of each
/// block, the representative r being the block minimum.
class Flat {
 public:
  Flat(ConfigurationSpace space, ParticlePartition partition);

  const ConfigurationSpace& space() const { return space_; }
  const ParticlePartition& partition() const { return partition_; }
  const RationalMatrix& equations() const { return equations_; }
  int codim() const { return space_.space_dim() * partition_.excess(); }
  std::string label() const { return partition_.label(); }

  /// The flat as a subspace (kernel of its equations).
  Subspace subspace() const;
  bool contains(const Point& p) const;

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.space_ == b.space_ && a.partition_ == b.partition_;
  }

 private:
  ConfigurationSpace space_;
  ParticlePartition partition_;
  RationalMatrix equations_;
};

/// The k-body coincidence structure V_k: the C(N,k) flats with exactly one
/// non-singleton block, of size k, in lexicographic order of the block.
struct Arrangement {
  ConfigurationSpace space;
  int order_k;
  std::vector<Flat> atoms;

  std::optional<std::size_t> index_of(const ParticlePartition& p) const;
  /// Codimension (k-1)d shared by every atom.
  int atom_codim() const { return (order_k - 1) * space.space_dim(); }
};

struct RelativeSplit {
  Point cm_part;
  Point rel_part;
  Scalar rho_sq;
};

Flat pair_flat(const ConfigurationSpace& space, int i, int j);
Flat partition_flat(const ConfigurationSpace& space, const ParticlePartition& partition);
Arrangement build_coincidence_arrangement(const ConfigurationSpace& space, int k);

/// Indices into a.atoms of the atoms containing p, ascending.
std::vector<std::size_t> membership(const Point& p, const Arrangement& a);

Scalar hyperradius_sq(const Point& p);
RelativeSplit cm_relative_split(const Point& p);
int codimension(const Flat& f);

/// Squared cosine of the angle between two codimension-one flats' normals.
Scalar dihedral_cos_sq(const Flat& f1, const Flat& f2);

/// V_N, the all-particles-coincide line (dimension d).
Subspace coincidence_subspace(const ConfigurationSpace& space);
/// Relative configuration space, the orthogonal complement of V_N.
Subspace relative_subspace(const ConfigurationSpace& space);

/// Symmetric matrix Q with p^T Q p == hyperradius_sq(p), read off the
/// pairwise expression term by term.
RationalMatrix hyperradius_form(const ConfigurationSpace& space);

/// Every k-subset of {1..n}, lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace coinc
