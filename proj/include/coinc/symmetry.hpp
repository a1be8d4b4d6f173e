#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coinc/geometry.hpp"

namespace coinc {

/// Bijection on {1..N}; images()[i-1] is the image of particle i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Cycle i1 -> i2 -> ... -> i1.
  static Permutation cycle(int n, const std::vector<int>& members);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Every permutation of {1..n} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

enum class MapKind { permutation, relative_inversion, uniform_rotation, composite };

std::string to_string(MapKind kind);

/// Exact orthogonal linear map of configuration space.
class OrthogonalMap {
 public:
  /// Throws InvalidInput unless matrix is square of size Nd and orthogonal.
  OrthogonalMap(ConfigurationSpace space, RationalMatrix matrix, MapKind kind,
                std::optional<Permutation> permutation = std::nullopt);

  const ConfigurationSpace& space() const { return space_; }
  const RationalMatrix& matrix() const { return matrix_; }
  MapKind kind() const { return kind_; }
  /// Set only for permutation maps.
  const std::optional<Permutation>& permutation() const { return permutation_; }

  friend OrthogonalMap operator*(const OrthogonalMap& a, const OrthogonalMap& b);

 private:
  ConfigurationSpace space_;
  RationalMatrix matrix_;
  MapKind kind_;
  std::optional<Permutation> permutation_;
};

/// Uniform translation x_i -> x_i + shift of every particle block.
struct TranslationVector {
  Vector shift;
};

/// Uniform scaling x_i -> factor x_i, factor nonzero.
struct Scale {
  Scalar factor;
};

/// Order of a finite group and how it was generated. `name` is set only when
/// the order and the defining relations were checked.
struct GroupDescriptor {
  std::size_t order = 0;
  std::vector<std::string> generators;
  std::optional<std::string> name;
};

/// Caps the size of an enumerated matrix group.
struct GroupCaps {
  std::size_t max_order = 20000;
};

OrthogonalMap permutation_map(const ConfigurationSpace& space, const Permutation& perm);
/// +1 on V_N and -1 on its orthogonal complement.
OrthogonalMap relative_inversion_map(const ConfigurationSpace& space);
/// x_i -> O x_i for a rational orthogonal d x d matrix O.
OrthogonalMap uniform_rotation_map(const ConfigurationSpace& space, const RationalMatrix& rotation);

Point apply_isometry(const Point& p, const OrthogonalMap& m);
Point apply_isometry(const Point& p, const TranslationVector& t);
Point apply_isometry(const Point& p, const Scale& s);

/// Atom permutation induced by a permutation map: result[i] is the index of
/// the image of a.atoms[i].
std::vector<std::size_t> flat_permutation_action(const OrthogonalMap& m, const Arrangement& a);

/// Closure of `generators` under multiplication, breadth first, elements in
/// discovery order starting with the identity. Throws CapExceeded past
/// max_order elements.
std::vector<RationalMatrix> generate_group(const std::vector<RationalMatrix>& generators,
                                           const GroupCaps& caps = {});

/// Matrix of m restricted to the relative space, in the basis returned by
/// relative_subspace(space).
RationalMatrix restrict_to_relative(const OrthogonalMap& m);

/// Generators of the point group: adjacent transpositions then i_perp.
std::vector<OrthogonalMap> point_group_generators(const ConfigurationSpace& space);

/// Point group on the relative space generated by the permutation maps and
/// the relative inversion.
GroupDescriptor point_group_order(const ConfigurationSpace& space, const GroupCaps& caps = {});

/// Orderings of {1..N} ("sectors"), each listing particles by increasing
/// coordinate; indexed as in all_permutations(N).
std::vector<std::vector<int>> sector_orderings(int n);
/// Action of perm on sectors by relabeling: result[s] is the image of sector s.
std::vector<std::size_t> sector_action(const Permutation& perm, int n);

}  // namespace coinc
