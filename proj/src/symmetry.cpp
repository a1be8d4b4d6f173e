#include "coinc/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace coinc {
namespace {

// "sigma(ij)" listing the moved particles of a permutation.
std::string generator_label(const Permutation& p) {
  std::string moved;
  for (int i = 1; i <= p.n(); ++i)
    if (p(i) != i) moved += std::to_string(i);
  return "sigma(" + moved + ")";
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw InvalidInput("empty permutation");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)]) throw InvalidInput("images do not form a permutation");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) { return cycle(n, {i, j}); }

Permutation Permutation::cycle(int n, const std::vector<int>& members) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t m = 0; m < members.size(); ++m) {
    const int from = members[m];
    if (from < 1 || from > n) throw InvalidInput("cycle element out of range");
    images[static_cast<std::size_t>(from - 1)] = members[(m + 1) % members.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw InvalidInput("composing permutations of different sizes");
  std::vector<int> images(q.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q.images_[i]);
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::permutation: return "permutation";
    case MapKind::relative_inversion: return "relative_inversion";
    case MapKind::uniform_rotation: return "uniform_rotation";
    case MapKind::composite: return "composite";
  }
  return "composite";
}

OrthogonalMap::OrthogonalMap(ConfigurationSpace space, RationalMatrix matrix, MapKind kind,
                             std::optional<Permutation> permutation)
    : space_(space), matrix_(std::move(matrix)), kind_(kind), permutation_(std::move(permutation)) {
  const std::size_t n = space_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) throw InvalidInput("map matrix must be Nd x Nd");
  if (!(matrix_.transpose() * matrix_ == RationalMatrix::identity(n))) throw InvalidInput("map matrix is not orthogonal");
  if (permutation_ && permutation_->n() != space_.n_particles()) throw InvalidInput("permutation size mismatch");
}

OrthogonalMap operator*(const OrthogonalMap& a, const OrthogonalMap& b) {
  if (!(a.space_ == b.space_)) throw InvalidInput("composing maps on different spaces");
  if (a.permutation_ && b.permutation_)
    return OrthogonalMap(a.space_, a.matrix_ * b.matrix_, MapKind::permutation, *a.permutation_ * *b.permutation_);
  return OrthogonalMap(a.space_, a.matrix_ * b.matrix_, MapKind::composite);
}

OrthogonalMap permutation_map(const ConfigurationSpace& space, const Permutation& perm) {
  if (perm.n() != space.n_particles()) throw InvalidInput("permutation size does not match particle count");
  const auto d = static_cast<std::size_t>(space.space_dim());
  RationalMatrix m(space.total_dim(), space.total_dim());
  for (int i = 1; i <= perm.n(); ++i)
    for (std::size_t c = 0; c < d; ++c) m(space.block_offset(perm(i)) + c, space.block_offset(i) + c) = 1;
  return OrthogonalMap(space, std::move(m), MapKind::permutation, perm);
}

OrthogonalMap relative_inversion_map(const ConfigurationSpace& space) {
  const RationalMatrix p = projector(coincidence_subspace(space));
  return OrthogonalMap(space, Scalar(2) * p - RationalMatrix::identity(space.total_dim()), MapKind::relative_inversion);
}

OrthogonalMap uniform_rotation_map(const ConfigurationSpace& space, const RationalMatrix& rotation) {
  const auto d = static_cast<std::size_t>(space.space_dim());
  if (rotation.rows() != d || rotation.cols() != d) throw InvalidInput("rotation must be d x d");
  if (!(rotation.transpose() * rotation == RationalMatrix::identity(d))) throw InvalidInput("rotation is not orthogonal");
  RationalMatrix m(space.total_dim(), space.total_dim());
  for (int i = 1; i <= space.n_particles(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(space.block_offset(i) + r, space.block_offset(i) + c) = rotation(r, c);
  return OrthogonalMap(space, std::move(m), MapKind::uniform_rotation);
}

Point apply_isometry(const Point& p, const OrthogonalMap& m) {
  if (!(p.space() == m.space())) throw InvalidInput("point and map live in different spaces");
  return Point(p.space(), m.matrix() * p.coords());
}

Point apply_isometry(const Point& p, const TranslationVector& t) {
  const auto d = static_cast<std::size_t>(p.space().space_dim());
  if (t.shift.size() != d) throw InvalidInput("translation must have d components");
  Vector coords = p.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += t.shift[i % d];
  return Point(p.space(), std::move(coords));
}

Point apply_isometry(const Point& p, const Scale& s) {
  if (s.factor == 0) throw InvalidInput("scale factor must be nonzero");
  return s.factor * p;
}

std::vector<std::size_t> flat_permutation_action(const OrthogonalMap& m, const Arrangement& a) {
  if (m.kind() != MapKind::permutation || !m.permutation()) throw InvalidInput("flat action needs a permutation map");
  if (!(m.space() == a.space)) throw InvalidInput("map and arrangement live in different spaces");
  std::vector<std::size_t> out;
  out.reserve(a.atoms.size());
  for (const auto& atom : a.atoms) {
    const auto image = a.index_of(atom.partition().relabeled(m.permutation()->images()));
    if (!image) throw InvalidInput("permutation does not preserve the arrangement");
    out.push_back(*image);
  }
  return out;
}

std::vector<RationalMatrix> generate_group(const std::vector<RationalMatrix>& generators, const GroupCaps& caps) {
  if (generators.empty()) throw InvalidInput("group needs at least one generator");
  const std::size_t n = generators.front().rows();
  std::vector<RationalMatrix> elements{RationalMatrix::identity(n)};
  std::set<RationalMatrix> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      RationalMatrix next = g * elements[head];
      if (seen.contains(next)) continue;
      if (elements.size() >= caps.max_order)
        throw CapExceeded("group order exceeds the cap of " + std::to_string(caps.max_order) + " elements");
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

RationalMatrix restrict_to_relative(const OrthogonalMap& m) {
  const RationalMatrix basis = relative_subspace(m.space()).basis_matrix();
  const RationalMatrix bt = basis.transpose();
  return solve(bt * basis, bt * (m.matrix() * basis));
}

std::vector<OrthogonalMap> point_group_generators(const ConfigurationSpace& space) {
  std::vector<OrthogonalMap> gens;
  const int n = space.n_particles();
  for (int i = 1; i < n; ++i) gens.push_back(permutation_map(space, Permutation::transposition(n, i, i + 1)));
  gens.push_back(relative_inversion_map(space));
  return gens;
}

GroupDescriptor point_group_order(const ConfigurationSpace& space, const GroupCaps& caps) {
  const int n = space.n_particles();
  GroupDescriptor out;
  std::vector<RationalMatrix> all;
  std::vector<RationalMatrix> perms;
  for (const auto& g : point_group_generators(space)) {
    all.push_back(restrict_to_relative(g));
    if (g.permutation()) {
      perms.push_back(all.back());
      out.generators.push_back(generator_label(*g.permutation()));
    } else {
      out.generators.push_back("i_perp");
    }
  }
  const auto group = generate_group(all, caps);
  out.order = group.size();

  const auto perm_group = generate_group(perms, caps);
  const RationalMatrix& inv = all.back();
  const auto id = RationalMatrix::identity(inv.rows());
  const bool inv_in_perms = std::find(perm_group.begin(), perm_group.end(), inv) != perm_group.end();
  const bool central = std::all_of(all.begin(), all.end(), [&](const auto& g) { return g * inv == inv * g; });
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  const bool faithful = BigInt(static_cast<unsigned long>(perm_group.size())) == n_fact;
  if (faithful && central && inv * inv == id) {
    if (!inv_in_perms && BigInt(static_cast<unsigned long>(group.size())) == 2 * n_fact) {
      if (space.space_dim() == 1 && n == 3)
        out.name = "D6";
      else if (space.space_dim() == 1 && n == 4)
        out.name = "Oh";
      else
        out.name = "S" + std::to_string(n) + " x Z2";
    } else if (inv_in_perms && n == 2 && group.size() == 2) {
      out.name = "Z2";
    }
  }
  return out;
}

std::vector<std::vector<int>> sector_orderings(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& p : all_permutations(n)) out.push_back(p.images());
  return out;
}

std::vector<std::size_t> sector_action(const Permutation& perm, int n) {
  if (perm.n() != n) throw InvalidInput("permutation size does not match particle count");
  const auto orderings = sector_orderings(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t s = 0; s < orderings.size(); ++s) index.emplace(orderings[s], s);
  std::vector<std::size_t> out;
  out.reserve(orderings.size());
  for (const auto& ord : orderings) {
    std::vector<int> image;
    image.reserve(ord.size());
    for (int particle : ord) image.push_back(perm(particle));
    out.push_back(index.at(image));
  }
  return out;
}

}  // namespace coinc
