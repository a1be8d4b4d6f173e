#include "coinc/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace coinc {

ConfigurationSpace::ConfigurationSpace(int n_particles, int space_dim) : n_(n_particles), d_(space_dim) {
  if (n_ < 2) throw InvalidInput("need at least two particles, got " + std::to_string(n_));
  if (d_ < 1) throw InvalidInput("space dimension must be positive, got " + std::to_string(d_));
}

std::size_t ConfigurationSpace::block_offset(int particle) const {
  if (particle < 1 || particle > n_) throw InvalidInput("particle index " + std::to_string(particle) + " out of range");
  return static_cast<std::size_t>(particle - 1) * static_cast<std::size_t>(d_);
}

Point::Point(ConfigurationSpace space, Vector coords) : space_(space), coords_(std::move(coords)) {
  if (coords_.size() != space_.total_dim())
    throw InvalidInput("point has " + std::to_string(coords_.size()) + " coordinates, expected " +
                       std::to_string(space_.total_dim()));
}

std::span<const Scalar> Point::particle(int i) const {
  return std::span<const Scalar>(coords_).subspan(space_.block_offset(i), static_cast<std::size_t>(space_.space_dim()));
}

Point operator+(const Point& a, const Point& b) {
  if (!(a.space_ == b.space_)) throw InvalidInput("points live in different spaces");
  return Point(a.space_, add(a.coords_, b.coords_));
}

Point operator-(const Point& a, const Point& b) {
  if (!(a.space_ == b.space_)) throw InvalidInput("points live in different spaces");
  return Point(a.space_, subtract(a.coords_, b.coords_));
}

Point operator*(const Scalar& s, const Point& p) { return Point(p.space_, scaled(p.coords_, s)); }

Point parse_point(const ConfigurationSpace& space, std::string_view text) {
  return Point(space, parse_scalar_list(text));
}

std::string format_point(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coords()[i]);
  }
  return out;
}

ParticlePartition::ParticlePartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1) throw InvalidInput("partition of an empty set");
  std::vector<int> seen(static_cast<std::size_t>(n_), 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidInput("partition has an empty block");
    for (int e : block) {
      if (e < 1 || e > n_) throw InvalidInput("partition element " + std::to_string(e) + " out of range");
      if (seen[static_cast<std::size_t>(e - 1)]++) throw InvalidInput("partition element " + std::to_string(e) + " repeated");
    }
    std::sort(block.begin(), block.end());
  }
  for (int i = 0; i < n_; ++i)
    if (!seen[static_cast<std::size_t>(i)]) throw InvalidInput("partition misses element " + std::to_string(i + 1));
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

ParticlePartition ParticlePartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return ParticlePartition(n, std::move(blocks));
}

ParticlePartition ParticlePartition::with_block(int n, std::vector<int> members) {
  std::vector<bool> in_block(static_cast<std::size_t>(n + 1), false);
  for (int e : members) {
    if (e < 1 || e > n) throw InvalidInput("block element " + std::to_string(e) + " out of range");
    in_block[static_cast<std::size_t>(e)] = true;
  }
  std::vector<std::vector<int>> blocks{std::move(members)};
  for (int i = 1; i <= n; ++i)
    if (!in_block[static_cast<std::size_t>(i)]) blocks.push_back({i});
  return ParticlePartition(n, std::move(blocks));
}

ParticlePartition ParticlePartition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(static_cast<int>(i) + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& [label, block] : groups) blocks.push_back(std::move(block));
  return ParticlePartition(static_cast<int>(labels.size()), std::move(blocks));
}

std::vector<std::vector<int>> ParticlePartition::non_singleton_blocks() const {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_)
    if (b.size() > 1) out.push_back(b);
  return out;
}

std::vector<int> ParticlePartition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int e : blocks_[b]) out[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
  return out;
}

int ParticlePartition::excess() const {
  int s = 0;
  for (const auto& b : blocks_) s += static_cast<int>(b.size()) - 1;
  return s;
}

bool ParticlePartition::refines(const ParticlePartition& coarser) const {
  if (coarser.n_ != n_) throw InvalidInput("partitions of different sets");
  const auto lab = coarser.labels();
  for (const auto& b : blocks_)
    for (int e : b)
      if (lab[static_cast<std::size_t>(e - 1)] != lab[static_cast<std::size_t>(b.front() - 1)]) return false;
  return true;
}

ParticlePartition ParticlePartition::join(const ParticlePartition& other) const {
  if (other.n_ != n_) throw InvalidInput("partitions of different sets");
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](const ParticlePartition& p) {
    for (const auto& b : p.blocks_)
      for (int e : b) {
        const int ra = find(b.front() - 1);
        const int rb = find(e - 1);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
  };
  unite(*this);
  unite(other);
  std::vector<int> labels(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) labels[static_cast<std::size_t>(i)] = find(i);
  return from_labels(labels);
}

ParticlePartition ParticlePartition::relabeled(std::span<const int> images) const {
  if (images.size() != static_cast<std::size_t>(n_)) throw InvalidInput("relabeling has wrong size");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int e : b) nb.push_back(images[static_cast<std::size_t>(e - 1)]);
    blocks.push_back(std::move(nb));
  }
  return ParticlePartition(n_, std::move(blocks));
}

std::string ParticlePartition::label() const {
  const auto blocks = non_singleton_blocks();
  if (blocks.empty()) return "X";
  std::string out = "V_";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (int e : blocks[b]) out += std::to_string(e);
  }
  return out;
}

std::string ParticlePartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

Flat::Flat(ConfigurationSpace space, ParticlePartition partition)
    : space_(space), partition_(std::move(partition)) {
  if (partition_.n() != space_.n_particles()) throw InvalidInput("partition size does not match particle count");
  const auto d = static_cast<std::size_t>(space_.space_dim());
  equations_ = RationalMatrix(static_cast<std::size_t>(partition_.excess()) * d, space_.total_dim());
  std::size_t row = 0;
  for (const auto& b : partition_.blocks()) {
    const std::size_t rep = space_.block_offset(b.front());
    for (std::size_t m = 1; m < b.size(); ++m) {
      const std::size_t other = space_.block_offset(b[m]);
      for (std::size_t c = 0; c < d; ++c, ++row) {
        equations_(row, rep + c) = 1;
        equations_(row, other + c) = -1;
      }
    }
  }
}

Subspace Flat::subspace() const { return kernel_basis(equations_); }

bool Flat::contains(const Point& p) const {
  if (!(p.space() == space_)) throw InvalidInput("point and flat live in different spaces");
  for (const auto& b : partition_.blocks()) {
    const auto rep = p.particle(b.front());
    for (std::size_t m = 1; m < b.size(); ++m)
      if (!std::equal(rep.begin(), rep.end(), p.particle(b[m]).begin())) return false;
  }
  return true;
}

std::optional<std::size_t> Arrangement::index_of(const ParticlePartition& p) const {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].partition() == p) return i;
  return std::nullopt;
}

Flat pair_flat(const ConfigurationSpace& space, int i, int j) {
  const int n = space.n_particles();
  if (i < 1 || j < 1 || i > n || j > n) throw InvalidInput("pair index out of range");
  if (i == j) throw InvalidInput("pair flat needs two distinct particles");
  return Flat(space, ParticlePartition::with_block(n, {std::min(i, j), std::max(i, j)}));
}

Flat partition_flat(const ConfigurationSpace& space, const ParticlePartition& partition) {
  return Flat(space, partition);
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Arrangement build_coincidence_arrangement(const ConfigurationSpace& space, int k) {
  const int n = space.n_particles();
  if (k < 2 || k > n)
    throw InvalidInput("interaction order k=" + std::to_string(k) + " must satisfy 2 <= k <= N=" + std::to_string(n));
  Arrangement a{space, k, {}};
  for (auto& subset : k_subsets(n, k)) a.atoms.emplace_back(space, ParticlePartition::with_block(n, std::move(subset)));
  return a;
}

std::vector<std::size_t> membership(const Point& p, const Arrangement& a) {
  if (!(p.space() == a.space)) throw InvalidInput("point and arrangement live in different spaces");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    if (a.atoms[i].contains(p)) out.push_back(i);
  return out;
}

Scalar hyperradius_sq(const Point& p) {
  const int n = p.space().n_particles();
  const int d = p.space().space_dim();
  auto particle_dot = [&](int i, int j) {
    Scalar s = 0;
    const auto xi = p.particle(i);
    const auto xj = p.particle(j);
    for (int c = 0; c < d; ++c) s += xi[static_cast<std::size_t>(c)] * xj[static_cast<std::size_t>(c)];
    return s;
  };
  Scalar squares = 0;
  Scalar cross = 0;
  for (int i = 1; i <= n; ++i) {
    squares += particle_dot(i, i);
    for (int j = i + 1; j <= n; ++j) cross += particle_dot(i, j);
  }
  return (Scalar(n - 1) * squares - 2 * cross) / n;
}

Subspace coincidence_subspace(const ConfigurationSpace& space) {
  std::vector<int> all(static_cast<std::size_t>(space.n_particles()));
  std::iota(all.begin(), all.end(), 1);
  return partition_flat(space, ParticlePartition(space.n_particles(), {all})).subspace();
}

Subspace relative_subspace(const ConfigurationSpace& space) {
  return orthogonal_complement(coincidence_subspace(space));
}

RelativeSplit cm_relative_split(const Point& p) {
  const Point cm(p.space(), project_onto(p.coords(), coincidence_subspace(p.space())));
  Point rel = p - cm;
  Scalar rho = dot(rel.coords(), rel.coords());
  return RelativeSplit{cm, std::move(rel), std::move(rho)};
}

int codimension(const Flat& f) { return f.codim(); }

Scalar dihedral_cos_sq(const Flat& f1, const Flat& f2) {
  if (f1.codim() != 1 || f2.codim() != 1)
    throw InvalidInput("dihedral angle needs two codimension-one flats (pair flats with d=1)");
  if (!(f1.space() == f2.space())) throw InvalidInput("flats live in different spaces");
  const Vector n1 = f1.equations().row(0);
  const Vector n2 = f2.equations().row(0);
  const Scalar c = dot(n1, n2);
  return c * c / (dot(n1, n1) * dot(n2, n2));
}

RationalMatrix hyperradius_form(const ConfigurationSpace& space) {
  const int n = space.n_particles();
  const auto d = static_cast<std::size_t>(space.space_dim());
  RationalMatrix q(space.total_dim(), space.total_dim());
  // (N-1)/N on each x_i.x_i term, -1/N split symmetrically for each 2 x_i.x_j.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (std::size_t c = 0; c < d; ++c)
        q(space.block_offset(i) + c, space.block_offset(j) + c) = i == j ? Scalar(Scalar(n - 1) / n) : Scalar(Scalar(-1) / n);
  return q;
}

}  // namespace coinc
