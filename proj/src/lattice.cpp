#include "coinc/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace coinc {

IntersectionLattice::IntersectionLattice(ConfigurationSpace space, int order_k, std::vector<ParticlePartition> nodes)
    : space_(space), order_k_(order_k), nodes_(std::move(nodes)) {
  const auto bottom = ParticlePartition::singletons(space_.n_particles());
  std::erase(nodes_, bottom);
  nodes_.push_back(bottom);
  std::sort(nodes_.begin(), nodes_.end(), [](const auto& a, const auto& b) {
    if (a.excess() != b.excess()) return a.excess() < b.excess();
    return a.non_singleton_blocks() < b.non_singleton_blocks();
  });
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());

  const std::size_t n = nodes_.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i].n() != space_.n_particles()) throw InvalidInput("lattice node has the wrong particle count");
    codims_.push_back(space_.space_dim() * nodes_[i].excess());
    labels_.push_back(nodes_[i].labels());
    std::vector<int> rep(static_cast<std::size_t>(space_.n_particles()));
    for (const auto& b : nodes_[i].blocks())
      for (int e : b) rep[static_cast<std::size_t>(e - 1)] = b.front() - 1;
    reps_.push_back(std::move(rep));
    index.emplace(labels_.back(), i);
  }

  for (std::size_t i = 1; i < n; ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (leq(j, i)) minimal = false;
    if (minimal) atoms_.push_back(i);
  }

  // Every cover of x is x joined with a single atom (the lattice is atomistic).
  covers_.resize(n);
  covers_[0] = atoms_;
  for (std::size_t x = 1; x < n; ++x) {
    std::set<std::size_t> candidates;
    for (std::size_t a : atoms_) {
      if (leq(a, x)) continue;
      const auto it = index.find(nodes_[x].join(nodes_[a]).labels());
      if (it == index.end()) throw InvalidInput("lattice is not closed under joins with atoms");
      candidates.insert(it->second);
    }
    for (std::size_t y : candidates) {
      bool minimal = true;
      for (std::size_t z : candidates)
        if (z != y && leq(z, y)) {
          minimal = false;
          break;
        }
      if (minimal) covers_[x].push_back(y);
    }
  }

  heights_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : covers_[x]) heights_[y] = std::max(heights_[y], heights_[x] + 1);
  mobius_ = coinc::mobius(*this);
}

bool IntersectionLattice::leq(std::size_t x, std::size_t y) const {
  const auto& lab = labels_[y];
  const auto& rep = reps_[x];
  for (std::size_t i = 0; i < lab.size(); ++i)
    if (lab[i] != lab[static_cast<std::size_t>(rep[i])]) return false;
  return true;
}

std::optional<std::size_t> IntersectionLattice::index_of(const ParticlePartition& p) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p, [](const auto& a, const auto& b) {
    if (a.excess() != b.excess()) return a.excess() < b.excess();
    return a.non_singleton_blocks() < b.non_singleton_blocks();
  });
  if (it == nodes_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t IntersectionLattice::top() const {
  for (std::size_t x = nodes_.size(); x-- > 0;)
    if (covers_[x].empty()) return x;
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionLattice::covering_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < covers_.size(); ++x)
    for (std::size_t y : covers_[x]) out.emplace_back(x, y);
  return out;
}

void LatticeCaps::check(int n, int k) const {
  const int cap = k == 2 ? max_particles_pairwise : max_particles_higher;
  if (n > cap)
    throw CapExceeded("lattice for N=" + std::to_string(n) + ", k=" + std::to_string(k) + " exceeds the cap N <= " +
                      std::to_string(cap));
}

IntersectionLattice build_lattice(const Arrangement& a, const LatticeCaps& caps) {
  caps.check(a.space.n_particles(), a.order_k);
  std::set<ParticlePartition> found;
  std::deque<ParticlePartition> queue;
  for (const auto& atom : a.atoms)
    if (found.insert(atom.partition()).second) queue.push_back(atom.partition());
  while (!queue.empty()) {
    const ParticlePartition x = queue.front();
    queue.pop_front();
    for (const auto& atom : a.atoms) {
      ParticlePartition j = x.join(atom.partition());
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  IntersectionLattice l(a.space, a.order_k, std::vector<ParticlePartition>(found.begin(), found.end()));
  return l;
}

std::vector<std::int64_t> mobius(const IntersectionLattice& l) {
  std::vector<std::int64_t> mu(l.size(), 0);
  if (mu.empty()) return mu;
  mu[0] = 1;
  // Nodes are sorted by codimension, so every y < x precedes x.
  for (std::size_t x = 1; x < l.size(); ++x) {
    std::int64_t s = 0;
    for (std::size_t y = 0; y < x; ++y)
      if (l.leq(y, x)) s += mu[y];
    mu[x] = -s;
  }
  return mu;
}

std::vector<std::int64_t> characteristic_polynomial(const IntersectionLattice& l) {
  std::vector<std::int64_t> coeffs(l.space().total_dim() + 1, 0);
  const auto& mu = l.mobius().empty() ? mobius(l) : l.mobius();
  for (std::size_t x = 0; x < l.size(); ++x) coeffs[static_cast<std::size_t>(l.dim(x))] += mu[x];
  return coeffs;
}

BigInt evaluate_polynomial(const std::vector<std::int64_t>& coeffs, const BigInt& t) {
  BigInt acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + BigInt(static_cast<long>(coeffs[i]));
  return acc;
}

std::string format_polynomial(const std::vector<std::int64_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int OrderComplex::dimension() const {
  int dim = -1;
  for (const auto& f : facets) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

OrderComplex open_interval_complex(const IntersectionLattice& l, std::size_t x, std::size_t max_facets) {
  if (x == 0) throw InvalidInput("open interval below the bottom element is undefined");
  if (x >= l.size()) throw InvalidInput("lattice node out of range");
  OrderComplex c;
  for (std::size_t y = 1; y < x; ++y)
    if (l.leq(y, x)) c.vertices.push_back(y);

  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t cur) -> void {
    chain.push_back(cur);
    bool extended = false;
    for (std::size_t next : l.covers(cur))
      if (l.less(next, x)) {
        extended = true;
        self(self, next);
      }
    if (!extended) {
      if (c.facets.size() >= max_facets)
        throw CapExceeded("order complex has more than " + std::to_string(max_facets) + " maximal chains");
      c.facets.push_back(chain);
    }
    chain.pop_back();
  };
  for (std::size_t a : l.atoms())
    if (l.less(a, x)) extend(extend, a);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

}  // namespace coinc
