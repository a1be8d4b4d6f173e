#include "coinc/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace coinc {

ComplementSpec::ComplementSpec(int n, int d, int k) : n_(n), d_(d), k_(k) {
  if (n < 2) throw InvalidInput("need at least two particles, got N=" + std::to_string(n));
  if (d < 1) throw InvalidInput("space dimension must be positive, got d=" + std::to_string(d));
  if (k < 2 || k > n)
    throw InvalidInput("interaction order k=" + std::to_string(k) + " must satisfy 2 <= k <= N=" + std::to_string(n));
}

std::string SectorLabel::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ordering[i]);
  }
  return out;
}

std::string to_string(RegionMethod method) {
  switch (method) {
    case RegionMethod::characteristic_polynomial: return "characteristic-polynomial";
    case RegionMethod::ordering_enumeration: return "ordering-enumeration";
    case RegionMethod::codim_argument: return "codim-argument";
  }
  return "codim-argument";
}

std::size_t ReducedHomology::rank(int degree) const {
  const auto idx = static_cast<std::size_t>(degree + 1);
  return degree >= -1 && idx < ranks.size() ? ranks[idx] : 0;
}

RegionReport zaslavsky_regions(const ComplementSpec& spec, const LatticeCaps& caps) {
  if (spec.defect_codim() != 1)
    throw InvalidInput("region counting needs codimension-one defects (d=1, k=2); use the connectivity report");
  const IntersectionLattice lattice = build_lattice(spec.arrangement(), caps);
  BigInt chi = evaluate_polynomial(characteristic_polynomial(lattice), BigInt(-1));
  if (lattice.space().total_dim() % 2 == 1) chi = -chi;
  return RegionReport{chi, RegionMethod::characteristic_polynomial};
}

std::vector<Sector> enumerate_sectors(int n) {
  const ConfigurationSpace space(n, 1);
  std::vector<Sector> out;
  for (auto& ordering : sector_orderings(n)) {
    Vector coords(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < ordering.size(); ++r) coords[static_cast<std::size_t>(ordering[r] - 1)] = static_cast<long>(r);
    out.push_back(Sector{SectorLabel{std::move(ordering)}, Point(space, std::move(coords))});
  }
  return out;
}

SectorLabel sector_of(const Point& p) {
  if (p.space().space_dim() != 1) throw InvalidInput("ordering sectors exist only for d = 1");
  const int n = p.space().n_particles();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  const auto& x = p.coords();
  auto coord = [&](int i) -> const Scalar& { return x[static_cast<std::size_t>(i - 1)]; };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return coord(a) < coord(b); });

  std::string message;
  for (std::size_t r = 0; r < order.size();) {
    std::size_t e = r + 1;
    while (e < order.size() && coord(order[e]) == coord(order[r])) ++e;
    if (e - r > 1) {
      std::vector<int> group(order.begin() + static_cast<std::ptrdiff_t>(r), order.begin() + static_cast<std::ptrdiff_t>(e));
      std::sort(group.begin(), group.end());
      if (!message.empty()) message += "; ";
      message += "particles {";
      for (std::size_t g = 0; g < group.size(); ++g) message += (g ? "," : "") + std::to_string(group[g]);
      message += "} coincide";
    }
    r = e;
  }
  if (!message.empty()) throw BoundaryError(message);
  return SectorLabel{std::move(order)};
}

SectorGraph sector_adjacency(int n) {
  SectorGraph g;
  std::map<std::vector<int>, std::size_t> index;
  for (auto& ordering : sector_orderings(n)) {
    index.emplace(ordering, g.sectors.size());
    g.sectors.push_back(SectorLabel{std::move(ordering)});
  }
  for (std::size_t s = 0; s < g.sectors.size(); ++s)
    for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(n); ++r) {
      std::vector<int> next = g.sectors[s].ordering;
      std::swap(next[r], next[r + 1]);
      const std::size_t t = index.at(next);
      if (s < t) g.edges.emplace_back(s, t);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

PunctureReport puncture_report(const ComplementSpec& spec) {
  PunctureReport out;
  out.relative_dim = (spec.n() - 1) * spec.d();
  if (spec.defect_codim() != 2 || out.relative_dim != 3)
    throw InvalidInput("puncture report needs codimension-two defects in a 3-dimensional relative space (sphere S^2); "
                       "got codim " + std::to_string(spec.defect_codim()) + ", relative dimension " +
                       std::to_string(out.relative_dim) + " (sphere S^" + std::to_string(out.relative_dim - 1) + ")");
  const Subspace rel = relative_subspace(spec.space());
  std::vector<Subspace> lines;
  for (const auto& atom : spec.arrangement().atoms) {
    Subspace line = intersect(atom.subspace(), rel);
    if (line.dim() != 1) throw Error(atom.label() + " does not restrict to a line in the relative space");
    for (const auto& seen : lines)
      if (seen.same_span(line)) throw Error(atom.label() + " restricts to an already counted line");
    lines.push_back(std::move(line));
    out.line_flats.push_back(atom);
  }
  out.punctures = 2 * static_cast<int>(lines.size());
  out.free_rank = out.punctures - 1;
  return out;
}

namespace {

// Faces of a facet-described simplicial complex, one dimension at a time,
// with cached boundary reductions.
class FaceTable {
 public:
  FaceTable(const OrderComplex& c, const HomologyCaps& caps) : complex_(c), caps_(caps) {
    for (auto& f : complex_.facets) std::sort(f.begin(), f.end());
  }

  int dimension() const { return complex_.dimension(); }

  const std::vector<std::vector<std::size_t>>& faces(int q) {
    auto it = faces_.find(q);
    if (it != faces_.end()) return it->second;
    std::set<std::vector<std::size_t>> found;
    if (q == -1) found.insert(std::vector<std::size_t>{});
    const auto size = static_cast<std::size_t>(q + 1);
    if (q >= 0)
      for (const auto& facet : complex_.facets) {
        if (facet.size() < size) continue;
        std::vector<bool> pick(facet.size(), false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
        do {
          std::vector<std::size_t> face;
          for (std::size_t i = 0; i < facet.size(); ++i)
            if (pick[i]) face.push_back(facet[i]);
          found.insert(std::move(face));
          if (found.size() > caps_.max_faces_per_dim)
            throw CapExceeded("complex has more than " + std::to_string(caps_.max_faces_per_dim) + " faces of dimension " +
                              std::to_string(q));
        } while (std::next_permutation(pick.begin(), pick.end()));
      }
    return faces_.emplace(q, std::vector<std::vector<std::size_t>>(found.begin(), found.end())).first->second;
  }

  // Smith form of the boundary map from q-faces to (q-1)-faces.
  const SmithForm& boundary(int q) {
    auto it = boundaries_.find(q);
    if (it != boundaries_.end()) return it->second;
    SmithForm sf;
    if (q >= 0 && q <= dimension()) {
      const auto& lower = faces(q - 1);
      const auto& upper = faces(q);
      std::map<std::vector<std::size_t>, std::size_t> row_of;
      for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);
      std::vector<SparseEntry> entries;
      for (std::size_t c = 0; c < upper.size(); ++c)
        for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
          std::vector<std::size_t> face = upper[c];
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          entries.push_back({row_of.at(face), c, BigInt(drop % 2 == 0 ? 1 : -1)});
        }
      sf = sparse_smith_normal_form(lower.size(), upper.size(), entries);
    }
    return boundaries_.emplace(q, std::move(sf)).first->second;
  }

  DegreeHomology degree(int q) {
    DegreeHomology out;
    out.degree = q;
    if (q < -1 || q > dimension()) return out;
    const std::size_t faces_q = faces(q).size();
    out.rank = faces_q - boundary(q).rank - boundary(q + 1).rank;
    for (const auto& f : boundary(q + 1).factors)
      if (f != 1) out.torsion.push_back(f);
    return out;
  }

 private:
  OrderComplex complex_;
  HomologyCaps caps_;
  std::map<int, std::vector<std::vector<std::size_t>>> faces_;
  std::map<int, SmithForm> boundaries_;
};

}  // namespace

ReducedHomology reduced_homology_ranks(const OrderComplex& c, const HomologyCaps& caps) {
  FaceTable table(c, caps);
  ReducedHomology out;
  for (int q = -1; q <= table.dimension(); ++q) {
    DegreeHomology h = table.degree(q);
    out.ranks.push_back(h.rank);
    out.torsion.push_back(std::move(h.torsion));
    out.face_counts.push_back(table.faces(q).size());
  }
  return out;
}

DegreeHomology reduced_homology_degree(const OrderComplex& c, int degree, const HomologyCaps& caps) {
  FaceTable table(c, caps);
  return table.degree(degree);
}

BettiReport betti_one(const ComplementSpec& spec, const LatticeCaps& lattice_caps, const HomologyCaps& homology_caps) {
  if (spec.defect_codim() != 2)
    throw InvalidInput("first Betti number evaluation needs codimension-two defects ((d=1,k=3) or (d=2,k=2)), got codim " +
                       std::to_string(spec.defect_codim()));
  const IntersectionLattice lattice = build_lattice(spec.arrangement(), lattice_caps);
  BettiReport out;
  // The interval below x is a product of one k-equal lattice per block, so
  // its homology depends only on the multiset of block sizes.
  std::map<std::vector<std::size_t>, DegreeHomology> by_shape;
  for (std::size_t x = 1; x < lattice.size(); ++x) {
    const int codim = lattice.codim(x);
    BettiContribution c{x, lattice.partition(x), codim, codim - 3, 0, {}};
    // The interval (bottom, x) has dimension height(x) - 2; nothing above it.
    if (c.degree <= lattice.height(x) - 2) {
      std::vector<std::size_t> shape;
      for (const auto& b : c.partition.non_singleton_blocks()) shape.push_back(b.size());
      std::sort(shape.begin(), shape.end());
      auto it = by_shape.find(shape);
      if (it == by_shape.end())
        it = by_shape.emplace(shape, reduced_homology_degree(open_interval_complex(lattice, x), c.degree, homology_caps))
                 .first;
      c.rank = it->second.rank;
      c.torsion = it->second.torsion;
    }
    out.b1 += c.rank;
    out.contributions.push_back(std::move(c));
  }
  return out;
}

std::pair<Point, Point> default_witnesses(const ComplementSpec& spec) {
  const ConfigurationSpace space = spec.space();
  Vector forward(space.total_dim(), 0);
  Vector backward(space.total_dim(), 0);
  for (int i = 1; i <= spec.n(); ++i) {
    forward[space.block_offset(i)] = i - 1;
    backward[space.block_offset(i)] = spec.n() - i;
  }
  return {Point(space, std::move(forward)), Point(space, std::move(backward))};
}

ConnectivityReport connectivity_report(const ComplementSpec& spec, const Point& from, const Point& to,
                                       std::uint64_t seed) {
  if (spec.defect_codim() < 2)
    throw InvalidInput("codimension-one defects disconnect the space; use the region count instead");
  const Arrangement a = spec.arrangement();
  for (const Point* w : {&from, &to}) {
    const auto hits = membership(*w, a);
    if (!hits.empty()) throw BoundaryError("witness (" + format_point(*w) + ") lies on " + a.atoms[hits.front()].label());
  }

  if (!(from == to)) {
    PLPath direct({from, to});
    if (!validate_path(direct, a)) return ConnectivityReport{RegionReport{1, RegionMethod::codim_argument}, direct};
  }

  std::mt19937_64 rng(seed);
  const long range = 2L * spec.n() + 2;
  std::uniform_int_distribution<long> numerator(-range * 4, range * 4);
  std::uniform_int_distribution<long> denominator(1, 4);
  constexpr int max_attempts = 4096;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const int waypoints = 1 + attempt / 64;
    std::vector<Point> vertices{from};
    for (int w = 0; w < waypoints; ++w) {
      Vector coords(from.space().total_dim());
      for (auto& c : coords) {
        c = Scalar(numerator(rng)) / denominator(rng);
      }
      vertices.emplace_back(from.space(), std::move(coords));
    }
    vertices.push_back(to);
    bool distinct = true;
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] == vertices[i - 1]) distinct = false;
    if (!distinct) continue;
    PLPath path(std::move(vertices));
    if (!validate_path(path, a)) return ConnectivityReport{RegionReport{1, RegionMethod::codim_argument}, path};
  }
  throw Error("no certificate path found after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace coinc
