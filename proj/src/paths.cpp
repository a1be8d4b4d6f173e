#include "coinc/paths.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace coinc {

PLPath::PLPath(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidInput("a path needs at least two vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i].space() == vertices_[0].space())) throw InvalidInput("path vertices live in different spaces");
    if (vertices_[i] == vertices_[i - 1])
      throw InvalidInput("path vertices " + std::to_string(i - 1) + " and " + std::to_string(i) + " coincide");
  }
}

PLPath PLPath::reversed() const { return PLPath(std::vector<Point>(vertices_.rbegin(), vertices_.rend())); }

PLPath PLPath::then(const PLPath& next) const {
  if (!(vertices_.back() == next.vertices_.front())) throw InvalidInput("concatenated paths do not share an endpoint");
  std::vector<Point> v = vertices_;
  v.insert(v.end(), next.vertices_.begin() + 1, next.vertices_.end());
  return PLPath(std::move(v));
}

namespace {

template <typename Map>
PLPath map_vertices(const PLPath& path, const Map& m) {
  std::vector<Point> v;
  v.reserve(path.vertices().size());
  for (const auto& p : path.vertices()) v.push_back(apply_isometry(p, m));
  return PLPath(std::move(v));
}

// Segment parameter in [0,1] where p + t (q - p) meets the flat, if any.
std::optional<Scalar> segment_hit(const Flat& f, const Vector& p, const Vector& q) {
  const RationalMatrix& e = f.equations();
  const Vector u = e * p;
  const Vector v = e * subtract(q, p);
  std::optional<Scalar> t;
  for (std::size_t r = 0; r < v.size() && !t; ++r)
    if (v[r] != 0) t = Scalar(-u[r] / v[r]);
  if (!t) {
    if (is_zero(u)) return Scalar(0);
    return std::nullopt;
  }
  if (*t < 0 || *t > 1) return std::nullopt;
  for (std::size_t r = 0; r < u.size(); ++r)
    if (u[r] + *t * v[r] != 0) return std::nullopt;
  return t;
}

}  // namespace

PLPath transform(const PLPath& path, const OrthogonalMap& m) { return map_vertices(path, m); }
PLPath transform(const PLPath& path, const TranslationVector& t) { return map_vertices(path, t); }
PLPath transform(const PLPath& path, const Scale& s) { return map_vertices(path, s); }

std::optional<Collision> validate_path(const PLPath& path, const Arrangement& a) {
  if (!(path.space() == a.space)) throw InvalidInput("path and arrangement live in different spaces");
  const auto& v = path.vertices();
  for (std::size_t s = 0; s + 1 < v.size(); ++s)
    for (std::size_t i = 0; i < a.atoms.size(); ++i)
      if (auto t = segment_hit(a.atoms[i], v[s].coords(), v[s + 1].coords())) return Collision{s, i, *t};
  return std::nullopt;
}

WindingVector operator+(const WindingVector& a, const WindingVector& b) {
  if (a.entries.size() != b.entries.size()) throw InvalidInput("winding vectors of different length");
  WindingVector out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
  return out;
}

WindingVector operator-(const WindingVector& a) {
  WindingVector out = a;
  for (auto& e : out.entries) e = -e;
  return out;
}

NormalFrame normal_frame(const Flat& f) {
  if (f.codim() != 2) throw InvalidInput("normal frame needs a codimension-two flat, " + f.label() + " has codim " +
                                         std::to_string(f.codim()));
  const std::size_t n = f.space().total_dim();
  const RationalMatrix p = projector(Subspace::span(n, [&] {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < f.equations().rows(); ++r) rows.push_back(f.equations().row(r));
    return rows;
  }()));
  NormalFrame frame;
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = p.col(i);
    if (is_zero(col)) continue;
    if (frame.first.empty()) {
      frame.first = std::move(col);
      continue;
    }
    const Scalar coef = dot(col, frame.first) / dot(frame.first, frame.first);
    Vector orth = subtract(col, scaled(frame.first, coef));
    if (is_zero(orth)) continue;
    frame.second = std::move(orth);
    break;
  }
  return frame;
}

std::pair<Scalar, Scalar> frame_coordinates(const NormalFrame& frame, const Vector& x) {
  return {dot(x, frame.first), dot(x, frame.second)};
}

std::int64_t planar_winding(const std::vector<std::pair<Scalar, Scalar>>& polygon) {
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& [u, v] = polygon[i];
    if (u == 0 && v == 0) throw CollisionError("vertex " + std::to_string(i) + " lies on the flat");
    if (v == 0 && u > 0) throw GeneralPositionError("vertex " + std::to_string(i) + " lies on the reference ray");
  }
  std::int64_t w = 0;
  for (std::size_t i = 0; i + 1 < polygon.size(); ++i) {
    const auto& [au, av] = polygon[i];
    const auto& [bu, bv] = polygon[i + 1];
    // Orientation of the origin relative to the directed edge a -> b.
    const Scalar side = (bu - au) * (-av) - (-au) * (bv - av);
    if (side == 0 && (au * bu + av * bv) <= 0)
      throw CollisionError("edge " + std::to_string(i) + " passes through the flat");
    if (av <= 0) {
      if (bv > 0 && side > 0) ++w;
    } else if (bv <= 0 && side < 0) {
      --w;
    }
  }
  return w;
}

WindingVector winding_vector(const PLPath& loop, const Arrangement& a) {
  if (!loop.closed()) throw InvalidInput("winding needs a closed loop (last vertex must repeat the first)");
  for (const auto& atom : a.atoms)
    if (atom.codim() != 2)
      throw InvalidInput("winding needs codimension-two atoms; " + atom.label() + " has codim " +
                         std::to_string(atom.codim()));
  if (auto hit = validate_path(loop, a))
    throw CollisionError("segment " + std::to_string(hit->segment) + " meets " + a.atoms[hit->atom].label() +
                         " at t=" + to_string(hit->parameter));
  WindingVector out;
  for (const auto& atom : a.atoms) {
    const NormalFrame frame = normal_frame(atom);
    std::vector<std::pair<Scalar, Scalar>> polygon;
    polygon.reserve(loop.vertices().size());
    for (const auto& p : loop.vertices()) polygon.push_back(frame_coordinates(frame, p.coords()));
    try {
      out.entries.push_back(planar_winding(polygon));
    } catch (const GeneralPositionError& e) {
      throw GeneralPositionError(std::string(e.what()) + " of " + atom.label());
    }
  }
  return out;
}

std::int64_t pairwise_winding_2d(const PLPath& loop, int i, int j) {
  const auto& space = loop.space();
  if (space.space_dim() != 2) throw InvalidInput("pairwise winding needs d = 2");
  if (!loop.closed()) throw InvalidInput("winding needs a closed loop (last vertex must repeat the first)");
  const Arrangement pairs = build_coincidence_arrangement(space, 2);
  if (auto hit = validate_path(loop, pairs))
    throw CollisionError("segment " + std::to_string(hit->segment) + " meets " + pairs.atoms[hit->atom].label());
  const Flat f = pair_flat(space, i, j);
  std::vector<std::pair<Scalar, Scalar>> polygon;
  for (const auto& p : loop.vertices()) {
    const auto xi = p.particle(i);
    const auto xj = p.particle(j);
    polygon.emplace_back(xi[0] - xj[0], xi[1] - xj[1]);
  }
  try {
    return planar_winding(polygon);
  } catch (const GeneralPositionError& e) {
    throw GeneralPositionError(std::string(e.what()) + " of " + f.label());
  }
}

int frame_orientation(const OrthogonalMap& m, const Flat& from, const Flat& to) {
  std::vector<Vector> image;
  for (const auto& v : from.subspace().basis()) image.push_back(m.matrix() * v);
  if (!Subspace::span(from.space().total_dim(), image).same_span(to.subspace()))
    throw InvalidInput("map does not carry " + from.label() + " onto " + to.label());
  const NormalFrame src = normal_frame(from);
  const NormalFrame dst = normal_frame(to);
  const Vector a1 = m.matrix() * src.first;
  const Vector a2 = m.matrix() * src.second;
  const Scalar det = dot(a1, dst.first) * dot(a2, dst.second) - dot(a1, dst.second) * dot(a2, dst.first);
  return det > 0 ? 1 : -1;
}

PLPath read_path_csv(const ConfigurationSpace& space, std::istream& in) {
  std::vector<Point> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      vertices.emplace_back(space, parse_scalar_list(line));
    } catch (const InvalidInput& e) {
      throw InvalidInput("path line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return PLPath(std::move(vertices));
}

void write_path_csv(const PLPath& path, std::ostream& out) {
  for (const auto& p : path.vertices()) out << format_point(p) << '\n';
}

}  // namespace coinc
