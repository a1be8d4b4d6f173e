#include "coinc/report.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace coinc {

ReportDocument build_report(const ComplementSpec& spec, const ReportOptions& options) {
  ReportDocument doc;
  doc.n = spec.n();
  doc.d = spec.d();
  doc.k = spec.k();
  doc.codim = spec.defect_codim();
  const Arrangement a = spec.arrangement();
  doc.atoms = a.atoms.size();

  const IntersectionLattice lattice = build_lattice(a, options.lattice);
  doc.lattice_nodes = lattice.size();
  doc.lattice_edges = lattice.covering_edges().size();
  doc.characteristic_polynomial = characteristic_polynomial(lattice);

  if (doc.codim == 1) {
    doc.regions = zaslavsky_regions(spec, options.lattice).count;
    doc.sectors = enumerate_sectors(spec.n()).size();
  } else {
    const auto [from, to] = default_witnesses(spec);
    const ConnectivityReport conn = connectivity_report(spec, from, to, options.seed);
    doc.connected = conn.regions.count == 1;
    doc.certificate_segments = conn.certificate.segment_count();
  }
  if (doc.codim == 2) {
    BettiReport betti = betti_one(spec, options.lattice, options.homology);
    doc.b1 = betti.b1;
    for (auto& c : betti.contributions)
      if (c.rank != 0 || !c.torsion.empty()) doc.contributions.push_back(std::move(c));
    if ((spec.n() - 1) * spec.d() == 3) {
      const PunctureReport p = puncture_report(spec);
      doc.punctures = p.punctures;
      doc.free_rank = p.free_rank;
    }
  }
  if (spec.d() == 1) {
    const GroupDescriptor g = point_group_order(spec.space(), options.group);
    doc.point_group_order = g.order;
    doc.point_group_name = g.name;
    doc.point_group_generators = g.generators;
  }
  return doc;
}

void put_integer(nlohmann::json& obj, const std::string& key, const BigInt& value) {
  if (value.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) {
    obj[key] = static_cast<std::int64_t>(value.get_si());
  } else {
    obj[key] = value.get_str();
    obj[key + "_as_string"] = true;
  }
}

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json j = nlohmann::json::object();
  j["N"] = doc.n;
  j["d"] = doc.d;
  j["k"] = doc.k;
  j["codim"] = doc.codim;
  j["atoms"] = doc.atoms;
  j["lattice"] = {{"nodes", doc.lattice_nodes},
                  {"edges", doc.lattice_edges},
                  {"characteristic_polynomial", format_polynomial(doc.characteristic_polynomial)}};
  if (doc.regions) put_integer(j, "regions", *doc.regions);
  if (doc.sectors) j["sectors"] = *doc.sectors;
  if (doc.b1) {
    j["b1"] = *doc.b1;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : doc.contributions) {
      nlohmann::json item = {{"node", c.node},
                             {"partition", c.partition.to_string()},
                             {"codim", c.codim},
                             {"degree", c.degree},
                             {"rank", c.rank}};
      if (!c.torsion.empty()) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& f : c.torsion) t.push_back(f.get_str());
        item["torsion"] = t;
      }
      list.push_back(std::move(item));
    }
    j["contributions"] = std::move(list);
  }
  if (doc.punctures) j["punctures"] = *doc.punctures;
  if (doc.free_rank) j["free_rank"] = *doc.free_rank;
  if (doc.connected) j["connected"] = *doc.connected;
  if (doc.certificate_segments) j["certificate_segments"] = *doc.certificate_segments;
  if (doc.point_group_order) j["point_group_order"] = *doc.point_group_order;
  if (doc.point_group_name) j["point_group_name"] = *doc.point_group_name;
  if (doc.point_group_order) j["point_group_generators"] = doc.point_group_generators;
  return j;
}

nlohmann::json lattice_json(const IntersectionLattice& l) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t x = 0; x < l.size(); ++x)
    nodes.push_back({{"id", x},
                     {"partition", l.partition(x).to_string()},
                     {"label", l.partition(x).label()},
                     {"codim", l.codim(x)},
                     {"height", l.height(x)},
                     {"mobius", l.mobius()[x]}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [x, y] : l.covering_edges()) edges.push_back({x, y});
  return {{"N", l.space().n_particles()},
          {"d", l.space().space_dim()},
          {"k", l.order_k()},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"characteristic_polynomial", characteristic_polynomial(l)}};
}

std::string lattice_dot(const IntersectionLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < l.size(); ++x)
    out << "  n" << x << " [label=\"" << l.partition(x).label() << "\\ncodim " << l.codim(x) << "\\nmu "
        << l.mobius()[x] << "\"];\n";
  for (const auto& [x, y] : l.covering_edges()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json winding_json(const WindingVector& w, const Arrangement& a) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < a.atoms.size(); ++i) j[a.atoms[i].label()] = w.entries.at(i);
  return j;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

namespace {

Scalar abs_value(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

Point3 cross(const Point3& a, const Point3& b) {
  return {Scalar(a[1] * b[2] - a[2] * b[1]), Scalar(a[2] * b[0] - a[0] * b[2]), Scalar(a[0] * b[1] - a[1] * b[0])};
}

Scalar dot3(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Coordinates of a configuration vector in the drawing space.
Point3 view_coordinates(const Vector& x) {
  if (x.size() == 3) return {x[0], x[1], x[2]};
  static const std::array<std::array<int, 4>, 3> axes{{{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  Point3 p;
  for (std::size_t r = 0; r < 3; ++r) {
    Scalar s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += axes[r][i] * x[i];
    p[r] = s / 2;
  }
  return p;
}

std::vector<Point3> clip_line(const Point3& dir, const Scalar& box) {
  Scalar t;
  bool first = true;
  for (const auto& c : dir)
    if (c != 0) {
      Scalar limit = box / abs_value(c);
      if (first || limit < t) t = limit;
      first = false;
    }
  Point3 hi{Scalar(t * dir[0]), Scalar(t * dir[1]), Scalar(t * dir[2])};
  Point3 lo{Scalar(-hi[0]), Scalar(-hi[1]), Scalar(-hi[2])};
  return {lo, hi};
}

// Plane through the origin with normal `normal`, cut by the cube; vertices
// in counterclockwise order seen from the normal side.
std::vector<Point3> clip_plane(const Point3& normal, const Point3& u, const Scalar& box) {
  std::set<Point3> found;
  for (std::size_t free = 0; free < 3; ++free) {
    const std::size_t a = (free + 1) % 3;
    const std::size_t b = (free + 2) % 3;
    for (int sa : {-1, 1})
      for (int sb : {-1, 1}) {
        Point3 p;
        p[a] = sa * box;
        p[b] = sb * box;
        const Scalar rest = normal[a] * p[a] + normal[b] * p[b];
        if (normal[free] != 0) {
          p[free] = -rest / normal[free];
          if (abs_value(p[free]) <= box) found.insert(p);
        } else if (rest == 0) {
          p[free] = box;
          found.insert(p);
          p[free] = -box;
          found.insert(p);
        }
      }
  }
  const Point3 w = cross(normal, u);
  std::vector<Point3> poly(found.begin(), found.end());
  auto half = [&](const Point3& p) {
    const Scalar x = dot3(p, u);
    const Scalar y = dot3(p, w);
    return y > 0 || (y == 0 && x > 0) ? 0 : 1;
  };
  std::sort(poly.begin(), poly.end(), [&](const Point3& p, const Point3& q) {
    const int hp = half(p);
    const int hq = half(q);
    if (hp != hq) return hp < hq;
    const Scalar cr = dot3(p, u) * dot3(q, w) - dot3(p, w) * dot3(q, u);
    return cr > 0;
  });
  return poly;
}

MeshObject clipped(const std::string& name, const Subspace& s, const Scalar& box) {
  std::vector<Point3> basis;
  for (const auto& v : s.basis()) basis.push_back(view_coordinates(v));
  if (basis.size() == 2) return {name, MeshKind::polygon, clip_plane(cross(basis[0], basis[1]), basis[0], box)};
  if (basis.size() == 1) return {name, MeshKind::segment, clip_line(basis[0], box)};
  if (basis.empty()) return {name, MeshKind::point, {Point3{0, 0, 0}}};
  throw InvalidInput(name + " is not drawable in three dimensions");
}

}  // namespace

Mesh build_mesh(int n, int d, int k, const Scalar& box) {
  if (d != 1 || (n != 3 && n != 4))
    throw InvalidInput("mesh export supports N = 3 or 4 with d = 1, got N=" + std::to_string(n) + ", d=" + std::to_string(d));
  if (box <= 0) throw InvalidInput("box half-width must be positive");
  const ComplementSpec spec(n, d, k);
  const ConfigurationSpace space = spec.space();
  const Subspace rel = relative_subspace(space);
  Mesh mesh{n, k, box, {}};
  for (const auto& atom : spec.arrangement().atoms) {
    const Subspace s = n == 3 ? atom.subspace() : intersect(atom.subspace(), rel);
    mesh.objects.push_back(clipped(atom.label(), s, box));
  }
  if (n == 3)
    mesh.objects.push_back(clipped("axis", coincidence_subspace(space), box));
  else
    mesh.objects.push_back(MeshObject{"origin", MeshKind::point, {Point3{0, 0, 0}}});
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  out << "# coincidence structure N=" << mesh.n << " d=1 k=" << mesh.k << " box=" << to_string(mesh.box) << "\n";
  if (mesh.n == 4) out << "# relative coordinates (x.a/2, x.b/2, x.c/2), a=(1,1,-1,-1) b=(1,-1,1,-1) c=(1,-1,-1,1)\n";
  std::size_t next = 1;
  for (const auto& obj : mesh.objects) {
    out << "o " << obj.name << "\n";
    for (const auto& p : obj.vertices)
      out << "v " << to_decimal(p[0]) << " " << to_decimal(p[1]) << " " << to_decimal(p[2]) << "\n";
    const char* tag = obj.kind == MeshKind::polygon ? "f" : obj.kind == MeshKind::segment ? "l" : "p";
    out << tag;
    for (std::size_t i = 0; i < obj.vertices.size(); ++i) out << " " << next + i;
    out << "\n";
    next += obj.vertices.size();
  }
}

}  // namespace coinc
