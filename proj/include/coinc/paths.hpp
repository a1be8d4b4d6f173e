#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coinc/geometry.hpp"
#include "coinc/symmetry.hpp"

namespace coinc {

/// Piecewise-linear path through configuration space.
class PLPath {
 public:
  /// Throws InvalidInput for fewer than two vertices, mixed spaces or
  /// repeated consecutive vertices.
  explicit PLPath(std::vector<Point> vertices);

  const ConfigurationSpace& space() const { return vertices_.front().space(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  bool closed() const { return vertices_.front() == vertices_.back(); }

  PLPath reversed() const;
  /// Concatenation; this path must end where `next` starts.
  PLPath then(const PLPath& next) const;

 private:
  std::vector<Point> vertices_;
};

PLPath transform(const PLPath& path, const OrthogonalMap& m);
PLPath transform(const PLPath& path, const TranslationVector& t);
PLPath transform(const PLPath& path, const Scale& s);

/// First segment/atom contact found by validate_path.
struct Collision {
  std::size_t segment;
  std::size_t atom;
  /// Segment parameter of the contact in [0, 1]; the lowest one when the
  /// whole segment lies in the atom.
  Scalar parameter;
};

/// nullopt when no segment meets any atom; otherwise the first collision in
/// (segment, atom) order.
std::optional<Collision> validate_path(const PLPath& path, const Arrangement& a);

/// Per-atom signed winding numbers of a closed loop around codimension-two
/// atoms, aligned with Arrangement::atoms. A partial, abelian invariant of
/// the loop's homotopy class.
struct WindingVector {
  std::vector<std::int64_t> entries;

  friend WindingVector operator+(const WindingVector& a, const WindingVector& b);
  friend WindingVector operator-(const WindingVector& a);
  friend bool operator==(const WindingVector&, const WindingVector&) = default;
};

/// Ordered rational frame (f1, f2) spanning the normal plane of a
/// codimension-two flat; f2 is orthogonal to f1, neither normalized.
struct NormalFrame {
  Vector first;
  Vector second;
};

NormalFrame normal_frame(const Flat& f);

/// Coordinates (x.f1, x.f2) of a point in the normal frame.
std::pair<Scalar, Scalar> frame_coordinates(const NormalFrame& frame, const Vector& x);

/// Winding number of a closed planar polygon around the origin, counting
/// signed crossings of the positive first axis. Throws GeneralPositionError
/// when a vertex lies on that ray (message names the vertex index) and
/// CollisionError when an edge passes through the origin.
std::int64_t planar_winding(const std::vector<std::pair<Scalar, Scalar>>& polygon);

/// Throws CollisionError for a loop meeting the arrangement, InvalidInput for
/// an open path or an atom that is not codimension two, and
/// GeneralPositionError as planar_winding does.
WindingVector winding_vector(const PLPath& loop, const Arrangement& a);

/// Winding of x_i(t) - x_j(t) around the origin for d = 2.
std::int64_t pairwise_winding_2d(const PLPath& loop, int i, int j);

/// +1 when m carries the normal frame of `from` onto a frame of the normal
/// plane of `to` with the same orientation as normal_frame(to), -1
/// otherwise. Requires m to map `from` onto `to`.
int frame_orientation(const OrthogonalMap& m, const Flat& from, const Flat& to);

/// CSV path format: one vertex per row, Nd comma-separated rationals.
/// Blank lines and lines starting with '#' are skipped.
PLPath read_path_csv(const ConfigurationSpace& space, std::istream& in);
void write_path_csv(const PLPath& path, std::ostream& out);

}  // namespace coinc
