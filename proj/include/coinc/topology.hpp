#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coinc/lattice.hpp"
#include "coinc/paths.hpp"

namespace coinc {

/// The complement of V_k in the configuration space of N particles in d
/// dimensions.
class ComplementSpec {
 public:
  ComplementSpec(int n, int d, int k);

  int n() const { return n_; }
  int d() const { return d_; }
  int k() const { return k_; }
  /// Codimension (k-1)d of the removed flats.
  int defect_codim() const { return (k_ - 1) * d_; }
  ConfigurationSpace space() const { return ConfigurationSpace(n_, d_); }
  Arrangement arrangement() const { return build_coincidence_arrangement(space(), k_); }

 private:
  int n_;
  int d_;
  int k_;
};

/// Particles listed by increasing coordinate (d = 1).
struct SectorLabel {
  std::vector<int> ordering;

  std::string to_string() const;
  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

enum class RegionMethod { characteristic_polynomial, ordering_enumeration, codim_argument };

std::string to_string(RegionMethod method);

struct RegionReport {
  BigInt count;
  RegionMethod method;
};

struct Sector {
  SectorLabel label;
  Point witness;
};

struct SectorGraph {
  std::vector<SectorLabel> sectors;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct PunctureReport {
  int relative_dim = 0;
  /// Atoms whose restriction to the relative space is a line.
  std::vector<Flat> line_flats;
  int punctures = 0;
  int free_rank = 0;
};

struct BettiContribution {
  std::size_t node;
  ParticlePartition partition;
  int codim;
  /// Reduced-homology degree consulted, codim - 3.
  int degree;
  std::size_t rank;
  /// Invariant factors > 1 in that degree; reported, never added to rank.
  std::vector<BigInt> torsion;
};

struct BettiReport {
  std::size_t b1 = 0;
  std::vector<BettiContribution> contributions;
};

struct ReducedHomology {
  /// ranks[q + 1] is the rank of the reduced homology in degree q >= -1.
  std::vector<std::size_t> ranks;
  /// torsion[q + 1] lists invariant factors > 1 in degree q.
  std::vector<std::vector<BigInt>> torsion;
  /// face_counts[q + 1] is the number of q-faces (one empty face).
  std::vector<std::size_t> face_counts;

  std::size_t rank(int degree) const;
};

struct HomologyCaps {
  /// Largest number of faces enumerated in any single dimension.
  std::size_t max_faces_per_dim = 500000;
};

struct ConnectivityReport {
  RegionReport regions;
  PLPath certificate;
};

RegionReport zaslavsky_regions(const ComplementSpec& spec, const LatticeCaps& caps = {});
std::vector<Sector> enumerate_sectors(int n);
SectorLabel sector_of(const Point& p);
SectorGraph sector_adjacency(int n);
PunctureReport puncture_report(const ComplementSpec& spec);

/// Reduced homology over the rationals in every degree -1..dim, from integer
/// boundary matrices reduced to Smith normal form.
ReducedHomology reduced_homology_ranks(const OrderComplex& c, const HomologyCaps& caps = {});

struct DegreeHomology {
  int degree = -1;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

/// One degree of reduced_homology_ranks, touching only the faces it needs.
DegreeHomology reduced_homology_degree(const OrderComplex& c, int degree, const HomologyCaps& caps = {});

BettiReport betti_one(const ComplementSpec& spec, const LatticeCaps& lattice_caps = {},
                      const HomologyCaps& homology_caps = {});

/// Witnesses used when none are given: particle i at (i-1) e_1, and the
/// same configuration with the particle order reversed.
std::pair<Point, Point> default_witnesses(const ComplementSpec& spec);

/// Connected by the codimension argument; certified by an explicit PL path
/// from `from` to `to` that avoids V_k. Waypoints are drawn from a
/// generator seeded with `seed`.
ConnectivityReport connectivity_report(const ComplementSpec& spec, const Point& from,
                                       const Point& to, std::uint64_t seed = 1);

}  // namespace coinc
