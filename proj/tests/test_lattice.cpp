#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "coinc/lattice.hpp"
#include "coinc/rational.hpp"

using namespace coinc;

namespace {

IntersectionLattice lattice_of(int n, int d, int k) {
  return build_lattice(build_coincidence_arrangement(ConfigurationSpace(n, d), k));
}

// Every set partition of {1..n} as restricted-growth label strings.
void all_labelings(int n, std::vector<int>& cur, int max_label, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int l = 0; l <= max_label + 1; ++l) {
    cur.push_back(l);
    all_labelings(n, cur, std::max(max_label, l), out);
    cur.pop_back();
  }
}

struct OracleLattice {
  std::vector<std::vector<int>> labels;
  std::vector<std::int64_t> mu;
};

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  for (std::size_t i = 0; i < fine.size(); ++i)
    for (std::size_t j = 0; j < fine.size(); ++j)
      if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
  return true;
}

OracleLattice oracle(int n, int k) {
  std::vector<std::vector<int>> every;
  std::vector<int> cur;
  all_labelings(n, cur, -1, every);
  OracleLattice o;
  for (const auto& lab : every) {
    std::map<int, int> sizes;
    for (int l : lab) ++sizes[l];
    bool ok = true;
    for (const auto& [l, s] : sizes)
      if (s > 1 && s < k) ok = false;
    if (ok) o.labels.push_back(lab);
  }
  auto excess = [&](const std::vector<int>& lab) { return n - static_cast<int>(std::set<int>(lab.begin(), lab.end()).size()); };
  std::sort(o.labels.begin(), o.labels.end(), [&](const auto& a, const auto& b) { return excess(a) < excess(b); });
  o.mu.assign(o.labels.size(), 0);
  for (std::size_t x = 0; x < o.labels.size(); ++x) {
    if (x == 0) {
      o.mu[x] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t y = 0; y < x; ++y)
      if (refines(o.labels[y], o.labels[x])) s += o.mu[y];
    o.mu[x] = -s;
  }
  return o;
}

std::vector<int> canonical_labels(const std::vector<int>& lab) {
  std::map<int, int> rename;
  std::vector<int> out;
  for (int l : lab) out.push_back(rename.emplace(l, static_cast<int>(rename.size())).first->second);
  return out;
}

}  // namespace

TEST_CASE("build_lattice examples") {
  const IntersectionLattice l3 = lattice_of(3, 1, 2);
  CHECK(l3.size() == 5);
  CHECK(l3.partition(0) == ParticlePartition::singletons(3));
  CHECK(l3.atoms().size() == 3);
  CHECK(l3.partition(l3.top()).label() == "V_123");
  const IntersectionLattice l43 = lattice_of(4, 1, 3);
  CHECK(l43.size() == 6);
  CHECK(l43.partition(l43.top()).label() == "V_1234");
  CHECK(lattice_of(2, 1, 2).size() == 2);
  CHECK(lattice_of(4, 1, 2).size() == 15);
}

TEST_CASE("covering relations") {
  CHECK(lattice_of(3, 1, 2).covering_edges().size() == 6);
  const IntersectionLattice l43 = lattice_of(4, 1, 3);
  CHECK(l43.covering_edges().size() == 8);
  CHECK(l43.covers(0).size() == 4);
  for (std::size_t a : l43.atoms()) CHECK(l43.covers(a) == std::vector<std::size_t>{l43.top()});
  CHECK(lattice_of(2, 1, 2).covering_edges().size() == 1);
}

TEST_CASE("mobius examples") {
  const IntersectionLattice l3 = lattice_of(3, 1, 2);
  for (std::size_t a : l3.atoms()) CHECK(l3.mobius()[a] == -1);
  CHECK(l3.mobius()[l3.top()] == 2);
  const IntersectionLattice l43 = lattice_of(4, 1, 3);
  for (std::size_t a : l43.atoms()) CHECK(l43.mobius()[a] == -1);
  CHECK(l43.mobius()[l43.top()] == 3);
  CHECK(mobius(l43) == l43.mobius());
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(characteristic_polynomial(lattice_of(3, 1, 2)) == std::vector<std::int64_t>{0, 2, -3, 1});
  CHECK(characteristic_polynomial(lattice_of(4, 1, 2)) == std::vector<std::int64_t>{0, -6, 11, -6, 1});
  CHECK(characteristic_polynomial(lattice_of(2, 1, 2)) == std::vector<std::int64_t>{0, -1, 1});
  CHECK(format_polynomial({0, -6, 11, -6, 1}) == "t^4 - 6t^3 + 11t^2 - 6t");
  CHECK(format_polynomial({-1, 0, 1}) == "t^2 - 1");
  CHECK(evaluate_polynomial({0, -6, 11, -6, 1}, BigInt(-1)) == 24);
}

TEST_CASE("open interval examples") {
  const IntersectionLattice l43 = lattice_of(4, 1, 3);
  for (std::size_t a : l43.atoms()) {
    const OrderComplex c = open_interval_complex(l43, a);
    CHECK(c.empty());
    CHECK(c.dimension() == -1);
  }
  const OrderComplex top = open_interval_complex(l43, l43.top());
  CHECK(top.vertices.size() == 4);
  CHECK(top.facets.size() == 4);
  CHECK(top.dimension() == 0);
  const IntersectionLattice l3 = lattice_of(3, 1, 2);
  const OrderComplex t3 = open_interval_complex(l3, l3.top());
  CHECK(t3.vertices.size() == 3);
  CHECK(t3.dimension() == 0);
  CHECK_THROWS_AS(open_interval_complex(l3, 0), InvalidInput);
  CHECK_THROWS_AS(open_interval_complex(lattice_of(5, 1, 2), 51, 2), CapExceeded);
}

TEST_CASE("lattice caps") {
  CHECK_THROWS_AS(lattice_of(9, 1, 2), CapExceeded);
  CHECK_THROWS_AS(lattice_of(10, 1, 3), CapExceeded);
  CHECK_NOTHROW(LatticeCaps{}.check(8, 2));
  CHECK_NOTHROW(LatticeCaps{}.check(9, 3));
}

TEST_CASE("lattice matches the brute-force partition oracle") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const IntersectionLattice l = lattice_of(n, 1, k);
      const OracleLattice o = oracle(n, k);
      REQUIRE(l.size() == o.labels.size());
      std::map<std::vector<int>, std::int64_t> expected;
      for (std::size_t i = 0; i < o.labels.size(); ++i) expected.emplace(o.labels[i], o.mu[i]);
      for (std::size_t x = 0; x < l.size(); ++x) {
        const auto key = canonical_labels(l.partition(x).labels());
        REQUIRE(expected.count(key) == 1);
        CHECK(l.mobius()[x] == expected.at(key));
      }
    }
}

TEST_CASE("pairwise Mobius values match the partition-lattice product formula") {
  for (int n = 2; n <= 6; ++n) {
    const IntersectionLattice l = lattice_of(n, 1, 2);
    for (std::size_t x = 0; x < l.size(); ++x) {
      BigInt expected = 1;
      for (const auto& b : l.partition(x).blocks()) {
        const BigInt f = factorial(static_cast<unsigned>(b.size() - 1));
        expected *= b.size() % 2 == 0 ? BigInt(-f) : f;
      }
      CHECK(BigInt(static_cast<long>(l.mobius()[x])) == expected);
    }
  }
}

TEST_CASE("order agrees with subspace containment") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 2; ++d)
      for (int k = 2; k <= n; ++k) {
        const IntersectionLattice l = lattice_of(n, d, k);
        const ConfigurationSpace s(n, d);
        std::vector<Subspace> subs;
        for (std::size_t x = 0; x < l.size(); ++x) {
          subs.push_back(partition_flat(s, l.partition(x)).subspace());
          CHECK(static_cast<int>(s.total_dim() - subs.back().dim()) == l.codim(x));
        }
        for (std::size_t x = 0; x < l.size(); ++x)
          for (std::size_t y = 0; y < l.size(); ++y) CHECK(l.leq(x, y) == subs[x].contains(subs[y]));
      }
}

TEST_CASE("Mobius and characteristic polynomial identities") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int k = 2; k <= n; ++k) {
        const IntersectionLattice l = lattice_of(n, d, k);
        for (std::size_t x = 1; x < l.size(); ++x) {
          std::int64_t s = 0;
          for (std::size_t y = 0; y < l.size(); ++y)
            if (l.leq(y, x)) s += l.mobius()[y];
          CHECK(s == 0);
        }
        const auto chi = characteristic_polynomial(l);
        CHECK(chi.size() == static_cast<std::size_t>(n * d + 1));
        CHECK(chi.back() == 1);
        CHECK(evaluate_polynomial(chi, BigInt(1)) == 0);
      }
}

TEST_CASE("closure under joins and heights") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const IntersectionLattice l = lattice_of(n, 1, k);
      for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t a : l.atoms()) CHECK(l.index_of(l.partition(x).join(l.partition(a))).has_value());
      CHECK(l.height(0) == 0);
      for (const auto& [x, y] : l.covering_edges()) {
        CHECK(l.less(x, y));
        CHECK(l.height(y) >= l.height(x) + 1);
      }
      for (std::size_t x = 1; x < l.size(); ++x) {
        const OrderComplex c = open_interval_complex(l, x);
        CHECK(c.dimension() == l.height(x) - 2);
        for (const auto& f : c.facets)
          for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(l.less(f[i], f[i + 1]));
      }
    }
}
