#include "coinc/linalg.hpp"

#include <map>
#include <set>
#include <utility>

namespace coinc {

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_dim_) throw InvalidInput("basis vector has wrong length");
  if (basis_.size() > ambient_dim_ || rank(RationalMatrix::from_rows(basis_)) != basis_.size())
    throw InvalidInput("basis vectors are linearly dependent");
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw InvalidInput("spanning vector has wrong length");
  if (vectors.empty()) return zero(ambient_dim);
  const EchelonForm ef = row_reduce(RationalMatrix::from_rows(vectors));
  std::vector<Vector> basis;
  basis.reserve(ef.pivots.size());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) basis.push_back(primitive(ef.reduced.row(r)));
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis(ambient_dim, Vector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) basis[i][i] = 1;
  return Subspace(ambient_dim, std::move(basis));
}

RationalMatrix Subspace::basis_matrix() const { return RationalMatrix::from_columns(ambient_dim_, basis_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector dimension does not match subspace");
  if (is_zero(v)) return true;
  if (basis_.empty()) return false;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(RationalMatrix::from_rows(rows)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InvalidInput("subspaces live in different ambient spaces");
  if (other.dim() > dim()) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

Subspace kernel_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  const EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(primitive(v));
  }
  return Subspace(cols, std::move(basis));
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel_basis(RationalMatrix::from_rows(s.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("subspaces live in different ambient spaces");
  std::vector<Vector> normals = orthogonal_complement(a).basis();
  const Subspace more = orthogonal_complement(b);
  normals.insert(normals.end(), more.basis().begin(), more.basis().end());
  return orthogonal_complement(Subspace::span(a.ambient_dim(), normals));
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw InvalidInput("solve: incompatible shapes");
  RationalMatrix aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const EchelonForm ef = row_reduce(std::move(aug));
  if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) throw InvalidInput("solve: singular matrix");
  RationalMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = ef.reduced(i, n + j);
  return x;
}

Vector project_onto(const Vector& p, const Subspace& s) {
  if (p.size() != s.ambient_dim()) throw InvalidInput("project_onto: dimension mismatch");
  if (s.dim() == 0) return Vector(p.size(), 0);
  const RationalMatrix basis = s.basis_matrix();
  const RationalMatrix bt = basis.transpose();
  const RationalMatrix gram = bt * basis;
  RationalMatrix rhs(s.dim(), 1);
  for (std::size_t i = 0; i < s.dim(); ++i) rhs(i, 0) = dot(s.basis()[i], p);
  const RationalMatrix coeffs = solve(gram, rhs);
  Vector out(p.size(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t r = 0; r < p.size(); ++r) out[r] += coeffs(i, 0) * s.basis()[i][r];
  return out;
}

RationalMatrix projector(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  if (s.dim() == 0) return RationalMatrix(n, n);
  const RationalMatrix basis = s.basis_matrix();
  const RationalMatrix bt = basis.transpose();
  return basis * solve(bt * basis, bt);
}

namespace {

using Rows = std::vector<std::vector<BigInt>>;

struct SmithWork {
  Rows a;
  std::size_t m;
  std::size_t n;
  bool track;
  IntegerMatrix left;
  IntegerMatrix right;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track)
      for (std::size_t c = 0; c < m; ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j, std::size_t from_row) {
    if (i == j) return;
    for (std::size_t r = from_row; r < m; ++r) std::swap(a[r][i], a[r][j]);
    if (track)
      for (std::size_t r = 0; r < n; ++r) std::swap(right(r, i), right(r, j));
  }
  // row_i -= q row_t
  void row_axpy(std::size_t i, std::size_t t, const BigInt& q, std::size_t from_col) {
    for (std::size_t c = from_col; c < n; ++c)
      if (a[t][c] != 0) a[i][c] -= q * a[t][c];
    if (track)
      for (std::size_t c = 0; c < m; ++c)
        if (left(t, c) != 0) left(i, c) -= q * left(t, c);
  }
  // col_j -= q col_t
  void col_axpy(std::size_t j, std::size_t t, const BigInt& q, std::size_t from_row) {
    for (std::size_t r = from_row; r < m; ++r)
      if (a[r][t] != 0) a[r][j] -= q * a[r][t];
    if (track)
      for (std::size_t r = 0; r < n; ++r)
        if (right(r, t) != 0) right(r, j) -= q * right(r, t);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
  SmithWork w{Rows(input.rows(), std::vector<BigInt>(input.cols())), input.rows(), input.cols(), with_transforms,
              {}, {}};
  for (std::size_t i = 0; i < w.m; ++i)
    for (std::size_t j = 0; j < w.n; ++j) w.a[i][j] = input(i, j);
  if (with_transforms) {
    w.left = IntegerMatrix::identity(w.m);
    w.right = IntegerMatrix::identity(w.n);
  }

  SmithForm out;
  const std::size_t limit = std::min(w.m, w.n);
  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block, stopping at a unit.
    std::size_t pi = w.m, pj = w.n;
    BigInt best;
    for (std::size_t i = t; i < w.m && !(pi < w.m && best == 1); ++i)
      for (std::size_t j = t; j < w.n; ++j) {
        if (w.a[i][j] == 0) continue;
        const BigInt mag = abs(w.a[i][j]);
        if (pi == w.m || mag < best) {
          best = mag;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi == w.m) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj, t);

    while (true) {
      for (std::size_t i = t + 1; i < w.m; ++i) {
        if (w.a[i][t] == 0) continue;
        const BigInt q = w.a[i][t] / w.a[t][t];
        w.row_axpy(i, t, q, t);
      }
      for (std::size_t j = t + 1; j < w.n; ++j) {
        if (w.a[t][j] == 0) continue;
        const BigInt q = w.a[t][j] / w.a[t][t];
        w.col_axpy(j, t, q, t);
      }
      // Remainders left in the pivot row or column: move the smallest in.
      std::size_t ri = w.m, cj = w.n;
      BigInt small;
      for (std::size_t i = t + 1; i < w.m; ++i)
        if (w.a[i][t] != 0 && (ri == w.m || abs(w.a[i][t]) < small)) {
          small = abs(w.a[i][t]);
          ri = i;
        }
      for (std::size_t j = t + 1; j < w.n; ++j)
        if (w.a[t][j] != 0 && ((ri == w.m && cj == w.n) || abs(w.a[t][j]) < small)) {
          small = abs(w.a[t][j]);
          cj = j;
          ri = w.m;
        }
      if (cj < w.n) {
        w.swap_cols(t, cj, t);
        continue;
      }
      if (ri < w.m) {
        w.swap_rows(t, ri);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < w.m && divides; ++i)
        for (std::size_t j = t + 1; j < w.n; ++j) {
          if (w.a[i][j] == 0) continue;
          if (!mpz_divisible_p(w.a[i][j].get_mpz_t(), w.a[t][t].get_mpz_t())) {
            w.row_axpy(t, i, BigInt(-1), t);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (w.a[t][t] < 0) {
      w.a[t][t] = -w.a[t][t];
      if (with_transforms)
        for (std::size_t c = 0; c < w.m; ++c) w.left(t, c) = -w.left(t, c);
    }
    out.factors.push_back(w.a[t][t]);
  }
  out.rank = out.factors.size();
  if (with_transforms) {
    out.left = std::move(w.left);
    out.right = std::move(w.right);
  }
  return out;
}

BigInt determinant(const IntegerMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntegerMatrix a = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace coinc

namespace coinc {

SmithForm sparse_smith_normal_form(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries) {
  std::vector<std::map<std::size_t, BigInt>> row_data(rows);
  std::vector<std::set<std::size_t>> col_rows(cols);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw InvalidInput("sparse entry out of range");
    if (e.value == 0) continue;
    BigInt& slot = row_data[e.row][e.col];
    slot += e.value;
    if (slot == 0) {
      row_data[e.row].erase(e.col);
      col_rows[e.col].erase(e.row);
    } else {
      col_rows[e.col].insert(e.row);
    }
  }

  std::size_t unit_pivots = 0;
  std::vector<bool> col_done(cols, false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_done[c] || col_rows[c].empty()) continue;
      std::size_t pivot = rows;
      for (std::size_t r : col_rows[c]) {
        const BigInt& v = row_data[r].at(c);
        if ((v == 1 || v == -1) && (pivot == rows || row_data[r].size() < row_data[pivot].size())) pivot = r;
      }
      if (pivot == rows) continue;
      const std::map<std::size_t, BigInt> pivot_row = std::move(row_data[pivot]);
      row_data[pivot].clear();
      for (const auto& [j, v] : pivot_row) col_rows[j].erase(pivot);
      const BigInt& pv = pivot_row.at(c);
      const std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::size_t r : targets) {
        const BigInt factor = row_data[r].at(c) * pv;
        for (const auto& [j, v] : pivot_row) {
          BigInt& slot = row_data[r][j];
          slot -= factor * v;
          if (slot == 0) {
            row_data[r].erase(j);
            col_rows[j].erase(r);
          } else {
            col_rows[j].insert(r);
          }
        }
      }
      col_done[c] = true;
      ++unit_pivots;
      progress = true;
    }
  }

  std::vector<std::size_t> rest_rows;
  std::vector<std::size_t> rest_cols;
  std::map<std::size_t, std::size_t> col_index;
  for (std::size_t r = 0; r < rows; ++r)
    if (!row_data[r].empty()) rest_rows.push_back(r);
  for (std::size_t c = 0; c < cols; ++c)
    if (!col_rows[c].empty()) {
      col_index.emplace(c, rest_cols.size());
      rest_cols.push_back(c);
    }
  SmithForm out;
  out.factors.assign(unit_pivots, BigInt(1));
  if (!rest_rows.empty()) {
    IntegerMatrix rest(rest_rows.size(), rest_cols.size());
    for (std::size_t i = 0; i < rest_rows.size(); ++i)
      for (const auto& [j, v] : row_data[rest_rows[i]]) rest(i, col_index.at(j)) = v;
    SmithForm dense = smith_normal_form(rest);
    out.factors.insert(out.factors.end(), dense.factors.begin(), dense.factors.end());
  }
  out.rank = out.factors.size();
  return out;
}

}  // namespace coinc
