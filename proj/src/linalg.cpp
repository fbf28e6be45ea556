#include "dho/linalg.hpp"

#include <algorithm>

#include "dho/gf2.hpp"

namespace dho {

Matrix zeros(Eigen::Index rows, Eigen::Index cols) { return Matrix::Zero(rows, cols); }

Matrix identity(Eigen::Index n) {
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix out = zeros(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      const Elem c = a(i, l);
      if (c == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(c, b(l, j)));
    }
  return out;
}

Vector multiply(const Field& f, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out = Vector::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) s = f.add(s, f.mul(a(i, j), v(j)));
    out(i) = s;
  }
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Field& f, Elem c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = f.mul(c, a(i, j));
  return out;
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sum length mismatch");
  Vector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = f.add(a(i), b(i));
  return out;
}

Vector scale(const Field& f, Elem c, const Vector& v) {
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = f.mul(c, v(i));
  return out;
}

Elem dot(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product length mismatch");
  Elem s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a(i), b(i)));
  return s;
}

Matrix frobenius(const Field& f, const Matrix& a, std::int64_t e) {
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = f.frobenius(a(i, j), e);
  return out;
}

Vector frobenius(const Field& f, const Vector& v, std::int64_t e) {
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = f.frobenius(v(i), e);
  return out;
}

RrefResult rref_generic(const Field& f, const Matrix& input) {
  Matrix m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RrefResult out;
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index pivot = lead;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) m.row(pivot).swap(m.row(lead));
    const Elem inv = f.inv(m(lead, col));
    for (Eigen::Index j = col; j < cols; ++j) m(lead, j) = f.mul(inv, m(lead, j));
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Elem c = f.neg(m(r, col));
      for (Eigen::Index j = col; j < cols; ++j) m(r, j) = f.add(m(r, j), f.mul(c, m(lead, j)));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = static_cast<std::size_t>(lead);
  out.reduced = m.topRows(lead);
  return out;
}

RrefResult rref(const Field& f, const Matrix& m) {
  if (f.order() == 2) return gf2::rref(m);
  return rref_generic(f, m);
}

std::size_t rank(const Field& f, const Matrix& m) {
  if (f.order() == 2) return gf2::rank(m);
  return rref_generic(f, m).rank;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix aug(n, 2 * n);
  aug << m, identity(n);
  auto r = rref(f, aug);
  if (r.rank < static_cast<std::size_t>(n) || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  return Matrix(r.reduced.rightCols(n));
}

bool is_canonical(const Field& f, const Matrix& basis) {
  Eigen::Index last_pivot = -1;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    Eigen::Index pivot = 0;
    while (pivot < basis.cols() && basis(i, pivot) == 0) ++pivot;
    if (pivot == basis.cols() || pivot <= last_pivot || basis(i, pivot) != 1) return false;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      if (r != i && basis(r, pivot) != 0) return false;
    }
    last_pivot = pivot;
  }
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j)
      if (basis(i, j) >= f.order()) return false;
  return true;
}

Subspace::Subspace(Field field, Eigen::Index ambient_dim)
    : field_(std::move(field)), ambient_dim_(ambient_dim), basis_(zeros(0, ambient_dim)) {}

Subspace Subspace::from_canonical(Field field, Matrix basis) {
  if (!is_canonical(field, basis)) fail(ErrorKind::NonCanonicalInput, "basis is not in reduced row-echelon form");
  const Eigen::Index n = basis.cols();
  return Subspace(std::move(field), n, std::move(basis));
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.basis_.data(), a.basis_.data() + a.basis_.size(), b.basis_.data(),
                                      b.basis_.data() + b.basis_.size());
}

std::size_t Subspace::hash() const {
  std::size_t h = static_cast<std::size_t>(ambient_dim_) * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(dim());
  for (Eigen::Index i = 0; i < basis_.size(); ++i) {
    h ^= basis_.data()[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Subspace span(const Field& f, Eigen::Index ambient_dim, const Matrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim) {
    fail(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
  }
  if (generators.rows() == 0) return Subspace(f, ambient_dim);
  return Subspace(f, ambient_dim, rref(f, generators).reduced);
}

Subspace span(const Field& f, Eigen::Index ambient_dim, const std::vector<Vector>& generators) {
  Matrix m = zeros(static_cast<Eigen::Index>(generators.size()), ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_dim) {
      fail(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    }
    m.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
  }
  return span(f, ambient_dim, m);
}

namespace {

void check_compatible(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || !(s.field() == t.field())) {
    fail(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace intersect(const Subspace& s, const Subspace& t) {
  check_compatible(s, t);
  const Field& f = s.field();
  const Eigen::Index n = s.ambient_dim();
  if (s.dim() == 0 || t.dim() == 0) return Subspace(f, n);
  if (f.order() == 2) return Subspace::from_canonical(f, gf2::intersect(s.basis(), t.basis()));
  // Zassenhaus: rows (s | s) and (t | 0); rows with zero left half span s ∩ t.
  Matrix z = zeros(s.dim() + t.dim(), 2 * n);
  z.topLeftCorner(s.dim(), n) = s.basis();
  z.topRightCorner(s.dim(), n) = s.basis();
  z.bottomLeftCorner(t.dim(), n) = t.basis();
  auto r = rref_generic(f, z);
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] >= n) rows.push_back(static_cast<Eigen::Index>(i));
  }
  Matrix basis(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) basis.row(static_cast<Eigen::Index>(i)) = r.reduced.row(rows[i]).tail(n);
  return span(f, n, basis);
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  check_compatible(s, t);
  Matrix stacked(s.dim() + t.dim(), s.ambient_dim());
  stacked << s.basis(), t.basis();
  return span(s.field(), s.ambient_dim(), stacked);
}

bool contains(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim()) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  // Reduce v against the canonical basis; v is in s iff the remainder vanishes.
  const Field& f = s.field();
  Vector r = v;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    Eigen::Index pivot = 0;
    while (s.basis()(i, pivot) == 0) ++pivot;
    const Elem c = r(pivot);
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    for (Eigen::Index j = 0; j < r.size(); ++j) r(j) = f.add(r(j), f.mul(nc, s.basis()(i, j)));
  }
  return r.isZero();
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  check_compatible(inner, outer);
  for (Eigen::Index i = 0; i < inner.dim(); ++i) {
    if (!contains(outer, inner.row(i))) return false;
  }
  return true;
}

Subspace kernel(const Field& f, const Matrix& m) {
  const Eigen::Index n = m.cols();
  auto r = rref(f, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> gens;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v = Vector::Zero(n);
    v(free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v(r.pivots[i]) = f.neg(r.reduced(static_cast<Eigen::Index>(i), free));
    gens.push_back(std::move(v));
  }
  return span(f, n, gens);
}

std::optional<Vector> solve(const Field& f, const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  const Eigen::Index n = m.cols();
  Matrix aug(m.rows(), n + 1);
  aug << m, rhs;
  auto r = rref(f, aug);
  if (r.rank > 0 && r.pivots.back() == n) return std::nullopt;
  Vector x = Vector::Zero(n);
  for (std::size_t i = 0; i < r.rank; ++i) x(r.pivots[i]) = r.reduced(static_cast<Eigen::Index>(i), n);
  return x;
}

void for_each_vector(const Subspace& s, const std::function<void(const Vector&)>& visit) {
  const Field& f = s.field();
  const Eigen::Index d = s.dim();
  std::uint64_t total = 1;
  for (Eigen::Index i = 0; i < d; ++i) {
    total *= f.order();
    if (total > kMaxEnumeration) fail(ErrorKind::EnumerationTooLarge, "subspace has more than 2^24 vectors");
  }
  std::vector<Elem> coeff(static_cast<std::size_t>(d), 0);
  Vector v = Vector::Zero(s.ambient_dim());
  for (std::uint64_t count = 0; count < total; ++count) {
    visit(v);
    // Increment the counter; update v incrementally by adding basis rows.
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const Elem old = coeff[idx];
      const Elem next = old + 1 == f.order() ? 0 : old + 1;
      coeff[idx] = next;
      const Elem delta = f.sub(next, old);
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = f.add(v(j), f.mul(delta, s.basis()(i, j)));
      if (next != 0) break;
    }
  }
}

std::vector<Vector> enumerate_vectors(const Subspace& s) {
  std::vector<Vector> out;
  for_each_vector(s, [&](const Vector& v) { out.push_back(v); });
  return out;
}

std::vector<Vector> enumerate_points(const Subspace& s) {
  std::vector<Vector> out;
  for_each_vector(s, [&](const Vector& v) {
    Eigen::Index lead = 0;
    while (lead < v.size() && v(lead) == 0) ++lead;
    if (lead < v.size() && v(lead) == 1) out.push_back(v);
  });
  return out;
}

}  // namespace dho
