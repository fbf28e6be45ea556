#include "dho/gf2.hpp"

#include <algorithm>

namespace dho::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

BitMatrix BitMatrix::from_matrix(const Matrix& m) {
  BitMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) & 1u) out.set(i, j, true);
  return out;
}

Matrix BitMatrix::to_matrix() const {
  Matrix m = zeros(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j) ? 1 : 0;
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v)
    row(r)[c / 64] |= bit;
  else
    row(r)[c / 64] &= ~bit;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + stride_, row(b));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::truncate(std::size_t r) {
  rows_ = std::min(rows_, r);
  words_.resize(rows_ * stride_);
}

std::vector<std::size_t> reduce(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = lead;
    while (pivot < m.rows() && !(m.row(pivot)[word] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(lead, pivot);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead && (m.row(r)[word] & bit)) m.xor_row(r, lead);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

RrefResult rref(const Matrix& m) {
  BitMatrix bm = BitMatrix::from_matrix(m);
  auto pivots = reduce(bm);
  bm.truncate(pivots.size());
  RrefResult out;
  out.reduced = bm.to_matrix();
  out.rank = pivots.size();
  out.pivots.assign(pivots.begin(), pivots.end());
  return out;
}

std::size_t rank(const Matrix& m) {
  BitMatrix bm = BitMatrix::from_matrix(m);
  return reduce(bm).size();
}

Matrix intersect(const Matrix& s, const Matrix& t) {
  const std::size_t n = static_cast<std::size_t>(s.cols());
  BitMatrix z(static_cast<std::size_t>(s.rows() + t.rows()), 2 * n);
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j)
      if (s(i, j)) {
        z.set(i, j, true);
        z.set(i, n + j, true);
      }
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < t.cols(); ++j)
      if (t(i, j)) z.set(s.rows() + i, j, true);
  auto pivots = reduce(z);
  // Rows whose left half vanishes carry the intersection in their right half.
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) rows.push_back(r);
  }
  BitMatrix out(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (z.get(rows[i], n + j)) out.set(i, j, true);
  reduce(out);
  return out.to_matrix();
}

}  // namespace dho::gf2
