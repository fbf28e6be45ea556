#pragma once

// Word-parallel elimination over GF(2).  Rows are packed 64 columns per
// word, least significant bit first.

#include <cstdint>
#include <vector>

#include "dho/linalg.hpp"

namespace dho::gf2 {

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);

  std::uint64_t* row(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return words_.data() + r * stride_; }
  std::size_t stride() const { return stride_; }

  void swap_rows(std::size_t a, std::size_t b);
  void xor_row(std::size_t dst, std::size_t src);
  // Drops rows at and after r.
  void truncate(std::size_t r);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

// In-place reduction to RREF; returns pivot columns (rank = size).
std::vector<std::size_t> reduce(BitMatrix& m);

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Zassenhaus intersection of two row spaces, returned in RREF.
Matrix intersect(const Matrix& s, const Matrix& t);

}  // namespace dho::gf2
