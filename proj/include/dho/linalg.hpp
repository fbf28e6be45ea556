#pragma once

// Exact linear algebra over a runtime Field.  Matrices are dense Eigen
// arrays of element indices; all arithmetic goes through the Field, so the
// free functions here take the field explicitly.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "dho/gf.hpp"

namespace dho {

using Matrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

Matrix zeros(Eigen::Index rows, Eigen::Index cols);
Matrix identity(Eigen::Index n);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vector multiply(const Field& f, const Matrix& a, const Vector& v);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, Elem c, const Matrix& a);
Vector add(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, Elem c, const Vector& v);
Elem dot(const Field& f, const Vector& a, const Vector& b);
// Entrywise Frobenius power x -> x^(p^e).
Matrix frobenius(const Field& f, const Matrix& a, std::int64_t e);
Vector frobenius(const Field& f, const Vector& v, std::int64_t e);

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::size_t rank = 0;
  std::vector<Eigen::Index> pivots;
};

// Reduced row-echelon form.  Dispatches to the bit-packed path for GF(2).
RrefResult rref(const Field& f, const Matrix& m);
// Field-generic elimination; the reference the GF(2) path is checked against.
RrefResult rref_generic(const Field& f, const Matrix& m);

std::size_t rank(const Field& f, const Matrix& m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

// Canonical subspace of V(N, q): basis rows in reduced row-echelon form.
class Subspace {
 public:
  // Zero subspace.
  Subspace(Field field, Eigen::Index ambient_dim);

  // Accepts a basis that is already canonical; throws NonCanonicalInput otherwise.
  static Subspace from_canonical(Field field, Matrix basis);

  const Field& field() const { return field_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector row(Eigen::Index i) const { return basis_.row(i).transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_ == b.basis_ && a.field_ == b.field_;
  }
  // Lexicographic on (dim, row-major entries); a total order on canonical forms.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::size_t hash() const;

 private:
  Subspace(Field field, Eigen::Index ambient_dim, Matrix basis)
      : field_(std::move(field)), ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  friend Subspace span(const Field&, Eigen::Index, const Matrix&);

  Field field_;
  Eigen::Index ambient_dim_;
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

bool is_canonical(const Field& f, const Matrix& basis);

// Span of the rows of generators (generators.cols() == ambient_dim).
Subspace span(const Field& f, Eigen::Index ambient_dim, const Matrix& generators);
Subspace span(const Field& f, Eigen::Index ambient_dim, const std::vector<Vector>& generators);

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace subspace_sum(const Subspace& s, const Subspace& t);
bool contains(const Subspace& s, const Vector& v);
bool is_subspace_of(const Subspace& inner, const Subspace& outer);

// Right kernel {x : m x = 0} as a subspace of V(m.cols()).
Subspace kernel(const Field& f, const Matrix& m);
std::optional<Vector> solve(const Field& f, const Matrix& m, const Vector& rhs);

// Visits all q^dim vectors, zero first, in the order of the coefficient
// counter sum c_i b_i with c_0 varying fastest.  Throws EnumerationTooLarge
// past 2^24 vectors.
void for_each_vector(const Subspace& s, const std::function<void(const Vector&)>& visit);
std::vector<Vector> enumerate_vectors(const Subspace& s);

// One normalized representative (first nonzero coordinate 1) per 1-space.
std::vector<Vector> enumerate_points(const Subspace& s);

// Random matrix with entries uniform in the field, for property tests.
template <class Rng>
Matrix random_matrix(const Field& f, Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = static_cast<Elem>(rng() % f.order());
  return m;
}

}  // namespace dho
