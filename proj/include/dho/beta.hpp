#pragma once

#include <optional>
#include <vector>

#include "dho/dho.hpp"

namespace dho {

// Injective linear map beta: V(n, 2) -> End(V(n, 2)), stored by the images
// of the standard basis vectors.  beta(y)(x) = sum_j y_j images[j] x.
class BetaMap {
 public:
  // Throws InvalidBeta unless the field is GF(2), the images are n x n, and
  // they are linearly independent.
  BetaMap(Field field, std::vector<Matrix> images);

  const Field& field() const { return field_; }
  Eigen::Index n() const { return static_cast<Eigen::Index>(images_.size()); }
  const std::vector<Matrix>& images() const { return images_; }

  Matrix at(const Vector& y) const;
  Vector apply(const Vector& y, const Vector& x) const;

  friend bool operator==(const BetaMap& a, const BetaMap& b) { return a.images_ == b.images_; }

 private:
  Field field_;
  std::vector<Matrix> images_;
};

// {S_y : y in V(n, q)} with S_y = {(x, beta(y)(x))} in V(2n, q), listed in
// element order of y (coordinate 0 varying fastest).
DualArc arc_from_beta(const BetaMap& beta);

// Recovers beta from an arc listed in arc_from_beta order; nullopt if the
// members are not graphs of a linear family in that order.
std::optional<BetaMap> beta_from_arc(const DualArc& arc);

struct BetaTransforms {
  std::optional<BetaMap> o;  // beta^o(x)(y) = beta(y)(x); none when x -> beta^o(x) is not injective
  BetaMap t;                 // beta^t(x) = adjoint of beta(x)
  bool is_symmetric = false;
  bool is_alternating = false;
};

// The adjoint is taken with respect to a nondegenerate symmetric reference
// gram (default: identity); throws DegenerateReferenceForm.
BetaTransforms beta_transforms(const BetaMap& beta, const std::optional<Matrix>& reference = std::nullopt);

// beta(y)(x) = x^(2^-2h) y + x y^(2^h) on GF(2^n), in polynomial-basis coordinates.
BetaMap yoshiara_beta(int n, int h);

// ((a, b), (c, d)) -> a.d - b.c on V(2n, q).
FormSpec split_symplectic_form(const Field& f, Eigen::Index n);

}  // namespace dho
