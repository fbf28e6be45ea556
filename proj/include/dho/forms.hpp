#pragma once

#include <string_view>

#include "dho/linalg.hpp"

namespace dho {

enum class FormKind { Quadratic, AlternatingBilinear, SymmetricBilinear, Hermitian };

std::string_view to_string(FormKind kind);
FormKind form_kind_from_string(std::string_view name);

// Rows of the classical polar space table, in table order.
enum class PolarFamily { HyperbolicQ, ParabolicQ, EllipticQ, Symplectic, HermitianOdd, HermitianEven };

std::string_view to_string(PolarFamily family);
// Accepts the tag names and the short forms Q+, Q, Q-, W, H, Heven.
PolarFamily polar_family_from_string(std::string_view name);

// A form on V(N, q).
//
// Quadratic forms are stored as Q(x) = sum quad_coeffs[i] x_i^2 +
// sum_{i<j} gram(i,j) x_i x_j, with gram strictly upper triangular; the
// squares cannot be recovered from the bilinear part in characteristic 2.
// Bilinear and hermitian forms evaluate u^T gram conj(v), where conj is
// x -> x^(p^conj_exponent) (identity unless hermitian).
struct FormSpec {
  FormKind kind = FormKind::AlternatingBilinear;
  Field field;
  Eigen::Index ambient_dim = 0;
  Matrix gram;
  Vector quad_coeffs;
  int conj_exponent = 0;
};

// Checks the structural invariants of the kind; throws InvalidForm or
// IncompatibleField.  Nondegeneracy is not required here (a polarized
// parabolic form in even characteristic has a radical); perp checks it.
void validate(const FormSpec& form);

FormSpec make_quadratic(const Field& f, Matrix upper, Vector quad_coeffs);
FormSpec make_bilinear(FormKind kind, const Field& f, Matrix gram);
FormSpec make_hermitian(const Field& f, Matrix gram);

// Canonical coordinate models.  For hermitian families the field is
// GF(q^2); throws IncompatibleField otherwise.
FormSpec standard_form(PolarFamily family, int rank, const Field& f);

// Smallest monic irreducible x^2 + c1 x + c0 over f, returned as (c0, c1).
std::pair<Elem, Elem> smallest_irreducible_quadratic(const Field& f);

Elem eval_quadratic(const FormSpec& form, const Vector& v);
// For quadratic forms this evaluates the polarization.
Elem eval_bilinear(const FormSpec& form, const Vector& u, const Vector& v);

// B(x, y) = Q(x + y) - Q(x) - Q(y); alternating in characteristic 2,
// symmetric otherwise.
FormSpec polarize(const FormSpec& form);

// Gram matrix of the reflexive form attached to form (its polarization for
// quadratic forms).
Matrix companion_gram(const FormSpec& form);
bool is_nondegenerate(const FormSpec& form);

// Q(v) = 0 for quadratic forms, B(v, v) = 0 otherwise.
bool is_isotropic_vector(const FormSpec& form, const Vector& v);
bool is_totally_isotropic(const FormSpec& form, const Subspace& s);

// {v : B(v, s) = 0 for all s in S} without any nondegeneracy requirement.
Subspace orthogonal(const FormSpec& form, const Subspace& s);
// Polarity S -> S^perp; throws DegeneratePolarity for a degenerate companion.
Subspace perp(const FormSpec& form, const Subspace& s);

}  // namespace dho
