#include "dho/forms.hpp"

#include <string>

namespace dho {

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Quadratic: return "quadratic";
    case FormKind::AlternatingBilinear: return "alternating_bilinear";
    case FormKind::SymmetricBilinear: return "symmetric_bilinear";
    case FormKind::Hermitian: return "hermitian";
  }
  return "";
}

FormKind form_kind_from_string(std::string_view name) {
  for (auto k : {FormKind::Quadratic, FormKind::AlternatingBilinear, FormKind::SymmetricBilinear, FormKind::Hermitian}) {
    if (to_string(k) == name) return k;
  }
  fail(ErrorKind::ParseError, "unknown form kind '" + std::string(name) + "'");
}

std::string_view to_string(PolarFamily family) {
  switch (family) {
    case PolarFamily::HyperbolicQ: return "HyperbolicQ";
    case PolarFamily::ParabolicQ: return "ParabolicQ";
    case PolarFamily::EllipticQ: return "EllipticQ";
    case PolarFamily::Symplectic: return "Symplectic";
    case PolarFamily::HermitianOdd: return "HermitianOdd";
    case PolarFamily::HermitianEven: return "HermitianEven";
  }
  return "";
}

PolarFamily polar_family_from_string(std::string_view name) {
  if (name == "HyperbolicQ" || name == "Q+" || name == "Qplus") return PolarFamily::HyperbolicQ;
  if (name == "ParabolicQ" || name == "Q") return PolarFamily::ParabolicQ;
  if (name == "EllipticQ" || name == "Q-" || name == "Qminus") return PolarFamily::EllipticQ;
  if (name == "Symplectic" || name == "W") return PolarFamily::Symplectic;
  if (name == "HermitianOdd" || name == "H" || name == "Hodd") return PolarFamily::HermitianOdd;
  if (name == "HermitianEven" || name == "Heven") return PolarFamily::HermitianEven;
  fail(ErrorKind::InvalidArgument, "unknown polar family '" + std::string(name) + "'");
}

namespace {

void check_square(const FormSpec& form) {
  if (form.gram.rows() != form.ambient_dim || form.gram.cols() != form.ambient_dim) {
    fail(ErrorKind::InvalidForm, "gram matrix must be N x N");
  }
  for (Eigen::Index i = 0; i < form.gram.size(); ++i) {
    if (form.gram.data()[i] >= form.field.order()) fail(ErrorKind::InvalidForm, "gram entry out of range");
  }
}

Elem conj(const FormSpec& form, Elem x) {
  return form.conj_exponent == 0 ? x : form.field.frobenius(x, form.conj_exponent);
}

void check_vector(const FormSpec& form, const Vector& v) {
  if (v.size() != form.ambient_dim) fail(ErrorKind::DimensionMismatch, "vector length differs from form dimension");
}

}  // namespace

void validate(const FormSpec& form) {
  check_square(form);
  const Field& f = form.field;
  const Eigen::Index n = form.ambient_dim;
  switch (form.kind) {
    case FormKind::Quadratic:
      if (form.quad_coeffs.size() != n) fail(ErrorKind::InvalidForm, "quadratic form needs N square coefficients");
      if (form.conj_exponent != 0) fail(ErrorKind::InvalidForm, "quadratic form has no conjugation");
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
          if (form.gram(i, j) != 0) fail(ErrorKind::InvalidForm, "quadratic gram must be strictly upper triangular");
      break;
    case FormKind::AlternatingBilinear:
      if (form.conj_exponent != 0) fail(ErrorKind::InvalidForm, "bilinear form has no conjugation");
      for (Eigen::Index i = 0; i < n; ++i) {
        if (form.gram(i, i) != 0) fail(ErrorKind::InvalidForm, "alternating gram must have zero diagonal");
        for (Eigen::Index j = 0; j < i; ++j)
          if (form.gram(i, j) != f.neg(form.gram(j, i))) fail(ErrorKind::InvalidForm, "alternating gram must be skew");
      }
      break;
    case FormKind::SymmetricBilinear:
      if (form.conj_exponent != 0) fail(ErrorKind::InvalidForm, "bilinear form has no conjugation");
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < i; ++j)
          if (form.gram(i, j) != form.gram(j, i)) fail(ErrorKind::InvalidForm, "symmetric gram must be symmetric");
      break;
    case FormKind::Hermitian:
      if (f.degree() % 2 != 0) fail(ErrorKind::IncompatibleField, "hermitian forms need an even extension degree");
      if (form.conj_exponent != static_cast<int>(f.degree() / 2)) {
        fail(ErrorKind::InvalidForm, "hermitian conjugation must be x -> x^q");
      }
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (form.gram(i, j) != conj(form, form.gram(j, i))) fail(ErrorKind::InvalidForm, "gram is not hermitian");
      break;
  }
}

FormSpec make_quadratic(const Field& f, Matrix upper, Vector quad_coeffs) {
  FormSpec form{FormKind::Quadratic, f, upper.rows(), std::move(upper), std::move(quad_coeffs), 0};
  validate(form);
  return form;
}

FormSpec make_bilinear(FormKind kind, const Field& f, Matrix gram) {
  if (kind != FormKind::AlternatingBilinear && kind != FormKind::SymmetricBilinear) {
    fail(ErrorKind::KindMismatch, "make_bilinear needs a bilinear kind");
  }
  FormSpec form{kind, f, gram.rows(), std::move(gram), Vector(), 0};
  validate(form);
  return form;
}

FormSpec make_hermitian(const Field& f, Matrix gram) {
  FormSpec form{FormKind::Hermitian, f, gram.rows(), std::move(gram), Vector(), static_cast<int>(f.degree() / 2)};
  validate(form);
  return form;
}

std::pair<Elem, Elem> smallest_irreducible_quadratic(const Field& f) {
  const Elem q = f.order();
  for (std::uint64_t index = 0; index < std::uint64_t{q} * q; ++index) {
    const Elem c0 = static_cast<Elem>(index % q), c1 = static_cast<Elem>(index / q);
    bool has_root = false;
    for (Elem x = 0; x < q && !has_root; ++x) {
      has_root = f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) == 0;
    }
    if (!has_root) return {c0, c1};
  }
  fail(ErrorKind::IncompatibleField, "no irreducible quadratic");
}

FormSpec standard_form(PolarFamily family, int rank, const Field& f) {
  if (rank < 1) fail(ErrorKind::InvalidArgument, "rank must be at least 1");
  const Eigen::Index n = rank;
  switch (family) {
    case PolarFamily::HyperbolicQ: {
      Matrix g = zeros(2 * n, 2 * n);
      for (Eigen::Index i = 0; i < n; ++i) g(2 * i, 2 * i + 1) = 1;
      return make_quadratic(f, g, Vector::Zero(2 * n));
    }
    case PolarFamily::ParabolicQ: {
      Matrix g = zeros(2 * n + 1, 2 * n + 1);
      for (Eigen::Index i = 0; i < n; ++i) g(2 * i + 1, 2 * i + 2) = 1;
      Vector d = Vector::Zero(2 * n + 1);
      d(0) = 1;
      return make_quadratic(f, g, d);
    }
    case PolarFamily::EllipticQ: {
      const auto [c0, c1] = smallest_irreducible_quadratic(f);
      Matrix g = zeros(2 * n + 2, 2 * n + 2);
      g(0, 1) = c1;
      for (Eigen::Index i = 1; i <= n; ++i) g(2 * i, 2 * i + 1) = 1;
      Vector d = Vector::Zero(2 * n + 2);
      d(0) = 1;
      d(1) = c0;
      return make_quadratic(f, g, d);
    }
    case PolarFamily::Symplectic: {
      Matrix g = zeros(2 * n, 2 * n);
      for (Eigen::Index i = 0; i < n; ++i) {
        g(2 * i, 2 * i + 1) = 1;
        g(2 * i + 1, 2 * i) = f.neg(1);
      }
      return make_bilinear(FormKind::AlternatingBilinear, f, g);
    }
    case PolarFamily::HermitianOdd:
    case PolarFamily::HermitianEven: {
      if (f.degree() % 2 != 0) fail(ErrorKind::IncompatibleField, "hermitian families need a field of square order");
      const Eigen::Index dim = family == PolarFamily::HermitianOdd ? 2 * n : 2 * n + 1;
      return make_hermitian(f, identity(dim));
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown family");
}

Elem eval_quadratic(const FormSpec& form, const Vector& v) {
  if (form.kind != FormKind::Quadratic) fail(ErrorKind::KindMismatch, "eval_quadratic needs a quadratic form");
  check_vector(form, v);
  const Field& f = form.field;
  Elem s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    s = f.add(s, f.mul(form.quad_coeffs(i), f.mul(v(i), v(i))));
    for (Eigen::Index j = i + 1; j < v.size(); ++j) s = f.add(s, f.mul(form.gram(i, j), f.mul(v(i), v(j))));
  }
  return s;
}

Matrix companion_gram(const FormSpec& form) {
  if (form.kind != FormKind::Quadratic) return form.gram;
  const Field& f = form.field;
  const Eigen::Index n = form.ambient_dim;
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j)
        g(i, i) = f.add(form.quad_coeffs(i), form.quad_coeffs(i));
      else
        g(i, j) = i < j ? form.gram(i, j) : form.gram(j, i);
    }
  return g;
}

Elem eval_bilinear(const FormSpec& form, const Vector& u, const Vector& v) {
  check_vector(form, u);
  check_vector(form, v);
  const Field& f = form.field;
  const Matrix& g = form.kind == FormKind::Quadratic ? companion_gram(form) : form.gram;
  Elem s = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i) == 0) continue;
    Elem row = 0;
    for (Eigen::Index j = 0; j < v.size(); ++j) row = f.add(row, f.mul(g(i, j), conj(form, v(j))));
    s = f.add(s, f.mul(u(i), row));
  }
  return s;
}

FormSpec polarize(const FormSpec& form) {
  if (form.kind != FormKind::Quadratic) fail(ErrorKind::KindMismatch, "polarize needs a quadratic form");
  const FormKind kind = form.field.characteristic() == 2 ? FormKind::AlternatingBilinear : FormKind::SymmetricBilinear;
  return make_bilinear(kind, form.field, companion_gram(form));
}

bool is_nondegenerate(const FormSpec& form) {
  return rank(form.field, companion_gram(form)) == static_cast<std::size_t>(form.ambient_dim);
}

bool is_isotropic_vector(const FormSpec& form, const Vector& v) {
  switch (form.kind) {
    case FormKind::Quadratic: return eval_quadratic(form, v) == 0;
    case FormKind::AlternatingBilinear: check_vector(form, v); return true;
    default: return eval_bilinear(form, v, v) == 0;
  }
}

bool is_totally_isotropic(const FormSpec& form, const Subspace& s) {
  if (s.ambient_dim() != form.ambient_dim) fail(ErrorKind::DimensionMismatch, "subspace not in the form's space");
  std::vector<Vector> rows;
  for (Eigen::Index i = 0; i < s.dim(); ++i) rows.push_back(s.row(i));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!is_isotropic_vector(form, rows[i])) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (eval_bilinear(form, rows[i], rows[j]) != 0) return false;
    }
  }
  return true;
}

Subspace orthogonal(const FormSpec& form, const Subspace& s) {
  if (s.ambient_dim() != form.ambient_dim) fail(ErrorKind::DimensionMismatch, "subspace not in the form's space");
  const Field& f = form.field;
  const Matrix g = companion_gram(form);
  // Row i of the system is (G conj(s_i))^T, so that row . v = B(v, s_i).
  Matrix system(s.dim(), form.ambient_dim);
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    Vector c = s.row(i);
    for (Eigen::Index j = 0; j < c.size(); ++j) c(j) = conj(form, c(j));
    system.row(i) = multiply(f, g, c).transpose();
  }
  if (s.dim() == 0) return span(f, form.ambient_dim, identity(form.ambient_dim));
  return kernel(f, system);
}

Subspace perp(const FormSpec& form, const Subspace& s) {
  if (!is_nondegenerate(form)) fail(ErrorKind::DegeneratePolarity, "form has a nontrivial radical");
  return orthogonal(form, s);
}

}  // namespace dho
