#include "dho/beta.hpp"

#include <numeric>

namespace dho {

namespace {

Matrix flat_rows(const std::vector<Matrix>& images) {
  const Eigen::Index n = images.empty() ? 0 : images.front().rows();
  Matrix m(static_cast<Eigen::Index>(images.size()), n * n);
  for (std::size_t j = 0; j < images.size(); ++j)
    m.row(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::Matrix<Elem, 1, Eigen::Dynamic>>(images[j].data(), n * n);
  return m;
}

}  // namespace

BetaMap::BetaMap(Field field, std::vector<Matrix> images) : field_(std::move(field)), images_(std::move(images)) {
  if (field_.order() != 2) fail(ErrorKind::InvalidBeta, "bilinear maps are defined over GF(2)");
  const auto n = static_cast<Eigen::Index>(images_.size());
  if (n == 0) fail(ErrorKind::InvalidBeta, "beta needs n >= 1 images");
  for (const auto& m : images_) {
    if (m.rows() != n || m.cols() != n) fail(ErrorKind::InvalidBeta, "each image must be n x n");
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (m.data()[i] > 1) fail(ErrorKind::InvalidBeta, "image entry outside GF(2)");
  }
  if (rank(field_, flat_rows(images_)) != images_.size()) {
    fail(ErrorKind::InvalidBeta, "beta is not injective: images are linearly dependent");
  }
}

Matrix BetaMap::at(const Vector& y) const {
  if (y.size() != n()) fail(ErrorKind::DimensionMismatch, "argument length differs from n");
  Matrix m = zeros(n(), n());
  for (Eigen::Index j = 0; j < n(); ++j) {
    if (y(j) != 0) m = add(field_, m, scale(field_, y(j), images_[static_cast<std::size_t>(j)]));
  }
  return m;
}

Vector BetaMap::apply(const Vector& y, const Vector& x) const { return multiply(field_, at(y), x); }

DualArc arc_from_beta(const BetaMap& beta) {
  const Field& f = beta.field();
  const Eigen::Index n = beta.n();
  const Subspace domain = span(f, n, identity(n));
  std::vector<Subspace> members;
  for_each_vector(domain, [&](const Vector& y) {
    // Rows (e_i, beta(y) e_i) = [I | beta(y)^T].
    Matrix basis(n, 2 * n);
    basis << identity(n), beta.at(y).transpose();
    members.push_back(Subspace::from_canonical(f, basis));
  });
  return DualArc(std::move(members));
}

std::optional<BetaMap> beta_from_arc(const DualArc& arc) {
  const Field& f = arc.field();
  const Eigen::Index n = arc.member_dim();
  if (f.order() != 2 || arc.ambient_dim() != 2 * n || arc.size() != (std::size_t{1} << n)) return std::nullopt;
  std::vector<Matrix> graphs;
  for (const auto& s : arc.members()) {
    if (s.basis().leftCols(n) != identity(n)) return std::nullopt;
    graphs.push_back(s.basis().rightCols(n).transpose());
  }
  std::vector<Matrix> images;
  for (Eigen::Index j = 0; j < n; ++j) images.push_back(graphs[std::size_t{1} << j]);
  std::optional<BetaMap> beta;
  try {
    beta.emplace(f, images);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    Vector y(n);
    for (Eigen::Index j = 0; j < n; ++j) y(j) = (idx >> j) & 1u;
    if (beta->at(y) != graphs[idx]) return std::nullopt;
  }
  return beta;
}

BetaTransforms beta_transforms(const BetaMap& beta, const std::optional<Matrix>& reference) {
  const Field& f = beta.field();
  const Eigen::Index n = beta.n();
  const Matrix g = reference ? *reference : identity(n);
  if (g.rows() != n || g.cols() != n || g != g.transpose()) {
    fail(ErrorKind::DegenerateReferenceForm, "reference form must be a symmetric n x n gram");
  }
  const auto g_inv = inverse(f, g);
  if (!g_inv) fail(ErrorKind::DegenerateReferenceForm, "reference form is degenerate");

  // beta^o(e_i) has column j equal to beta(e_j) e_i.
  std::vector<Matrix> o_images;
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) m.col(j) = beta.images()[static_cast<std::size_t>(j)].col(i);
    o_images.push_back(std::move(m));
  }
  // <x, F y> = <F^t x, y> with <u, v> = u^T G v gives F^t = G^-1 F^T G.
  std::vector<Matrix> t_images;
  for (const auto& m : beta.images()) t_images.push_back(multiply(f, multiply(f, *g_inv, Matrix(m.transpose())), g));

  BetaTransforms out{std::nullopt, BetaMap(f, std::move(t_images)), false, false};
  try {
    out.o.emplace(f, std::move(o_images));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidBeta) throw;
  }
  out.is_symmetric = out.o && *out.o == beta;
  if (out.is_symmetric) {
    bool alternating = true;
    if (n <= 12) {
      for_each_vector(span(f, n, identity(n)), [&](const Vector& x) {
        if (alternating && !beta.apply(x, x).isZero()) alternating = false;
      });
    } else {
      // For symmetric beta over GF(2), beta(x)(x) is additive in x.
      for (Eigen::Index i = 0; i < n && alternating; ++i) alternating = beta.images()[static_cast<std::size_t>(i)].col(i).isZero();
    }
    out.is_alternating = alternating;
  }
  return out;
}

BetaMap yoshiara_beta(int n, int h) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (std::gcd(h, n) != 1) fail(ErrorKind::NotCoprime, "h must be coprime to n");
  const Field big = Field::make(2, static_cast<std::uint32_t>(n));
  const Field f2 = Field::make(2, 1);
  std::vector<Matrix> images;
  for (int j = 0; j < n; ++j) {
    const Elem y = Elem{1} << j;
    const Elem y_h = big.frobenius(y, h);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const Elem x = Elem{1} << i;
      m.col(i) = flatten(big, big.add(big.mul(big.frobenius(x, -2 * h), y), big.mul(x, y_h)));
    }
    images.push_back(std::move(m));
  }
  return BetaMap(f2, std::move(images));
}

FormSpec split_symplectic_form(const Field& f, Eigen::Index n) {
  Matrix g = zeros(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = f.neg(1);
  }
  return make_bilinear(FormKind::AlternatingBilinear, f, g);
}

}  // namespace dho
