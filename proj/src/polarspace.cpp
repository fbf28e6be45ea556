#include "dho/polarspace.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace dho {

std::pair<std::uint64_t, std::uint64_t> polar_parameters(PolarFamily family, std::uint64_t q) {
  switch (family) {
    case PolarFamily::HyperbolicQ: return {q, 1};
    case PolarFamily::ParabolicQ: return {q, q};
    case PolarFamily::EllipticQ: return {q, q * q};
    case PolarFamily::Symplectic: return {q, q};
    case PolarFamily::HermitianOdd: return {q * q, q};
    case PolarFamily::HermitianEven: return {q * q, q * q * q};
  }
  return {0, 0};
}

int ambient_dimension(PolarFamily family, int rank) {
  switch (family) {
    case PolarFamily::HyperbolicQ:
    case PolarFamily::Symplectic:
    case PolarFamily::HermitianOdd: return 2 * rank;
    case PolarFamily::ParabolicQ:
    case PolarFamily::HermitianEven: return 2 * rank + 1;
    case PolarFamily::EllipticQ: return 2 * rank + 2;
  }
  return 0;
}

std::string_view parameter_exponent(PolarFamily family) {
  switch (family) {
    case PolarFamily::HyperbolicQ: return "0";
    case PolarFamily::ParabolicQ: return "1";
    case PolarFamily::EllipticQ: return "2";
    case PolarFamily::Symplectic: return "1";
    case PolarFamily::HermitianOdd: return "1/2";
    case PolarFamily::HermitianEven: return "3/2";
  }
  return "";
}

PolarSpace polar_space(PolarFamily family, int rank, std::uint64_t base_q) {
  if (rank < 1) fail(ErrorKind::InvalidArgument, "rank must be at least 1");
  if (!prime_power(base_q)) fail(ErrorKind::InvalidArgument, std::to_string(base_q) + " is not a prime power");
  const bool hermitian = family == PolarFamily::HermitianOdd || family == PolarFamily::HermitianEven;
  const Field f = Field::of_order(hermitian ? base_q * base_q : base_q);
  PolarSpace space;
  space.family = family;
  space.rank = rank;
  space.base_q = base_q;
  std::tie(space.s, space.t) = polar_parameters(family, base_q);
  space.form = standard_form(family, rank, f);
  return space;
}

std::string notation(const PolarSpace& space) {
  const int proj = static_cast<int>(space.ambient_dim()) - 1;
  const std::string args = "(" + std::to_string(proj) + "," + std::to_string(space.field().order()) + ")";
  switch (space.family) {
    case PolarFamily::HyperbolicQ: return "Q+" + args;
    case PolarFamily::ParabolicQ: return "Q" + args;
    case PolarFamily::EllipticQ: return "Q-" + args;
    case PolarFamily::Symplectic: return "W" + args;
    case PolarFamily::HermitianOdd:
    case PolarFamily::HermitianEven: return "H" + args;
  }
  return args;
}

std::uint64_t predicted_generator_count(const PolarSpace& space) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1, s_pow = 1;
  for (int i = 0; i < space.rank; ++i) {
    if (i > 0) s_pow = s_pow > kMax / space.s ? kMax : s_pow * space.s;
    const std::uint64_t term = (s_pow == kMax || s_pow > (kMax - 1) / space.t) ? kMax : space.t * s_pow + 1;
    count = (term == kMax || count > kMax / term) ? kMax : count * term;
  }
  return count;
}

namespace {

// Basis of a complement of u inside w (u ⊆ w): rows of w reduced against
// the pivots of u, re-echelonized.
Subspace complement_in(const Subspace& u, const Subspace& w) {
  const Field& f = u.field();
  std::vector<Eigen::Index> u_pivots;
  for (Eigen::Index i = 0; i < u.dim(); ++i) {
    Eigen::Index p = 0;
    while (u.basis()(i, p) == 0) ++p;
    u_pivots.push_back(p);
  }
  Matrix reduced = w.basis();
  for (Eigen::Index r = 0; r < reduced.rows(); ++r) {
    for (Eigen::Index i = 0; i < u.dim(); ++i) {
      const Elem c = reduced(r, u_pivots[static_cast<std::size_t>(i)]);
      if (c == 0) continue;
      const Elem nc = f.neg(c);
      for (Eigen::Index j = 0; j < reduced.cols(); ++j) reduced(r, j) = f.add(reduced(r, j), f.mul(nc, u.basis()(i, j)));
    }
  }
  return span(f, w.ambient_dim(), reduced);
}

void extend(const FormSpec& form, int rank, const Subspace& u,
            std::vector<std::unordered_set<Subspace, SubspaceHash>>& seen) {
  if (u.dim() == rank) return;
  const Subspace w = orthogonal(form, u);
  const Subspace c = complement_in(u, w);
  const Field& f = form.field;
  for (const Vector& v : enumerate_points(c)) {
    if (!is_isotropic_vector(form, v)) continue;
    Matrix gens(u.dim() + 1, u.ambient_dim());
    gens << u.basis(), v.transpose();
    Subspace next = span(f, u.ambient_dim(), gens);
    auto& level = seen[static_cast<std::size_t>(next.dim())];
    if (!level.insert(next).second) continue;
    extend(form, rank, next, seen);
  }
}

}  // namespace

GeneratorSet enumerate_generators(const PolarSpace& space, std::uint64_t cap) {
  const std::uint64_t predicted = predicted_generator_count(space);
  if (predicted > cap) {
    fail(ErrorKind::EnumerationTooLarge, notation(space) + " has " + std::to_string(predicted) +
                                             " generators, above the cap of " + std::to_string(cap));
  }
  std::vector<std::unordered_set<Subspace, SubspaceHash>> seen(static_cast<std::size_t>(space.rank) + 1);
  extend(space.form, space.rank, Subspace(space.field(), space.ambient_dim()), seen);
  GeneratorSet out{space, {}};
  auto& top = seen[static_cast<std::size_t>(space.rank)];
  out.generators.assign(top.begin(), top.end());
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

bool is_generator(const PolarSpace& space, const Subspace& s) {
  return s.ambient_dim() == space.ambient_dim() && s.field() == space.field() && s.dim() == space.rank &&
         is_totally_isotropic(space.form, s);
}

int dual_polar_distance(const PolarSpace& space, const Subspace& s, const Subspace& t) {
  if (!is_generator(space, s) || !is_generator(space, t)) {
    fail(ErrorKind::NotAGenerator, "distance is defined between generators of " + notation(space));
  }
  return space.rank - static_cast<int>(intersect(s, t).dim());
}

}  // namespace dho
