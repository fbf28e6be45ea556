#include <random>
#include <vector>

#include "doctest.h"

#include "dho/dho.hpp"

using namespace dho;

namespace {

Vector unit(Eigen::Index n, Eigen::Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

std::vector<Vector> all_vectors(const Field& f, Eigen::Index n) { return enumerate_vectors(span(f, n, identity(n))); }

const std::vector<PolarFamily> kFamilies = {PolarFamily::HyperbolicQ, PolarFamily::ParabolicQ, PolarFamily::EllipticQ,
                                            PolarFamily::Symplectic, PolarFamily::HermitianOdd,
                                            PolarFamily::HermitianEven};

bool is_hermitian(PolarFamily f) { return f == PolarFamily::HermitianOdd || f == PolarFamily::HermitianEven; }

}  // namespace

TEST_CASE("symplectic model on V(4,2)") {
  const Field f2 = Field::make(2, 1);
  const FormSpec w = standard_form(PolarFamily::Symplectic, 2, f2);
  CHECK(w.kind == FormKind::AlternatingBilinear);
  Matrix expect = zeros(4, 4);
  expect(0, 1) = expect(1, 0) = expect(2, 3) = expect(3, 2) = 1;
  CHECK(w.gram == expect);
  CHECK(eval_bilinear(w, unit(4, 0), unit(4, 1)) == 1);
  CHECK(eval_bilinear(w, unit(4, 0), unit(4, 2)) == 0);
}

TEST_CASE("symplectic model is skew in odd characteristic") {
  const Field f3 = Field::make(3, 1);
  const FormSpec w = standard_form(PolarFamily::Symplectic, 2, f3);
  for (const auto& u : all_vectors(f3, 4))
    for (const auto& v : all_vectors(f3, 4)) REQUIRE(eval_bilinear(w, u, v) == f3.neg(eval_bilinear(w, v, u)));
}

TEST_CASE("hermitian model over GF(4)") {
  const Field f4 = Field::make(2, 2);
  const FormSpec h = standard_form(PolarFamily::HermitianOdd, 2, f4);
  CHECK(h.kind == FormKind::Hermitian);
  CHECK(h.ambient_dim == 4);
  CHECK(h.gram == identity(4));
  CHECK(h.conj_exponent == 1);
  CHECK_THROWS_AS(standard_form(PolarFamily::HermitianOdd, 2, Field::make(2, 3)), Error);
}

TEST_CASE("elliptic model Q-(5,2) has 27 singular points") {
  const Field f2 = Field::make(2, 1);
  const FormSpec q = standard_form(PolarFamily::EllipticQ, 2, f2);
  CHECK(q.ambient_dim == 6);
  // x0^2 + x0 x1 + x1^2 + x2 x3 + x4 x5
  int singular = 0;
  for (const auto& v : all_vectors(f2, 6)) {
    if (v.isZero()) continue;
    const Elem oracle = (v(0) * v(0) + v(0) * v(1) + v(1) * v(1) + v(2) * v(3) + v(4) * v(5)) % 2;
    REQUIRE(eval_quadratic(q, v) == oracle);
    singular += oracle == 0;
  }
  CHECK(singular == 27);
}

TEST_CASE("singular point counts match the classical formulas") {
  // Points of Q+(3,q): (q+1)^2; Q(4,q): (q^4-1)/(q-1); Q-(5,q): (q^3+1)(q+1).
  for (std::uint64_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    auto count = [&](PolarFamily fam, int n) {
      const FormSpec form = standard_form(fam, n, f);
      int c = 0;
      for (const auto& p : enumerate_points(span(f, form.ambient_dim, identity(form.ambient_dim))))
        c += is_isotropic_vector(form, p);
      return c;
    };
    CHECK(count(PolarFamily::HyperbolicQ, 2) == static_cast<int>((q + 1) * (q + 1)));
    CHECK(count(PolarFamily::ParabolicQ, 2) == static_cast<int>((q * q * q * q - 1) / (q - 1)));
    CHECK(count(PolarFamily::EllipticQ, 2) == static_cast<int>((q * q * q + 1) * (q + 1)));
  }
}

TEST_CASE("elliptic binary form is irreducible") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    const auto [c0, c1] = smallest_irreducible_quadratic(f);
    for (Elem x = 0; x < f.order(); ++x) REQUIRE(f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) != 0);
  }
}

TEST_CASE("polarizing the hyperbolic model gives the symplectic gram") {
  const Field f2 = Field::make(2, 1);
  const FormSpec b = polarize(standard_form(PolarFamily::HyperbolicQ, 2, f2));
  CHECK(b.kind == FormKind::AlternatingBilinear);
  CHECK(b.gram == standard_form(PolarFamily::Symplectic, 2, f2).gram);
}

TEST_CASE("polarization identity holds pointwise") {
  for (std::uint64_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (PolarFamily fam : {PolarFamily::HyperbolicQ, PolarFamily::ParabolicQ, PolarFamily::EllipticQ}) {
      for (int n : {1, 2}) {
        const FormSpec form = standard_form(fam, n, f);
        if (form.ambient_dim > 6 || (q == 4 && form.ambient_dim > 5)) continue;
        const FormSpec b = polarize(form);
        const auto vs = all_vectors(f, form.ambient_dim);
        for (const auto& u : vs) {
          if (f.characteristic() == 2) REQUIRE(eval_bilinear(b, u, u) == 0);
          for (const auto& v : vs) {
            const Elem lhs = eval_bilinear(b, u, v);
            const Elem rhs = f.sub(f.sub(eval_quadratic(form, add(f, u, v)), eval_quadratic(form, u)), eval_quadratic(form, v));
            REQUIRE(lhs == rhs);
            REQUIRE(eval_bilinear(form, u, v) == lhs);
          }
        }
      }
    }
  }
}

TEST_CASE("hermitian form is sesquilinear") {
  const Field f4 = Field::make(2, 2);
  for (Eigen::Index n : {2, 3, 4}) {
    Matrix g = identity(n);
    if (n >= 2) g(0, 1) = 2, g(1, 0) = f4.frobenius(2, 1);
    const FormSpec h = make_hermitian(f4, g);
    const auto vs = all_vectors(f4, n);
    const std::size_t step = n == 4 ? 7 : 1;
    for (std::size_t i = 0; i < vs.size(); i += step)
      for (std::size_t j = 0; j < vs.size(); j += step)
        for (Elem lambda = 0; lambda < 4; ++lambda) {
          const Elem lhs = eval_bilinear(h, vs[i], scale(f4, lambda, vs[j]));
          REQUIRE(lhs == f4.mul(f4.frobenius(lambda, 1), eval_bilinear(h, vs[i], vs[j])));
          REQUIRE(eval_bilinear(h, scale(f4, lambda, vs[i]), vs[j]) == f4.mul(lambda, eval_bilinear(h, vs[i], vs[j])));
          REQUIRE(eval_bilinear(h, vs[j], vs[i]) == f4.frobenius(eval_bilinear(h, vs[i], vs[j]), 1));
        }
  }
}

TEST_CASE("form validation") {
  const Field f2 = Field::make(2, 1), f4 = Field::make(2, 2);
  Matrix not_skew = zeros(2, 2);
  not_skew(0, 1) = 1;
  CHECK_THROWS_AS(make_bilinear(FormKind::AlternatingBilinear, f2, not_skew), Error);
  Matrix diag = identity(2);
  CHECK_THROWS_AS(make_bilinear(FormKind::AlternatingBilinear, f2, diag), Error);
  Matrix bad_herm = identity(2);
  bad_herm(0, 1) = 2;
  bad_herm(1, 0) = 2;  // conj(2) = 3 in GF(4)
  CHECK_THROWS_AS(make_hermitian(f4, bad_herm), Error);
  CHECK_THROWS_AS(make_hermitian(Field::make(2, 3), identity(2)), Error);
  CHECK_THROWS_AS(eval_quadratic(standard_form(PolarFamily::Symplectic, 1, f2), unit(2, 0)), Error);
  CHECK_THROWS_AS(eval_bilinear(standard_form(PolarFamily::Symplectic, 1, f2), unit(3, 0), unit(2, 0)), Error);
}

TEST_CASE("forms vanish at zero") {
  for (PolarFamily fam : kFamilies) {
    const Field f = is_hermitian(fam) ? Field::of_order(4) : Field::of_order(3);
    const FormSpec form = standard_form(fam, 2, f);
    const Vector z = Vector::Zero(form.ambient_dim);
    if (form.kind == FormKind::Quadratic) CHECK(eval_quadratic(form, z) == 0);
    CHECK(eval_bilinear(form, z, unit(form.ambient_dim, 0)) == 0);
  }
}

TEST_CASE("isotropy examples") {
  const Field f2 = Field::make(2, 1);
  const FormSpec hq = standard_form(PolarFamily::HyperbolicQ, 2, f2);
  CHECK(is_totally_isotropic(hq, Subspace(f2, 4)));
  CHECK(is_totally_isotropic(hq, span(f2, 4, std::vector<Vector>{unit(4, 0)})));
  CHECK(is_totally_isotropic(hq, span(f2, 4, std::vector<Vector>{unit(4, 0), unit(4, 2)})));
  CHECK_FALSE(is_totally_isotropic(hq, span(f2, 4, std::vector<Vector>{unit(4, 0), unit(4, 1)})));
}

TEST_CASE("total isotropy matches a pointwise oracle and is closed downward") {
  std::mt19937_64 rng(31);
  for (PolarFamily fam : kFamilies) {
    const Field f = is_hermitian(fam) ? Field::of_order(4) : Field::of_order(2);
    const FormSpec form = standard_form(fam, 2, f);
    for (int trial = 0; trial < 80; ++trial) {
      const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 3);
      const Subspace s = span(f, form.ambient_dim, random_matrix(f, r, form.ambient_dim, rng));
      bool oracle = true;
      const auto vs = enumerate_vectors(s);
      for (const auto& u : vs) {
        if (form.kind == FormKind::Quadratic && eval_quadratic(form, u) != 0) oracle = false;
        for (const auto& v : vs)
          if (eval_bilinear(form, u, v) != 0) oracle = false;
      }
      REQUIRE(is_totally_isotropic(form, s) == oracle);
      if (oracle) {
        for (const auto& v : vs) CHECK(is_totally_isotropic(form, span(f, form.ambient_dim, std::vector<Vector>{v})));
      }
    }
  }
}

TEST_CASE("perp examples on V(4,2)") {
  const Field f2 = Field::make(2, 1);
  const FormSpec w = standard_form(PolarFamily::Symplectic, 2, f2);
  CHECK(perp(w, Subspace(f2, 4)) == span(f2, 4, identity(4)));
  CHECK(perp(w, span(f2, 4, std::vector<Vector>{unit(4, 0)})) ==
        span(f2, 4, std::vector<Vector>{unit(4, 0), unit(4, 2), unit(4, 3)}));
}

TEST_CASE("perp is an involution on every subspace of V(4,2)") {
  const Field f2 = Field::make(2, 1);
  const FormSpec w = standard_form(PolarFamily::Symplectic, 2, f2);
  // Every subspace of V(4,2) is spanned by at most 4 of its points; all 2^16 subsets of
  // the 16 vectors would be wasteful, so build by closing spans of points.
  std::vector<Subspace> subs{Subspace(f2, 4)};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& p : enumerate_points(span(f2, 4, identity(4)))) {
      Subspace bigger = subspace_sum(subs[i], span(f2, 4, std::vector<Vector>{p}));
      if (std::find(subs.begin(), subs.end(), bigger) == subs.end()) subs.push_back(std::move(bigger));
    }
  }
  CHECK(subs.size() == 1 + 15 + 35 + 15 + 1);
  for (const auto& s : subs) {
    const Subspace p = perp(w, s);
    CHECK(p.dim() + s.dim() == 4);
    CHECK(perp(w, p) == s);
  }
}

TEST_CASE("perp refuses degenerate polarities") {
  const Field f2 = Field::make(2, 1);
  const FormSpec par = standard_form(PolarFamily::ParabolicQ, 2, f2);
  CHECK_FALSE(is_nondegenerate(par));
  try {
    perp(par, Subspace(f2, 5));
    FAIL("expected DegeneratePolarity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegeneratePolarity);
  }
  CHECK(orthogonal(par, Subspace(f2, 5)).dim() == 5);
  CHECK(is_nondegenerate(standard_form(PolarFamily::ParabolicQ, 2, Field::make(3, 1))));
}

TEST_CASE("Yoshiara quadratic form evaluates Tr(a b^2)") {
  const auto y = yoshiara(3, 1);
  const Field big = Field::make(2, 3);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      Vector v(6);
      v << flatten(big, a), flatten(big, b);
      REQUIRE(eval_quadratic(y.quadratic, v) == big.trace(big.mul(a, big.mul(b, b))));
    }
  Vector v(6);
  v << flatten(big, 1), flatten(big, big.x());
  CHECK(eval_quadratic(y.quadratic, v) == big.trace(big.mul(big.x(), big.x())));
}

TEST_CASE("Yoshiara bilinear form is the polarization of the quadratic form") {
  const auto y = yoshiara(3, 1);
  const Field f2 = Field::make(2, 1), big = Field::make(2, 3);
  const auto vs = all_vectors(f2, 6);
  bool printed_matches = true;
  for (const auto& u : vs)
    for (const auto& v : vs) {
      const Elem pol = eval_quadratic(y.quadratic, add(f2, u, v)) ^ eval_quadratic(y.quadratic, u) ^
                       eval_quadratic(y.quadratic, v);
      REQUIRE(eval_bilinear(y.bilinear, u, v) == pol);
      // Printed expression Tr(a d^2 - b c^2) with u = (a, b), v = (c, d).
      const Elem a = unflatten(big, u, 0), b = unflatten(big, u, 3), c = unflatten(big, v, 0), d = unflatten(big, v, 3);
      const Elem printed = big.trace(big.add(big.mul(a, big.mul(d, d)), big.mul(b, big.mul(c, c))));
      if (printed != pol) printed_matches = false;
    }
  // The polarization is Tr(a d^2 + c b^2); the printed form differs from it.
  CHECK_FALSE(printed_matches);
}

TEST_CASE("form kind names round trip") {
  for (FormKind k : {FormKind::Quadratic, FormKind::AlternatingBilinear, FormKind::SymmetricBilinear, FormKind::Hermitian})
    CHECK(form_kind_from_string(to_string(k)) == k);
  for (PolarFamily fam : kFamilies) CHECK(polar_family_from_string(to_string(fam)) == fam);
  CHECK(polar_family_from_string("W") == PolarFamily::Symplectic);
  CHECK(polar_family_from_string("Q-") == PolarFamily::EllipticQ);
  CHECK_THROWS_AS(polar_family_from_string("X"), Error);
}
