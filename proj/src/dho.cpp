#include "dho/dho.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace dho {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "malformed fraction '" + s + "'");
  }
}

DualArc::DualArc(std::vector<Subspace> members) : members_(std::move(members)) {
  if (members_.empty()) fail(ErrorKind::HeterogeneousMembers, "a dual arc needs at least one member");
  const Subspace& first = members_.front();
  std::set<Subspace> seen;
  for (const auto& m : members_) {
    if (!(m.field() == first.field()) || m.ambient_dim() != first.ambient_dim() || m.dim() != first.dim()) {
      fail(ErrorKind::HeterogeneousMembers, "members differ in field, ambient or member dimension");
    }
    if (!seen.insert(m).second) fail(ErrorKind::HeterogeneousMembers, "duplicate member");
  }
}

bool DualArc::same_members(const DualArc& other) const {
  if (size() != other.size()) return false;
  std::set<Subspace> a(members_.begin(), members_.end());
  std::set<Subspace> b(other.members_.begin(), other.members_.end());
  return a == b;
}

ArcReport dual_arc_verify(const DualArc& arc) {
  const std::size_t m = arc.size();
  ArcReport report;
  std::vector<std::vector<std::optional<Subspace>>> meet(m, std::vector<std::optional<Subspace>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Subspace x = intersect(arc[i], arc[j]);
      if (x.dim() != 1) {
        report.violations.push_back({Violation::Kind::PairDimension, {i, j}, x.dim()});
        continue;
      }
      meet[i][j] = x;
      meet[j][i] = std::move(x);
    }
  std::set<std::vector<std::size_t>> triples;
  for (std::size_t i = 0; i < m; ++i) {
    std::map<Subspace, std::size_t> points;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || !meet[i][j]) continue;
      auto [it, inserted] = points.emplace(*meet[i][j], j);
      if (!inserted) {
        std::vector<std::size_t> t{i, it->second, j};
        std::sort(t.begin(), t.end());
        triples.insert(std::move(t));
      }
    }
  }
  for (const auto& t : triples) report.violations.push_back({Violation::Kind::SharedPoint, t, 1});
  report.is_dual_arc = report.violations.empty();
  return report;
}

BigInt dho_size(int n, std::uint64_t q) {
  if (n < 1 || q < 2) fail(ErrorKind::InvalidArgument, "dho_size needs n >= 1 and q >= 2");
  BigInt pow = 1;
  for (int i = 0; i < n; ++i) pow *= q;
  return (pow - 1) / (q - 1) + 1;
}

bool is_dho(const DualArc& arc, const ArcReport& report) {
  if (!report.is_dual_arc) fail(ErrorKind::NotADualArc, "family fails the dual arc axioms");
  return BigInt(arc.size()) == dho_size(static_cast<int>(arc.member_dim()), arc.field().order());
}

InnerDistribution inner_distribution(const std::vector<std::vector<int>>& meet_dims, int n) {
  InnerDistribution dist;
  dist.a.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  const std::size_t m = meet_dims.size();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ++counts[static_cast<std::size_t>(n - meet_dims[i][j])];
  for (std::size_t i = 0; i < counts.size(); ++i) dist.a[i] = Rational(counts[i], m);
  return dist;
}

InnerDistribution inner_distribution(const DualArc& arc) {
  const std::size_t m = arc.size();
  const int n = static_cast<int>(arc.member_dim());
  std::vector<std::vector<int>> dims(m, std::vector<int>(m, n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) dims[i][j] = dims[j][i] = static_cast<int>(intersect(arc[i], arc[j]).dim());
  return inner_distribution(dims, n);
}

Rational vanhove_sum(const InnerDistribution& dist, std::uint64_t t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "t must be positive");
  Rational sum = 0;
  Rational factor = 1;
  const Rational step = Rational(-1) / Rational(t);
  for (const auto& a : dist.a) {
    sum += factor * a;
    factor *= step;
  }
  return sum;
}

BigInt even_rank_bound(PolarFamily family, int n, std::uint64_t base_q) {
  if (n < 1 || n % 2 != 0) fail(ErrorKind::OddRank, "the dual arc bound needs an even rank");
  const auto t = polar_parameters(family, base_q).second;
  BigInt bound = 1;
  for (int i = 0; i < n - 1; ++i) bound *= t;
  return bound + 1;
}

BigInt even_rank_bound(const PolarSpace& space) { return even_rank_bound(space.family, space.rank, space.base_q); }

std::vector<BoundRow> bound_table(int n, std::uint64_t q) {
  if (n < 1 || n % 2 != 0) fail(ErrorKind::OddRank, "the bound table needs an even rank");
  if (!prime_power(q)) fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  auto power = [](std::uint64_t base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  std::vector<BoundRow> rows;
  for (auto family : {PolarFamily::HyperbolicQ, PolarFamily::ParabolicQ, PolarFamily::EllipticQ,
                      PolarFamily::Symplectic, PolarFamily::HermitianOdd, PolarFamily::HermitianEven}) {
    BoundRow row;
    row.family = family;
    const auto [s, t] = polar_parameters(family, q);
    row.parameters = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
    row.e = std::string(parameter_exponent(family));
    row.derived_bound = even_rank_bound(family, n, q);
    const bool hermitian = family == PolarFamily::HermitianOdd || family == PolarFamily::HermitianEven;
    row.dho_size = dho_size(n, hermitian ? q * q : q);
    switch (family) {
      case PolarFamily::HyperbolicQ:
        row.notation = "Q+(2n-1,q)";
        row.table_expression = "2";
        row.table_value = BigInt(2);
        break;
      case PolarFamily::ParabolicQ:
        row.notation = "Q(2n,q)";
        row.table_expression = "q^(n-1)+1";
        row.table_value = power(q, n - 1) + 1;
        break;
      case PolarFamily::EllipticQ:
        row.notation = "Q-(2n+1,q)";
        row.table_expression = "q^(2n-2)+1";
        row.table_value = power(q, 2 * n - 2) + 1;
        break;
      case PolarFamily::Symplectic:
        row.notation = "W(2n-1,q)";
        row.table_expression = "q^(n-1)+1";
        row.table_value = power(q, n - 1) + 1;
        break;
      case PolarFamily::HermitianOdd:
        row.notation = "H(2n-1,q^2)";
        row.table_expression = "q^(n-1)+1";
        row.table_value = power(q, n - 1) + 1;
        break;
      case PolarFamily::HermitianEven:
        row.notation = "H(2n,q^2)";
        row.table_expression = "q^(3(n-1)/2)+1";
        if ((3 * (n - 1)) % 2 == 0) row.table_value = power(q, 3 * (n - 1) / 2) + 1;
        break;
    }
    row.excluded = row.dho_size > row.derived_bound;
    row.discrepancy = !row.table_value || *row.table_value != row.derived_bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector flatten(const Field& big, Elem x) {
  Vector v(big.degree());
  const auto c = big.coefficients(x);
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return v;
}

Elem unflatten(const Field& big, const Vector& v, Eigen::Index offset) {
  std::vector<std::uint32_t> c(big.degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = v(offset + static_cast<Eigen::Index>(i));
  return big.from_coefficients(c);
}

YoshiaraFamily yoshiara(int n, int h) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (std::gcd(h, n) != 1) fail(ErrorKind::NotCoprime, "h must be coprime to n");
  const Field big = Field::make(2, static_cast<std::uint32_t>(n));
  const Field f2 = Field::make(2, 1);
  const Eigen::Index dim = 2 * n;

  std::vector<Subspace> members;
  for (Elem t = 0; t < big.order(); ++t) {
    const Elem t_h = big.frobenius(t, h);
    Matrix basis(n, dim);
    for (int i = 0; i < n; ++i) {
      const Elem x = Elem{1} << i;
      const Elem y = big.add(big.mul(big.frobenius(x, -2 * h), t), big.mul(x, t_h));
      basis.row(i) << flatten(big, x).transpose(), flatten(big, y).transpose();
    }
    members.push_back(span(f2, dim, basis));
  }

  auto q = [&](const Vector& v) { return big.trace(big.mul(unflatten(big, v, 0), big.frobenius(unflatten(big, v, n), h))); };
  Matrix upper = zeros(dim, dim);
  Vector diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector ei = Vector::Zero(dim);
    ei(i) = 1;
    diag(i) = q(ei);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      Vector ej = Vector::Zero(dim);
      ej(j) = 1;
      upper(i, j) = q(add(f2, ei, ej)) ^ q(ei) ^ q(ej);
    }
  }
  FormSpec quadratic = make_quadratic(f2, upper, diag);
  FormSpec bilinear = polarize(quadratic);
  return YoshiaraFamily{DualArc(std::move(members)), std::move(quadratic), std::move(bilinear)};
}

DualArc perp_arc(const DualArc& arc, const FormSpec& form) {
  if (arc.ambient_dim() != form.ambient_dim || !(arc.field() == form.field)) {
    fail(ErrorKind::DimensionMismatch, "form and arc live in different spaces");
  }
  std::vector<Subspace> out;
  out.reserve(arc.size());
  for (const auto& s : arc.members()) out.push_back(perp(form, s));
  return DualArc(std::move(out));
}

bool doubly_dual_check(const DualArc& arc, const FormSpec& form) {
  if (2 * arc.member_dim() != arc.ambient_dim()) {
    fail(ErrorKind::DimensionMismatch, "doubly dual check needs members of half the ambient dimension");
  }
  const DualArc dual = perp_arc(arc, form);
  const ArcReport report = dual_arc_verify(dual);
  return report.is_dual_arc && is_dho(dual, report);
}

namespace {

constexpr std::uint64_t kMaxFormScan = std::uint64_t{1} << 20;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Matrix skew_from_pairs(const Field& f, Eigen::Index n, const Vector& coeffs) {
  Matrix g = zeros(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++k) {
      g(i, j) = coeffs(k);
      g(j, i) = f.neg(coeffs(k));
    }
  return g;
}

Vector pairs_from_skew(const Matrix& g) {
  const Eigen::Index n = g.rows();
  Vector v(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) v(k++) = g(i, j);
  return v;
}

}  // namespace

InvariantFormResult find_invariant_alternating_form(const DualArc& arc) {
  const Field& f = arc.field();
  const Eigen::Index n = arc.ambient_dim();
  const Eigen::Index unknowns = n * (n - 1) / 2;
  InvariantFormResult result;

  // One equation B(u, v) = 0 per pair of basis rows of each member.
  std::vector<Vector> equations;
  for (const auto& s : arc.members()) {
    for (Eigen::Index a = 0; a < s.dim(); ++a)
      for (Eigen::Index b = a + 1; b < s.dim(); ++b) {
        Vector eq(unknowns);
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j, ++k) {
            eq(k) = f.sub(f.mul(s.basis()(a, i), s.basis()(b, j)), f.mul(s.basis()(a, j), s.basis()(b, i)));
          }
        equations.push_back(std::move(eq));
      }
  }
  Matrix system(static_cast<Eigen::Index>(equations.size()), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r) system.row(static_cast<Eigen::Index>(r)) = equations[r].transpose();
  const Subspace solutions = equations.empty() ? span(f, unknowns, identity(unknowns)) : kernel(f, system);
  for (Eigen::Index i = 0; i < solutions.dim(); ++i) result.solution_basis.push_back(skew_from_pairs(f, n, solutions.row(i)));

  const Eigen::Index d = solutions.dim();
  // Size of the solution space, saturating just above the scan limit.
  std::uint64_t total = 1;
  bool over = false;
  for (Eigen::Index i = 0; i < d && !over; ++i) {
    total *= f.order();
    over = total > kMaxFormScan;
  }
  result.exhaustive = !over;
  if (n % 2 != 0 || d == 0) {
    // No nondegenerate alternating form exists in odd dimension; d = 0 leaves only zero.
    result.exhaustive = true;
    result.examined = total;
    return result;
  }

  auto try_coeffs = [&](const std::vector<Elem>& c) {
    Vector v = Vector::Zero(unknowns);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (c[static_cast<std::size_t>(i)] != 0) v = add(f, v, scale(f, c[static_cast<std::size_t>(i)], solutions.row(i)));
    }
    const Matrix g = skew_from_pairs(f, n, v);
    ++result.examined;
    if (rank(f, g) == static_cast<std::size_t>(n)) {
      result.form = make_bilinear(FormKind::AlternatingBilinear, f, g);
      return true;
    }
    return false;
  };

  std::vector<Elem> c(static_cast<std::size_t>(d), 0);
  if (!over) {
    for (std::uint64_t count = 0; count < total; ++count) {
      if (try_coeffs(c)) break;
      for (auto& digit : c) {
        digit = digit + 1 == f.order() ? 0 : digit + 1;
        if (digit != 0) break;
      }
    }
  } else {
    std::uint64_t state = 0x5eed;
    for (std::uint64_t count = 0; count < kMaxFormScan; ++count) {
      for (auto& digit : c) digit = static_cast<Elem>(splitmix64(state) % f.order());
      if (try_coeffs(c)) break;
    }
    std::uint64_t full = 1;
    for (Eigen::Index i = 0; i < d; ++i) {
      full = full > std::numeric_limits<std::uint64_t>::max() / f.order() ? std::numeric_limits<std::uint64_t>::max()
                                                                            : full * f.order();
    }
    result.shortfall = full - std::min(full, result.examined);
  }
  if (result.form) {
    // A hit ends the scan; the exhaustiveness flag only matters for "none".
    result.shortfall = 0;
  }
  return result;
}

bool in_solution_space(const InvariantFormResult& result, const Field& f, const Matrix& gram) {
  const Eigen::Index unknowns = gram.rows() * (gram.rows() - 1) / 2;
  std::vector<Vector> rows;
  for (const auto& g : result.solution_basis) rows.push_back(pairs_from_skew(g));
  return contains(span(f, unknowns, rows), pairs_from_skew(gram));
}

}  // namespace dho
