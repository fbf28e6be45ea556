#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dho/polarspace.hpp"

namespace dho {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders p/q, or p when the denominator is 1.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Duplicate-free family of equidimensional subspaces in one ambient space.
class DualArc {
 public:
  // Throws HeterogeneousMembers for mixed fields, ambient or member
  // dimensions, duplicates, or an empty list.
  explicit DualArc(std::vector<Subspace> members);

  const Field& field() const { return members_.front().field(); }
  Eigen::Index ambient_dim() const { return members_.front().ambient_dim(); }
  Eigen::Index member_dim() const { return members_.front().dim(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }

  // Same members regardless of order.
  bool same_members(const DualArc& other) const;

 private:
  std::vector<Subspace> members_;
};

struct Violation {
  enum class Kind { PairDimension, SharedPoint };
  Kind kind;
  std::vector<std::size_t> indices;  // pair (i, j) or sorted triple
  Eigen::Index intersection_dim = 1;  // for PairDimension
};

struct ArcReport {
  bool is_dual_arc = true;
  std::vector<Violation> violations;
};

// Pairwise intersections must be 1-dimensional and, on each member, the
// points cut out by the other members must be distinct.
ArcReport dual_arc_verify(const DualArc& arc);

// (q^n - 1)/(q - 1) + 1.
BigInt dho_size(int n, std::uint64_t q);

// Throws NotADualArc if the report failed.
bool is_dho(const DualArc& arc, const ArcReport& report);

struct InnerDistribution {
  std::vector<Rational> a;  // a[i] = #{(S,T) : dim(S ∩ T) = n - i} / |D|
};

InnerDistribution inner_distribution(const DualArc& arc);
// Same, from a table of pairwise intersection dimensions (diagonal = n).
InnerDistribution inner_distribution(const std::vector<std::vector<int>>& meet_dims, int n);

// sum_i (-1/t)^i a_i.
Rational vanhove_sum(const InnerDistribution& dist, std::uint64_t t);

// t^(n-1) + 1; throws OddRank.
BigInt even_rank_bound(PolarFamily family, int n, std::uint64_t base_q);
BigInt even_rank_bound(const PolarSpace& space);

struct BoundRow {
  PolarFamily family;
  std::string notation;    // e.g. "W(2n-1,q)"
  std::string parameters;  // instantiated "(s,t)"
  std::string e;
  BigInt derived_bound;
  std::string table_expression;           // the tabulated bound as printed
  std::optional<BigInt> table_value;      // when the printed exponent is integral
  BigInt dho_size;
  bool excluded = false;                  // dho_size > derived_bound
  bool discrepancy = false;               // printed value differs from the derived one
};

// Six rows for even n.  Throws OddRank.
std::vector<BoundRow> bound_table(int n, std::uint64_t base_q);

struct YoshiaraFamily {
  DualArc arc;
  FormSpec quadratic;  // (a, b) -> Tr(a b^(2^h))
  FormSpec bilinear;   // its polarization, Tr(a d^(2^h) + c b^(2^h))
};

// S_t = {(x, x^(2^-2h) t + x t^(2^h))} for t in GF(2^n), flattened to
// V(2n, 2) by polynomial-basis coordinates (x block first).  The members are
// listed in element-index order of t.  Throws NotCoprime.
YoshiaraFamily yoshiara(int n, int h);

// Coordinates of a GF(2^n) element in V(n, 2) and back.
Vector flatten(const Field& big, Elem x);
Elem unflatten(const Field& big, const Vector& v, Eigen::Index offset = 0);

DualArc perp_arc(const DualArc& arc, const FormSpec& form);
bool doubly_dual_check(const DualArc& arc, const FormSpec& form);

struct InvariantFormResult {
  std::optional<FormSpec> form;     // nondegenerate alternating form vanishing on every member
  std::vector<Matrix> solution_basis;  // grams spanning all alternating forms vanishing on the members
  bool exhaustive = false;          // every element of the solution space was examined
  std::uint64_t examined = 0;
  std::uint64_t shortfall = 0;      // solution-space elements not examined (saturating)
};

// Exhaustive over the solution space when it has at most 2^20 elements;
// otherwise a deterministic sample of 2^20 elements.
InvariantFormResult find_invariant_alternating_form(const DualArc& arc);

// Whether the alternating gram lies in the span of the solution basis.
bool in_solution_space(const InvariantFormResult& result, const Field& f, const Matrix& gram);

}  // namespace dho
