#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dho/forms.hpp"

namespace dho {

inline constexpr std::uint64_t kDefaultGeneratorCap = 1'000'000;

// A classical polar space of rank n with parameters (s, t): every
// (n-1)-dimensional totally isotropic subspace lies in exactly t + 1
// generators.  For hermitian rows the ambient field has order base_q^2.
struct PolarSpace {
  PolarFamily family = PolarFamily::Symplectic;
  int rank = 0;
  std::uint64_t base_q = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  FormSpec form;

  const Field& field() const { return form.field; }
  Eigen::Index ambient_dim() const { return form.ambient_dim; }
};

// Exact (s, t) for a family row, without building a field.
std::pair<std::uint64_t, std::uint64_t> polar_parameters(PolarFamily family, std::uint64_t base_q);
// Ambient vector space dimension of the family row at rank n.
int ambient_dimension(PolarFamily family, int rank);
// Printed exponent e of q^e = t relative to base_q ("0", "1", "1/2", ...).
std::string_view parameter_exponent(PolarFamily family);

PolarSpace polar_space(PolarFamily family, int rank, std::uint64_t base_q);

// Classical name such as W(3,2), Q+(5,2) or H(4,4).
std::string notation(const PolarSpace& space);

// prod_{i<n} (t s^i + 1), saturating at UINT64_MAX.
std::uint64_t predicted_generator_count(const PolarSpace& space);

struct GeneratorSet {
  PolarSpace space;
  std::vector<Subspace> generators;  // ascending, duplicate-free
};

// Depth-first extension of totally isotropic flags.  Throws
// EnumerationTooLarge when the predicted count exceeds cap.
GeneratorSet enumerate_generators(const PolarSpace& space, std::uint64_t cap = kDefaultGeneratorCap);

bool is_generator(const PolarSpace& space, const Subspace& s);

// rank - dim(S ∩ T); throws NotAGenerator.
int dual_polar_distance(const PolarSpace& space, const Subspace& s, const Subspace& t);

}  // namespace dho
