#include "dho/gf.hpp"

#include <numeric>
#include <string>

namespace dho {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonDivisorDegree: return "NonDivisorDegree";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::NonCanonicalInput: return "NonCanonicalInput";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::IncompatibleField: return "IncompatibleField";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::DegeneratePolarity: return "DegeneratePolarity";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::HeterogeneousMembers: return "HeterogeneousMembers";
    case ErrorKind::NotADualArc: return "NotADualArc";
    case ErrorKind::OddRank: return "OddRank";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::DegenerateReferenceForm: return "DegenerateReferenceForm";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly unpack(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  Poly c(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

std::uint64_t pack(const Poly& c, std::uint32_t p) {
  std::uint64_t index = 0;
  for (std::size_t i = c.size(); i-- > 0;) index = index * p + c[i];
  return index;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly_in) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const std::uint32_t k = static_cast<std::uint32_t>(poly.size() - 1);
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly divisor = unpack(low, p, d);
      divisor.push_back(1);
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly candidate = unpack(low, p, k);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return candidate;
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxFieldOrder) fail(ErrorKind::FieldTooLarge, "field order exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->order = static_cast<std::uint32_t>(order);
  if (modulus) {
    if (modulus->size() != k + 1 || modulus->back() != 1) {
      fail(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : *modulus) {
      if (c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, *modulus)) fail(ErrorKind::ReducibleModulus, "modulus is reducible");
    impl->modulus = *modulus;
  } else {
    impl->modulus = default_modulus(p, k);
  }

  impl->pow_p.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) impl->pow_p[i] = i == 0 ? 1 : impl->pow_p[i - 1] * p;

  // Log/exp tables from a primitive element found by order testing.
  const std::uint64_t group = order - 1;
  const auto factors = prime_factors(group);
  Poly generator;
  for (std::uint64_t g = 1; g < order; ++g) {
    Poly cand = unpack(g, p, k);
    trim(cand);
    bool primitive = true;
    for (auto r : factors) {
      Poly t = poly_powmod(cand, group / r, impl->modulus, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = cand;
      break;
    }
  }
  impl->exp.assign(2 * group + 1, 0);
  impl->log.assign(order, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i < group; ++i) {
    Poly padded = cur;
    padded.resize(k, 0);
    const auto idx = static_cast<Elem>(pack(padded, p));
    impl->exp[i] = idx;
    impl->exp[i + group] = idx;
    impl->log[idx] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, generator, impl->modulus, p);
  }

  if (p != 2) {
    auto slow_add = [&](std::uint64_t a, std::uint64_t b) {
      std::uint64_t r = 0, scale = 1;
      for (std::uint32_t i = 0; i < k; ++i) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
      }
      return static_cast<Elem>(r);
    };
    impl->neg_table.resize(order);
    for (std::uint64_t a = 0; a < order; ++a) {
      std::uint64_t r = 0, scale = 1, x = a;
      for (std::uint32_t i = 0; i < k; ++i) {
        r += ((p - x % p) % p) * scale;
        x /= p;
        scale *= p;
      }
      impl->neg_table[a] = static_cast<Elem>(r);
    }
    if (order <= 256) {
      impl->add_table.resize(order * order);
      for (std::uint64_t a = 0; a < order; ++a)
        for (std::uint64_t b = 0; b < order; ++b) impl->add_table[a * order + b] = slow_add(a, b);
    }
  }
  return Field(std::move(impl));
}

Field::Field() {
  static const Field binary = make(2, 1);
  impl_ = binary.impl_;
}

Field Field::of_order(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second);
}

Elem Field::x() const {
  if (impl_->k == 1) {
    // x is congruent to minus the constant term of the linear modulus.
    return neg(impl_->modulus[0]);
  }
  return impl_->p;
}

Elem Field::add_slow(Elem a, Elem b) const {
  const std::uint32_t p = impl_->p;
  Elem r = 0;
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    r += ((a % p + b % p) % p) * impl_->pow_p[i];
    a /= p;
    b /= p;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (impl_->p == 2) return a;
  return impl_->neg_table[a];
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t group = impl_->order - 1;
  return impl_->exp[(group - impl_->log[a]) % group];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t group = impl_->order - 1;
  std::int64_t r = (static_cast<std::int64_t>(impl_->log[a]) * (e % group)) % group;
  if (r < 0) r += group;
  return impl_->exp[r];
}

Elem Field::frobenius(Elem a, std::int64_t e) const {
  const std::int64_t k = impl_->k;
  std::int64_t r = e % k;
  if (r < 0) r += k;
  if (r == 0 || a == 0) return a;
  const std::uint64_t group = impl_->order - 1;
  std::uint64_t pe = 1;
  for (std::int64_t i = 0; i < r; ++i) pe = pe * impl_->p % group;
  return impl_->exp[std::uint64_t{impl_->log[a]} * pe % group];
}

Elem Field::trace(Elem a, std::uint32_t sub_degree) const {
  if (sub_degree == 0 || impl_->k % sub_degree != 0) {
    fail(ErrorKind::NonDivisorDegree, "subfield degree must divide the extension degree");
  }
  Elem sum = 0;
  for (std::uint32_t i = 0; i < impl_->k / sub_degree; ++i) {
    sum = add(sum, frobenius(a, static_cast<std::int64_t>(sub_degree) * i));
  }
  return sum;
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const { return unpack(a, impl_->p, impl_->k); }

Elem Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > impl_->k) fail(ErrorKind::DimensionMismatch, "too many coefficients");
  for (auto v : c) {
    if (v >= impl_->p) fail(ErrorKind::InvalidArgument, "coefficient out of range");
  }
  return static_cast<Elem>(pack(c, impl_->p));
}

std::vector<Elem> Field::subfield(std::uint32_t sub_degree) const {
  if (sub_degree == 0 || impl_->k % sub_degree != 0) {
    fail(ErrorKind::NonDivisorDegree, "subfield degree must divide the extension degree");
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < impl_->order; ++a) {
    if (frobenius(a, sub_degree) == a) out.push_back(a);
  }
  return out;
}

}  // namespace dho
