#include "echg/galois.hpp"

#include <stdexcept>
#include <string>

namespace echg {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a non-zero divisor, over GF(p).
Poly poly_mod(Poly a, Poly divisor, std::uint32_t p) {
  trim(a);
  trim(divisor);
  const std::size_t d = divisor.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_prime(divisor.back(), p);
  while (a.size() > d) {
    const std::size_t shift = a.size() - 1 - d;
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = factor * divisor[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  Poly c(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

}  // namespace

namespace detail {

struct GfData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;  // log[a] for a != 0

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q) + ")");
    return exp[(q - 1 - log[a]) % (q - 1)];
  }

  // Polynomial product reduced by the modulus; used only to build the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = poly_from_index(a, p, k);
    const Poly pb = poly_from_index(b, p, k);
    Poly prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    const Poly r = poly_mod(prod, modulus, p);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i] * scale;
      scale *= p;
    }
    return out;
  }

  void build_tables() {
    exp.assign(2 * (q - 1), 0);
    log.assign(q, 0);
    for (std::uint32_t g = 1; g < q; ++g) {
      // g is primitive iff its powers g^0..g^(q-2) are pairwise distinct,
      // i.e. none of g^1..g^(q-2) returns to 1.
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp[i] = x;
        x = slow_mul(x, g);
        if (x == 1 && i + 1 < q - 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp[i + q - 1] = exp[i];
        log[exp[i]] = i;
      }
      return;
    }
    throw std::logic_error("no primitive element found; modulus is not irreducible");
  }
};

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  if (k == 1) return true;
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly g = poly_from_index(static_cast<std::uint32_t>(lower), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

GfField::GfField(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("field order exceeds the supported maximum of " +
                                  std::to_string(kMaxOrder));
  }
  auto data = std::make_shared<detail::GfData>();
  data->p = p;
  data->k = k;
  data->q = static_cast<std::uint32_t>(q);

  // Scan monic candidates with the constant term as the most significant
  // comparison key, which is what low-degree-first lexicographic order means.
  for (std::uint32_t rank = 0; rank < q; ++rank) {
    Poly candidate(k + 1, 0);
    std::uint32_t r = rank;
    for (std::uint32_t i = k; i-- > 0;) {
      candidate[i] = r % p;
      r /= p;
    }
    candidate[k] = 1;
    if (is_irreducible(candidate, p)) {
      data->modulus = std::move(candidate);
      break;
    }
  }
  if (data->modulus.empty()) throw std::logic_error("no irreducible polynomial found");
  data->build_tables();
  data_ = std::move(data);
}

GfField GfField::of_order(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return GfField(pk->first, pk->second);
}

std::uint32_t GfField::characteristic() const { return data_->p; }
std::uint32_t GfField::degree() const { return data_->k; }
std::uint32_t GfField::order() const { return data_->q; }
const std::vector<std::uint32_t>& GfField::modulus() const { return data_->modulus; }

std::uint32_t GfField::add(std::uint32_t a, std::uint32_t b) const { return data_->add(a, b); }
std::uint32_t GfField::sub(std::uint32_t a, std::uint32_t b) const { return data_->add(a, data_->neg(b)); }
std::uint32_t GfField::neg(std::uint32_t a) const { return data_->neg(a); }
std::uint32_t GfField::mul(std::uint32_t a, std::uint32_t b) const { return data_->mul(a, b); }
std::uint32_t GfField::inv(std::uint32_t a) const { return data_->inv(a); }

std::uint32_t GfField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

GfElement GfField::element(std::uint32_t index) const {
  if (index >= data_->q) throw std::out_of_range("element index out of range");
  return GfElement(data_.get(), index);
}

std::vector<GfElement> GfField::elements() const {
  std::vector<GfElement> out;
  out.reserve(data_->q);
  for (std::uint32_t i = 0; i < data_->q; ++i) out.push_back(GfElement(data_.get(), i));
  return out;
}

std::vector<std::uint32_t> GfField::coefficients(std::uint32_t index) const {
  return poly_from_index(index, data_->p, data_->k);
}

namespace {

const detail::GfData* common_field(const detail::GfData* fa, const detail::GfData* fb) {
  if (fa != fb) throw std::invalid_argument("operands belong to different fields");
  return fa;
}

}  // namespace

GfElement operator+(const GfElement& a, const GfElement& b) {
  const auto* f = common_field(a.field_, b.field_);
  return GfElement(f, f->add(a.index_, b.index_));
}

GfElement operator-(const GfElement& a, const GfElement& b) {
  const auto* f = common_field(a.field_, b.field_);
  return GfElement(f, f->add(a.index_, f->neg(b.index_)));
}

GfElement operator*(const GfElement& a, const GfElement& b) {
  const auto* f = common_field(a.field_, b.field_);
  return GfElement(f, f->mul(a.index_, b.index_));
}

GfElement operator/(const GfElement& a, const GfElement& b) {
  const auto* f = common_field(a.field_, b.field_);
  return GfElement(f, f->mul(a.index_, f->inv(b.index_)));
}

GfElement GfElement::operator-() const { return GfElement(field_, field_->neg(index_)); }

GfElement GfElement::inverse() const { return GfElement(field_, field_->inv(index_)); }

std::vector<std::uint32_t> GfElement::coefficients() const {
  return poly_from_index(index_, field_->p, field_->k);
}

}  // namespace echg
