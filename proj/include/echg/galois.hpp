#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace echg {

class GfField;

namespace detail {
struct GfData;
}

/// Element of a finite field, identified by its canonical index in
/// [0, q). Holds a non-owning pointer to the field's tables, so it stays
/// valid as long as some GfField handle to that field is alive.
class GfElement {
 public:
  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  friend GfElement operator+(const GfElement& a, const GfElement& b);
  friend GfElement operator-(const GfElement& a, const GfElement& b);
  friend GfElement operator*(const GfElement& a, const GfElement& b);
  friend GfElement operator/(const GfElement& a, const GfElement& b);
  GfElement operator-() const;
  GfElement inverse() const;

  /// Coefficients over GF(p), constant term first, length k.
  std::vector<std::uint32_t> coefficients() const;

  friend bool operator==(const GfElement& a, const GfElement& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  friend class GfField;
  GfElement(const detail::GfData* field, std::uint32_t index) : field_(field), index_(index) {}
  const detail::GfData* field_;
  std::uint32_t index_;
};

/*
 * GF(p^k) with the lexicographically smallest monic irreducible modulus
 * (coefficients compared constant term first).
 *
 * An element with coefficients (c_0, ..., c_{k-1}) of c_0 + c_1 x + ... has
 * canonical index c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Zero is index 0 and one
 * is index 1. The index-level methods below are the fast path used by the
 * constructions; GfElement wraps them with field checks.
 */
class GfField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument if p is not prime, k < 1, or p^k exceeds
  /// kMaxOrder.
  GfField(std::uint32_t p, std::uint32_t k);

  /// Field of order q. Throws std::invalid_argument if q is not a prime power.
  static GfField of_order(std::uint32_t q);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  /// Monic modulus, constant term first, length k + 1.
  const std::vector<std::uint32_t>& modulus() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  GfElement element(std::uint32_t index) const;
  GfElement zero() const { return element(0); }
  GfElement one() const { return element(1); }

  /// All q elements in canonical order, zero first.
  std::vector<GfElement> elements() const;

  std::vector<std::uint32_t> coefficients(std::uint32_t index) const;

  friend bool operator==(const GfField& a, const GfField& b) { return a.data_ == b.data_; }

 private:
  std::shared_ptr<const detail::GfData> data_;
};

bool is_prime(std::uint64_t n);

/// (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// True iff the monic polynomial (constant term first) is irreducible over
/// GF(p); exhaustive search for monic divisors up to half the degree.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace echg
