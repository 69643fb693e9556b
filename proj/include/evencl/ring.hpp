#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "evencl/error.hpp"

namespace evencl {

class Elem;

/// Descriptor of an exact commutative coefficient ring.
///
/// Descriptor strings: "z", "q", "fp:<p>", "zmod:<p>^<k>", "dual:<p>".
/// p is a prime <= 97; zmod allows k <= 4 for p <= 5 and k <= 2 above that,
/// which keeps every finite ring small enough for exhaustive enumeration.
class Ring {
 public:
  enum class Kind : std::uint8_t { integers, rationals, prime_field, residue_ring, dual_numbers };

  constexpr Ring() = default;

  static Ring integers() { return Ring(Kind::integers, 0, 0); }
  static Ring rationals() { return Ring(Kind::rationals, 0, 0); }
  static Ring prime_field(unsigned p);
  static Ring residue_ring(unsigned p, unsigned k);
  static Ring dual_numbers(unsigned p);
  static Ring parse(std::string_view descriptor);

  std::string descriptor() const;

  Kind kind() const { return kind_; }
  unsigned characteristic_prime() const { return p_; }
  unsigned exponent() const { return k_; }
  /// Modulus of the residue arithmetic: p^k for zmod, p for fp and dual.
  std::uint32_t modulus() const { return modulus_; }

  bool is_finite() const { return kind_ != Kind::integers && kind_ != Kind::rationals; }
  bool is_field() const {
    return kind_ == Kind::rationals || kind_ == Kind::prime_field ||
           (kind_ == Kind::residue_ring && k_ == 1);
  }
  /// Finite prime field in either spelling (fp:p or zmod:p^1).
  bool is_prime_field() const { return is_finite() && is_field(); }

  /// Number of elements; throws InfiniteRing for z and q.
  std::uint64_t size() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_rational(const mpq_class& x) const;
  Elem dual(long long a, long long b) const;
  Elem parse_element(std::string_view text) const;

  /// Element with enumeration index `index` (finite rings); index order is the
  /// canonical element order.
  Elem element_at(std::uint64_t index) const;
  std::vector<Elem> elements() const;
  std::vector<Elem> units() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  constexpr Ring(Kind kind, unsigned p, unsigned k)
      : kind_(kind), p_(static_cast<std::uint16_t>(p)), k_(static_cast<std::uint8_t>(k)),
        modulus_(compute_modulus(kind, p, k)) {}

  static constexpr std::uint32_t compute_modulus(Kind kind, unsigned p, unsigned k) {
    if (kind == Kind::integers || kind == Kind::rationals) return 0;
    if (kind == Kind::residue_ring) {
      std::uint32_t n = 1;
      for (unsigned i = 0; i < k; ++i) n *= p;
      return n;
    }
    return p;
  }

  Kind kind_ = Kind::integers;
  std::uint16_t p_ = 0;
  std::uint8_t k_ = 0;
  std::uint32_t modulus_ = 0;
};

/// An element of a Ring in canonical form.
///
/// Finite rings store a reduced residue `a` (plus the epsilon coefficient `b`
/// for dual numbers); z and q store a normalized GMP rational. Equality of
/// elements is equality of representatives.
class Elem {
 public:
  Elem() = default;

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  /// Inverse when one exists.
  std::optional<Elem> try_inverse() const;
  bool is_unit() const { return try_inverse().has_value(); }
  /// Throws NonUnit.
  Elem inverse() const;
  /// Negative exponents require a unit.
  Elem pow(long long e) const;

  /// Residue (finite rings) or epsilon coefficient (dual numbers).
  std::uint32_t residue() const { return a_; }
  std::uint32_t epsilon_part() const { return b_; }
  /// Value for z and q.
  const mpq_class& rational() const;

  /// Index in the ring's canonical enumeration (finite rings only).
  std::uint64_t index() const;

  std::string to_string() const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  friend Elem operator+(Elem x, const Elem& y) { return x += y; }
  friend Elem operator-(Elem x, const Elem& y) { return x -= y; }
  friend Elem operator*(Elem x, const Elem& y) { return x *= y; }

  friend bool operator==(const Elem& x, const Elem& y);
  /// Canonical element order: residues by value, dual numbers by (a, b),
  /// rationals by (numerator, denominator) with positive denominator.
  friend std::strong_ordering operator<=>(const Elem& x, const Elem& y);

 private:
  friend class Ring;
  Elem(Ring ring, std::uint32_t a, std::uint32_t b) : ring_(ring), a_(a), b_(b) {}
  Elem(Ring ring, mpq_class q);

  void check_same_ring(const Elem& o) const;

  Ring ring_;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
  std::optional<mpq_class> q_;  // z and q only; empty means 0
};

/// All y with y*y == x, in canonical order. Throws NonUnit unless x is a unit.
std::vector<Elem> unit_square_roots(const Elem& x);

/// True when x has a square root (x need not be a unit).
bool is_square(const Elem& x);

/// Whether a canonical homomorphism src -> dst is supported.
bool has_canonical_hom(const Ring& src, const Ring& dst);

/// Image of x under the canonical homomorphism; throws NoCanonicalHom.
Elem ring_hom_apply(const Ring& src, const Ring& dst, const Elem& x);

}  // namespace evencl
