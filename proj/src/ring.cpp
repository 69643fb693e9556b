#include "evencl/ring.hpp"

#include <algorithm>
#include <charconv>
#include <utility>
#include <numeric>

namespace evencl {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_prime(unsigned p) {
  if (!is_prime(p) || p > 97)
    throw Error(Errc::invalid_descriptor, "p must be a prime <= 97, got " + std::to_string(p));
}

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::invalid_descriptor, "bad ring descriptor '" + std::string(whole) + "'");
  return v;
}

// Reduce an arbitrary integer into [0, m).
std::uint32_t reduce(const mpz_class& n, std::uint32_t m) {
  mpz_class r = n % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce(long long n, std::uint32_t m) {
  long long r = n % static_cast<long long>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t m) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % m);
}

// Inverse of x modulo m when gcd(x, m) == 1.
std::optional<std::uint32_t> inv_mod(std::uint32_t x, std::uint32_t m) {
  long long t = 0, new_t = 1, r = m, new_r = x;
  while (new_r != 0) {
    long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) return std::nullopt;
  return reduce(t, m);
}

const mpq_class& zero_rational() {
  static const mpq_class zero(0);
  return zero;
}

}  // namespace

// ---------------------------------------------------------------- Ring

Ring Ring::prime_field(unsigned p) {
  check_prime(p);
  return Ring(Kind::prime_field, p, 1);
}

Ring Ring::residue_ring(unsigned p, unsigned k) {
  check_prime(p);
  unsigned max_k = p <= 5 ? 4 : 2;
  if (k < 1 || k > max_k)
    throw Error(Errc::invalid_descriptor, "zmod exponent must lie in 1.." + std::to_string(max_k) +
                                              " for p = " + std::to_string(p));
  return Ring(Kind::residue_ring, p, k);
}

Ring Ring::dual_numbers(unsigned p) {
  check_prime(p);
  return Ring(Kind::dual_numbers, p, 1);
}

Ring Ring::parse(std::string_view d) {
  if (d == "z") return integers();
  if (d == "q") return rationals();
  if (d.starts_with("fp:")) return prime_field(parse_unsigned(d.substr(3), d));
  if (d.starts_with("dual:")) return dual_numbers(parse_unsigned(d.substr(5), d));
  if (d.starts_with("zmod:")) {
    auto body = d.substr(5);
    auto caret = body.find('^');
    if (caret == std::string_view::npos)
      throw Error(Errc::invalid_descriptor, "zmod descriptor needs '^': '" + std::string(d) + "'");
    return residue_ring(parse_unsigned(body.substr(0, caret), d),
                        parse_unsigned(body.substr(caret + 1), d));
  }
  throw Error(Errc::invalid_descriptor, "unknown ring descriptor '" + std::string(d) + "'");
}

std::string Ring::descriptor() const {
  switch (kind_) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    case Kind::prime_field: return "fp:" + std::to_string(p_);
    case Kind::residue_ring: return "zmod:" + std::to_string(p_) + "^" + std::to_string(k_);
    case Kind::dual_numbers: return "dual:" + std::to_string(p_);
  }
  return "?";
}

std::uint64_t Ring::size() const {
  if (!is_finite()) throw Error(Errc::infinite_ring, descriptor() + " has no finite size");
  if (kind_ == Kind::dual_numbers) return static_cast<std::uint64_t>(p_) * p_;
  return modulus_;
}

Elem Ring::zero() const { return from_int(0); }
Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(long long n) const {
  if (!is_finite()) return n == 0 ? Elem(*this, 0, 0) : Elem(*this, mpq_class(static_cast<long>(n)));
  return Elem(*this, reduce(n, modulus_), 0);
}

Elem Ring::from_rational(const mpq_class& x) const {
  if (kind_ == Kind::rationals) return Elem(*this, x);
  if (x.get_den() != 1) {
    if (kind_ == Kind::integers)
      throw Error(Errc::parse_error, x.get_str() + " is not an integer");
    // Image of a fraction in a finite ring, when the denominator is a unit there.
    Elem num(*this, reduce(x.get_num(), modulus_), 0);
    Elem den(*this, reduce(x.get_den(), modulus_), 0);
    auto inv = den.try_inverse();
    if (!inv) throw Error(Errc::non_unit, "denominator of " + x.get_str() + " is not invertible");
    return num * *inv;
  }
  if (kind_ == Kind::integers) return Elem(*this, x);
  return Elem(*this, reduce(x.get_num(), modulus_), 0);
}

Elem Ring::dual(long long a, long long b) const {
  if (kind_ != Kind::dual_numbers)
    throw Error(Errc::ring_mismatch, descriptor() + " has no epsilon");
  return Elem(*this, reduce(a, modulus_), reduce(b, modulus_));
}

Elem Ring::parse_element(std::string_view text) const {
  std::string s(text);
  std::erase(s, ' ');
  if (s.empty()) throw Error(Errc::parse_error, "empty element");
  auto parse_rational = [&](const std::string& t) {
    mpq_class v;
    if (t.empty() || v.set_str(t, 10) != 0) throw Error(Errc::parse_error, "bad number '" + t + "'");
    if (v.get_den() == 0) throw Error(Errc::parse_error, "zero denominator in '" + t + "'");
    v.canonicalize();
    return v;
  };
  if (kind_ == Kind::dual_numbers) {
    // "a", "a+be", "a-be", "be", "e"
    if (s.back() == 'e') {
      std::size_t split = s.find_last_of("+-");
      if (split == std::string::npos) split = 0;
      std::string a_part = split == 0 ? "0" : s.substr(0, split);
      std::string b_part = s.substr(split, s.size() - 1 - split);
      if (b_part.empty() || b_part == "+") b_part = "1";
      if (b_part == "-") b_part = "-1";
      if (b_part.front() == '+') b_part.erase(0, 1);
      return from_rational(parse_rational(a_part)) +
             from_rational(parse_rational(b_part)) * Elem(*this, 0, 1);
    }
    return from_rational(parse_rational(s));
  }
  return from_rational(parse_rational(s));
}

Elem Ring::element_at(std::uint64_t index) const {
  if (index >= size()) throw Error(Errc::parse_error, "element index out of range");
  if (kind_ == Kind::dual_numbers)
    return Elem(*this, static_cast<std::uint32_t>(index / p_), static_cast<std::uint32_t>(index % p_));
  return Elem(*this, static_cast<std::uint32_t>(index), 0);
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> out;
  const auto n = size();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<Elem> Ring::units() const {
  std::vector<Elem> out;
  for (auto& x : elements())
    if (x.is_unit()) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- Elem

Elem::Elem(Ring ring, mpq_class q) : ring_(ring) {
  q.canonicalize();
  if (q != 0) q_ = std::move(q);
}

const mpq_class& Elem::rational() const { return q_ ? *q_ : zero_rational(); }

void Elem::check_same_ring(const Elem& o) const {
  if (!(ring_ == o.ring_))
    throw Error(Errc::ring_mismatch, ring_.descriptor() + " vs " + o.ring_.descriptor());
}

bool Elem::is_zero() const { return ring_.is_finite() ? (a_ == 0 && b_ == 0) : !q_.has_value(); }

bool Elem::is_one() const {
  if (ring_.is_finite()) return a_ == 1 % ring_.modulus() && b_ == 0;
  return q_ && *q_ == 1;
}

std::optional<Elem> Elem::try_inverse() const {
  switch (ring_.kind()) {
    case Ring::Kind::integers:
      if (q_ && (*q_ == 1 || *q_ == -1)) return *this;
      return std::nullopt;
    case Ring::Kind::rationals:
      if (!q_) return std::nullopt;
      return Elem(ring_, mpq_class(1) / *q_);
    case Ring::Kind::prime_field:
    case Ring::Kind::residue_ring: {
      auto inv = inv_mod(a_, ring_.modulus());
      if (!inv) return std::nullopt;
      return Elem(ring_, *inv, 0);
    }
    case Ring::Kind::dual_numbers: {
      // (a + b e)^-1 = a^-1 - b a^-2 e
      const auto p = ring_.modulus();
      auto inv = inv_mod(a_, p);
      if (!inv) return std::nullopt;
      std::uint32_t eps = mul_mod(mul_mod(*inv, *inv, p), b_, p);
      return Elem(ring_, *inv, eps == 0 ? 0 : p - eps);
    }
  }
  return std::nullopt;
}

Elem Elem::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw Error(Errc::non_unit, to_string() + " in " + ring_.descriptor());
  return *inv;
}

Elem Elem::pow(long long e) const {
  Elem base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Elem result = ring_.one();
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Elem::index() const {
  if (!ring_.is_finite()) throw Error(Errc::infinite_ring, "no element index in " + ring_.descriptor());
  if (ring_.kind() == Ring::Kind::dual_numbers) return static_cast<std::uint64_t>(a_) * ring_.modulus() + b_;
  return a_;
}

std::string Elem::to_string() const {
  if (!ring_.is_finite()) return rational().get_str();
  if (ring_.kind() == Ring::Kind::dual_numbers && b_ != 0)
    return std::to_string(a_) + "+" + std::to_string(b_) + "e";
  return std::to_string(a_);
}

Elem Elem::operator-() const {
  if (!ring_.is_finite()) return q_ ? Elem(ring_, -*q_) : *this;
  const auto m = ring_.modulus();
  return Elem(ring_, a_ == 0 ? 0 : m - a_, b_ == 0 ? 0 : m - b_);
}

Elem& Elem::operator+=(const Elem& o) {
  check_same_ring(o);
  if (!ring_.is_finite()) {
    if (o.q_) {
      mpq_class sum = rational() + *o.q_;
      if (sum == 0) q_.reset(); else q_ = std::move(sum);
    }
    return *this;
  }
  const auto m = ring_.modulus();
  a_ = (a_ + o.a_) % m;
  b_ = (b_ + o.b_) % m;
  return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem& Elem::operator*=(const Elem& o) {
  check_same_ring(o);
  if (!ring_.is_finite()) {
    if (!q_) return *this;
    if (!o.q_) { q_.reset(); return *this; }
    *q_ *= *o.q_;
    return *this;
  }
  const auto m = ring_.modulus();
  if (ring_.kind() == Ring::Kind::dual_numbers) {
    std::uint32_t b = (mul_mod(a_, o.b_, m) + mul_mod(b_, o.a_, m)) % m;
    a_ = mul_mod(a_, o.a_, m);
    b_ = b;
    return *this;
  }
  a_ = mul_mod(a_, o.a_, m);
  return *this;
}

bool operator==(const Elem& x, const Elem& y) {
  if (!(x.ring_ == y.ring_)) return false;
  if (!x.ring_.is_finite()) return x.rational() == y.rational();
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Elem& x, const Elem& y) {
  x.check_same_ring(y);
  if (x.ring_.is_finite()) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }
  const auto& a = x.rational();
  const auto& b = y.rational();
  int c = cmp(a.get_num(), b.get_num());
  if (c == 0) c = cmp(a.get_den(), b.get_den());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------- free functions

std::vector<Elem> unit_square_roots(const Elem& x) {
  if (!x.is_unit()) throw Error(Errc::non_unit, x.to_string() + " has no unit square roots");
  const Ring& r = x.ring();
  std::vector<Elem> roots;
  if (r.is_finite()) {
    for (auto& y : r.elements())
      if (y * y == x) roots.push_back(y);
    return roots;
  }
  const mpq_class& v = x.rational();
  if (v < 0) return roots;
  mpz_class num = v.get_num(), den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return roots;
  mpz_class sn = sqrt(num), sd = sqrt(den);
  Elem root = r.from_rational(mpq_class(sn, sd));
  roots.push_back(-root);
  roots.push_back(root);
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_square(const Elem& x) {
  const Ring& r = x.ring();
  if (r.is_finite()) {
    for (auto& y : r.elements())
      if (y * y == x) return true;
    return false;
  }
  const mpq_class& v = x.rational();
  if (v < 0) return false;
  mpz_class num = v.get_num(), den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t())) return false;
  if (r.kind() == Ring::Kind::rationals) return mpz_perfect_square_p(den.get_mpz_t()) != 0;
  return true;
}

bool has_canonical_hom(const Ring& src, const Ring& dst) {
  using K = Ring::Kind;
  if (src == dst) return true;
  switch (src.kind()) {
    case K::integers: return true;
    case K::rationals: return false;
    case K::prime_field:
      return (dst.kind() == K::residue_ring && dst.exponent() == 1 &&
              dst.characteristic_prime() == src.characteristic_prime());
    case K::residue_ring:
      return dst.characteristic_prime() == src.characteristic_prime() &&
             ((dst.kind() == K::residue_ring && dst.exponent() <= src.exponent()) ||
              dst.kind() == K::prime_field);
    case K::dual_numbers:
      return dst.kind() == K::prime_field && dst.characteristic_prime() == src.characteristic_prime();
  }
  return false;
}

Elem ring_hom_apply(const Ring& src, const Ring& dst, const Elem& x) {
  if (!(x.ring() == src))
    throw Error(Errc::ring_mismatch, "element of " + x.ring().descriptor() + " given as " + src.descriptor());
  if (!has_canonical_hom(src, dst))
    throw Error(Errc::no_canonical_hom, src.descriptor() + " -> " + dst.descriptor());
  if (src == dst) return x;
  if (src.kind() == Ring::Kind::integers) return dst.from_rational(x.rational());
  // Residue reductions and epsilon -> 0 both keep only the residue part.
  return dst.from_int(static_cast<long long>(x.residue()));
}

}  // namespace evencl
