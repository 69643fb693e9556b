#include "evencl/quadform.hpp"

#include <map>
#include <mutex>

namespace evencl {
namespace {

// Budget for exhaustive enumeration of 9-entry matrices: |R|^9 <= 2^18 keeps
// GL3 of F2, F3, F4-sized rings in memory and rejects F5 and up.
constexpr std::uint64_t kMatrixSearchBudget = 1ull << 18;

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t budget, const Ring& r) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < exp; ++i) {
    n *= base;
    if (n > budget)
      throw Error(Errc::search_too_large,
                  "enumerating " + std::to_string(exp) + "-tuples over " + r.descriptor());
  }
  return n;
}

// Upper-triangular Gram matrix: q(x) = x^T Q x.
Mat3 gram_upper(const QuadraticForm3& q) { return default_lift(q).matrix; }

}  // namespace

QuadraticForm3::QuadraticForm3(const Ring& r, std::array<Elem, 6> coeffs) : ring_(r), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (!(c.ring() == r)) throw Error(Errc::ring_mismatch, "coefficient not in " + r.descriptor());
}

QuadraticForm3 QuadraticForm3::from_ints(const Ring& r, const std::array<long long, 6>& c) {
  std::array<Elem, 6> e;
  for (std::size_t i = 0; i < 6; ++i) e[i] = r.from_int(c[i]);
  return QuadraticForm3(r, e);
}

Elem QuadraticForm3::operator()(const Vec<3>& x) const {
  Elem v = ring_.zero();
  for (std::size_t i = 0; i < 3; ++i) v += diag(i) * x[i] * x[i];
  v += cross(1, 2) * x[1] * x[2];
  v += cross(0, 2) * x[0] * x[2];
  v += cross(0, 1) * x[0] * x[1];
  return v;
}

Elem QuadraticForm3::polar(std::size_t i, std::size_t j) const {
  return i == j ? diag(i) + diag(i) : cross(i, j);
}

std::string QuadraticForm3::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += coeffs_[i].to_string();
  }
  return s + ")";
}

Elem BilinearForm3::operator()(const Vec<3>& x, const Vec<3>& y) const {
  Elem v = ring().zero();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v += matrix(i, j) * x[i] * y[j];
  return v;
}

DiscriminantTwist::DiscriminantTwist(Elem lambda) : lambda_(std::move(lambda)) {
  if (!lambda_.is_unit()) throw Error(Errc::non_unit, "twist by " + lambda_.to_string());
}

BilinearForm3 make_bilinear(const Ring& r, const std::array<std::array<long long, 3>, 3>& rows) {
  return {Mat3::from_rows(r, rows)};
}

QuadraticForm3 induced_quadratic(const BilinearForm3& b) {
  const auto& m = b.matrix;
  return QuadraticForm3(b.ring(), {m(0, 0), m(1, 1), m(2, 2), m(1, 2) + m(2, 1), m(0, 2) + m(2, 0),
                                   m(0, 1) + m(1, 0)});
}

BilinearForm3 polar_bilinear(const QuadraticForm3& q) {
  Mat3 m(q.ring());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = q.polar(i, j);
  return {m};
}

BilinearForm3 default_lift(const QuadraticForm3& q) {
  Mat3 m(q.ring());
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, i) = q.diag(i);
    for (std::size_t j = i + 1; j < 3; ++j) m(i, j) = q.cross(i, j);
  }
  return {m};
}

BilinearForm3 lower_lift(const QuadraticForm3& q) { return {default_lift(q).matrix.transpose()}; }

bool is_alternating(const Mat3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
  }
  return true;
}

QuadraticForm3 precompose(const QuadraticForm3& q, const Mat3& h) {
  const Mat3 m = h.transpose() * gram_upper(q) * h;
  return QuadraticForm3(q.ring(), {m(0, 0), m(1, 1), m(2, 2), m(1, 2) + m(2, 1), m(0, 2) + m(2, 0),
                                   m(0, 1) + m(1, 0)});
}

QuadraticForm3 scale(const QuadraticForm3& q, const Elem& c) {
  auto coeffs = q.coeffs();
  for (auto& x : coeffs) x *= c;
  return QuadraticForm3(q.ring(), coeffs);
}

QuadraticForm3 act_similarity(const Similarity& s, const QuadraticForm3& q) {
  if (!s.l.is_unit()) throw Error(Errc::non_unit, "multiplier " + s.l.to_string());
  return scale(precompose(q, s.g.inverse()), s.l);
}

bool is_similarity(const Similarity& s, const QuadraticForm3& q, const QuadraticForm3& q_target) {
  if (!s.l.is_unit() || !s.g.is_invertible()) return false;
  return precompose(q_target, s.g) == scale(q, s.l);
}

BilinearForm3 act_bilinear(const Mat3& g, const BilinearForm3& b) {
  const Mat3 h = g.inverse();
  return {h.transpose() * b.matrix * h};
}

Elem half_discriminant(const QuadraticForm3& q) {
  const Elem& a1 = q.diag(0);
  const Elem& a2 = q.diag(1);
  const Elem& a3 = q.diag(2);
  const Elem& u23 = q.cross(1, 2);
  const Elem& u13 = q.cross(0, 2);
  const Elem& u12 = q.cross(0, 1);
  return q.ring().from_int(4) * a1 * a2 * a3 + u23 * u13 * u12 - a1 * u23 * u23 - a2 * u13 * u13 -
         a3 * u12 * u12;
}

bool is_semiregular(const QuadraticForm3& q) { return half_discriminant(q).is_unit(); }

QuadraticForm3 twist(const QuadraticForm3& q, const DiscriminantTwist& t) { return scale(q, t.lambda()); }

const std::vector<Mat3>& general_linear_group(const Ring& r) {
  if (!r.is_finite()) throw Error(Errc::infinite_ring, "GL3 over " + r.descriptor());
  static std::mutex mutex;
  static std::map<std::string, std::vector<Mat3>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(r.descriptor());
  if (!inserted) return it->second;

  const auto n = r.size();
  const auto total = checked_power(n, 9, kMatrixSearchBudget, r);
  const auto elems = r.elements();
  auto& out = it->second;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat3 m(r);
    auto c = code;
    for (std::size_t k = 9; k-- > 0;) {
      m(k / 3, k % 3) = elems[c % n];
      c /= n;
    }
    if (m.is_invertible()) out.push_back(std::move(m));
  }
  return out;
}

std::optional<Similarity> orbit_equivalent(const QuadraticForm3& q, const QuadraticForm3& q_target) {
  const Ring& r = q.ring();
  if (!r.is_finite()) throw Error(Errc::infinite_ring, "orbit search over " + r.descriptor());
  const auto units = r.units();
  // q' = lambda (q o h) with h = g^-1 running over GL3 as g does.
  for (const auto& h : general_linear_group(r)) {
    const auto moved = precompose(q, h);
    for (const auto& lambda : units)
      if (scale(moved, lambda) == q_target) return Similarity{h.inverse(), lambda};
  }
  return std::nullopt;
}

std::vector<QuadraticForm3> all_quadratic_forms(const Ring& r) {
  const auto n = r.size();
  const auto total = checked_power(n, 6, 1u << 20, r);
  const auto elems = r.elements();
  std::vector<QuadraticForm3> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<Elem, 6> c;
    auto rest = code;
    for (std::size_t k = 6; k-- > 0;) {
      c[k] = elems[rest % n];
      rest /= n;
    }
    out.emplace_back(r, c);
  }
  return out;
}

std::vector<BilinearForm3> all_bilinear_forms(const Ring& r) {
  const auto n = r.size();
  const auto total = checked_power(n, 9, kMatrixSearchBudget, r);
  const auto elems = r.elements();
  std::vector<BilinearForm3> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat3 m(r);
    auto rest = code;
    for (std::size_t k = 9; k-- > 0;) {
      m(k / 3, k % 3) = elems[rest % n];
      rest /= n;
    }
    out.push_back({std::move(m)});
  }
  return out;
}

QuadraticForm3 base_change(const QuadraticForm3& q, const Ring& dst) {
  std::array<Elem, 6> c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = ring_hom_apply(q.ring(), dst, q.coeffs()[i]);
  return QuadraticForm3(dst, c);
}

BilinearForm3 base_change(const BilinearForm3& b, const Ring& dst) { return {base_change(b.matrix, dst)}; }

}  // namespace evencl
