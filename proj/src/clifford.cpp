#include "evencl/clifford.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace evencl {
namespace {

constexpr std::array<unsigned, 8> kMaskAt = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};

// Clifford slots of the even basis (1, e2e3, e1e3, e1e2).
constexpr std::array<std::size_t, 4> kEvenSlot = {0, 6, 5, 4};

std::vector<int> word_of_mask(unsigned mask) {
  std::vector<int> w;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) w.push_back(i);
  return w;
}

}  // namespace

// ---------------------------------------------------------------- CliffordElement

unsigned clifford_mask(std::size_t index) { return kMaskAt.at(index); }

std::size_t clifford_index(unsigned mask) {
  for (std::size_t i = 0; i < 8; ++i)
    if (kMaskAt[i] == mask) return i;
  throw std::out_of_range("clifford mask");
}

CliffordElement CliffordElement::scalar(const Elem& x) {
  CliffordElement e(x.ring());
  e.c[0] = x;
  return e;
}

CliffordElement CliffordElement::generator(const Ring& r, std::size_t i) {
  CliffordElement e(r);
  e.c[1 + i] = r.one();
  return e;
}

CliffordElement CliffordElement::vector(const Vec<3>& v) {
  CliffordElement e(v[0].ring());
  for (std::size_t i = 0; i < 3; ++i) e.c[1 + i] = v[i];
  return e;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (std::size_t i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  for (std::size_t i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

CliffordElement CliffordElement::scaled(const Elem& x) const {
  CliffordElement e = *this;
  for (auto& v : e.c) v *= x;
  return e;
}

bool CliffordElement::is_even() const { return c[1].is_zero() && c[2].is_zero() && c[3].is_zero() && c[7].is_zero(); }

CliffordElement reduce_word(const QuadraticForm3& q, std::span<const int> word) {
  const Ring& r = q.ring();
  for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
    const int i = word[pos];
    const int j = word[pos + 1];
    if (i < j) continue;
    std::vector<int> shorter(word.begin(), word.begin() + pos);
    shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
    if (i == j) return reduce_word(q, shorter).scaled(q.diag(i));
    // e_i e_j with i > j: u_ij - e_j e_i
    std::vector<int> swapped(word.begin(), word.end());
    std::swap(swapped[pos], swapped[pos + 1]);
    return reduce_word(q, shorter).scaled(q.cross(i, j)) - reduce_word(q, swapped);
  }
  unsigned mask = 0;
  for (int g : word) mask |= 1u << g;
  CliffordElement e(r);
  e.c[clifford_index(mask)] = r.one();
  return e;
}

CliffordTable::CliffordTable(const QuadraticForm3& q) : q_(q) {
  for (std::size_t s = 0; s < 8; ++s)
    for (std::size_t t = 0; t < 8; ++t) {
      auto w = word_of_mask(kMaskAt[s]);
      auto wt = word_of_mask(kMaskAt[t]);
      w.insert(w.end(), wt.begin(), wt.end());
      table_[8 * s + t] = reduce_word(q, w);
    }
}

CliffordElement CliffordTable::multiply(const CliffordElement& x, const CliffordElement& y) const {
  CliffordElement out(q_.ring());
  for (std::size_t s = 0; s < 8; ++s) {
    if (x.c[s].is_zero()) continue;
    for (std::size_t t = 0; t < 8; ++t) {
      if (y.c[t].is_zero()) continue;
      const Elem coeff = x.c[s] * y.c[t];
      const auto& basis = table_[8 * s + t];
      for (std::size_t k = 0; k < 8; ++k)
        if (!basis.c[k].is_zero()) out.c[k] += coeff * basis.c[k];
    }
  }
  return out;
}

CliffordElement clifford_product(const QuadraticForm3& q, const CliffordElement& x, const CliffordElement& y) {
  return CliffordTable(q).multiply(x, y);
}

CliffordEven even_part(const CliffordElement& x) {
  if (!x.is_even()) throw std::invalid_argument("Clifford element has an odd part");
  CliffordEven e;
  for (std::size_t i = 0; i < 4; ++i) e.c[i] = x.c[kEvenSlot[i]];
  return e;
}

CliffordElement to_clifford(const CliffordEven& x) {
  CliffordElement e(x.c[0].ring());
  for (std::size_t i = 0; i < 4; ++i) e.c[kEvenSlot[i]] = x.c[i];
  return e;
}

// ---------------------------------------------------------------- AlgebraStructure4

Vec<4> AlgebraStructure4::product(std::size_t i, std::size_t j) const {
  return {at(i, j, 0), at(i, j, 1), at(i, j, 2), at(i, j, 3)};
}

Vec<4> AlgebraStructure4::multiply(const Vec<4>& x, const Vec<4>& y) const {
  Vec<4> out = zero_vec<4>(ring_);
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      const Elem xy = x[i] * y[j];
      for (std::size_t k = 0; k < 4; ++k) out[k] += xy * at(i, j, k);
    }
  }
  return out;
}

bool AlgebraStructure4::is_unital() const {
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) {
      const Elem delta = j == k ? ring_.one() : ring_.zero();
      if (at(0, j, k) != delta || at(j, 0, k) != delta) return false;
    }
  return true;
}

bool AlgebraStructure4::is_associative() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t n = 0; n < 4; ++n) {
          Elem lhs = ring_.zero(), rhs = ring_.zero();
          for (std::size_t m = 0; m < 4; ++m) {
            lhs += at(i, j, m) * at(m, k, n);
            rhs += at(j, k, m) * at(i, m, n);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

bool AlgebraStructure4::is_commutative() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

// ---------------------------------------------------------------- psi and upsilon

Mat4 psi_even_matrix(const BilinearForm3& b) {
  const Ring& r = b.ring();
  const auto& m = b.matrix;
  Mat4 p(r);
  p(0, 0) = r.one();
  // e2e3 -> f1 + b23, e1e3 -> -f2 + b13, e1e2 -> f3 + b12
  p(0, 1) = m(1, 2);
  p(1, 1) = r.one();
  p(0, 2) = m(0, 2);
  p(2, 2) = -r.one();
  p(0, 3) = m(0, 1);
  p(3, 3) = r.one();
  return p;
}

namespace {

// Closed-form inverse of psi_even_matrix.
Mat4 psi_even_inverse(const BilinearForm3& b) {
  const Ring& r = b.ring();
  const auto& m = b.matrix;
  Mat4 p(r);
  p(0, 0) = r.one();
  p(0, 1) = -m(1, 2);
  p(1, 1) = r.one();
  p(0, 2) = m(0, 2);
  p(2, 2) = -r.one();
  p(0, 3) = -m(0, 1);
  p(3, 3) = r.one();
  return p;
}

}  // namespace

LambdaEven apply_psi(const BilinearForm3& b, const CliffordEven& x) { return {psi_even_matrix(b) * x.c}; }

CliffordEven apply_psi_inverse(const BilinearForm3& b, const LambdaEven& x) { return {psi_even_inverse(b) * x.c}; }

AlgebraStructure4 upsilon(const BilinearForm3& b) {
  const Ring& r = b.ring();
  const CliffordTable table(induced_quadratic(b));
  std::array<CliffordElement, 4> basis;
  for (std::size_t i = 0; i < 4; ++i) {
    LambdaEven f{zero_vec<4>(r)};
    f.c[i] = r.one();
    basis[i] = to_clifford(apply_psi_inverse(b, f));
  }
  AlgebraStructure4 a(r);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const LambdaEven prod = apply_psi(b, even_part(table.multiply(basis[i], basis[j])));
      for (std::size_t k = 0; k < 4; ++k) a.at(i, j, k) = prod.c[k];
    }
  return a;
}

AlgebraStructure4 even_clifford_algebra(const QuadraticForm3& q) { return upsilon(default_lift(q)); }

// ---------------------------------------------------------------- similarity functors

Mat4 similarity_clifford_matrix(const Similarity& s, const QuadraticForm3& q) {
  const Ring& r = q.ring();
  const QuadraticForm3 target = act_similarity(s, q);
  const CliffordTable table(target);
  const Elem l_inv = s.l.inverse();
  Mat4 m(r);
  m(0, 0) = r.one();
  // even basis slots 1..3 are e2e3, e1e3, e1e2
  constexpr std::array<std::array<std::size_t, 2>, 3> pairs = {{{1, 2}, {0, 2}, {0, 1}}};
  for (std::size_t col = 0; col < 3; ++col) {
    const auto gi = CliffordElement::vector(s.g.column(pairs[col][0]));
    const auto gj = CliffordElement::vector(s.g.column(pairs[col][1]));
    const CliffordEven image = even_part(table.multiply(gi, gj).scaled(l_inv));
    m.set_column(col + 1, image.c);
  }
  return m;
}

AlgebraMap c0_of_similarity(const Similarity& s, const QuadraticForm3& q) {
  const QuadraticForm3 target = act_similarity(s, q);
  const Mat4 clifford_side = similarity_clifford_matrix(s, q);
  return {psi_even_matrix(default_lift(target)) * clifford_side * psi_even_inverse(default_lift(q))};
}

AlgebraMap c0_of_similarity(const Similarity& s, const QuadraticForm3& q, const QuadraticForm3& q_target) {
  if (!is_similarity(s, q, q_target))
    throw Error(Errc::not_a_similarity, "(g, l) does not carry " + q.to_string() + " to " + q_target.to_string());
  return c0_of_similarity(s, q);
}

AlgebraMap scaling_iso(const QuadraticForm3& q, const DiscriminantTwist& t) {
  const Ring& r = q.ring();
  Mat4 clifford_side = Mat4::scalar(t.lambda());
  clifford_side(0, 0) = r.one();
  const QuadraticForm3 twisted = twist(q, t);
  return {psi_even_matrix(default_lift(q)) * clifford_side * psi_even_inverse(default_lift(twisted))};
}

AlgebraMap change_lifts(const AlgebraMap& phi, const BilinearForm3& from_src, const BilinearForm3& from_dst,
                        const BilinearForm3& to_src, const BilinearForm3& to_dst) {
  const Mat4 clifford_side = psi_even_inverse(from_dst) * phi.matrix * psi_even_matrix(from_src);
  return {psi_even_matrix(to_dst) * clifford_side * psi_even_inverse(to_src)};
}

Mat3 transfer_to_lambda2(const AlgebraMap& phi, const BilinearForm3& src_lift, const BilinearForm3& dst_lift) {
  if (!is_algebra_iso(phi, upsilon(src_lift), upsilon(dst_lift)))
    throw Error(Errc::not_an_algebra_iso, "map is not an isomorphism of the even Clifford algebras");
  Mat3 block(phi.ring());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = phi.matrix(i + 1, j + 1);
  return block;
}

Mat3 transfer_to_lambda2(const AlgebraMap& phi, const QuadraticForm3& q, const QuadraticForm3& q_target) {
  return transfer_to_lambda2(phi, default_lift(q), default_lift(q_target));
}

// ---------------------------------------------------------------- sections

LiftVariant LiftVariant::parse(std::string_view text) {
  if (text == "sprime") return {Kind::s_prime, 1};
  auto parse_odd = [&](std::string_view digits) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || v % 2 == 0)
      throw Error(Errc::parse_error, "variant index must be an odd integer: '" + std::string(text) + "'");
    return v;
  };
  if (text.starts_with("splus:")) return {Kind::s_plus, parse_odd(text.substr(6))};
  if (text.starts_with("s:")) return {Kind::s_odd, parse_odd(text.substr(2))};
  throw Error(Errc::parse_error, "unknown lift variant '" + std::string(text) + "'");
}

std::string LiftVariant::to_string() const {
  switch (kind) {
    case Kind::s_prime: return "sprime";
    case Kind::s_odd: return "s:" + std::to_string(odd);
    case Kind::s_plus: return "splus:" + std::to_string(odd);
  }
  return "?";
}

Similarity lift_section(const AlgebraMap& phi, const QuadraticForm3& q, const QuadraticForm3& q_target,
                        const LiftVariant& variant) {
  const Mat3 block = transfer_to_lambda2(phi, q, q_target);
  const Elem det = block.det();
  const Ring& r = q.ring();
  // g from the dual-inverse of phi on Lambda^2, via Lambda^2 V = V^dual (x) det V.
  const Mat3 g = block.inverse().transpose();

  Elem l = r.one();
  Elem root = r.one();
  const long long k = (variant.odd - 1) / 2;
  switch (variant.kind) {
    case LiftVariant::Kind::s_prime: {
      if (det.is_one()) break;
      auto roots = unit_square_roots(det);
      if (roots.empty())
        throw Error(Errc::square_root_unavailable, "det(phi_L2) = " + det.to_string() + " is not a square");
      root = roots.front();
      break;
    }
    case LiftVariant::Kind::s_odd: {
      l = det.pow(variant.odd);
      auto roots = unit_square_roots(det.pow(6 * k + 4));
      if (roots.empty())
        throw Error(Errc::square_root_unavailable, "no square root of det(phi_L2)^(6k+4)");
      root = roots.front();
      break;
    }
    case LiftVariant::Kind::s_plus:
      l = det.pow(variant.odd);
      root = det.pow(3 * k + 2);
      break;
  }
  Similarity s{g.scaled(l.inverse() * root), l};
  if (!is_similarity(s, q, q_target) || c0_of_similarity(s, q) != phi)
    throw std::logic_error("lifted similarity does not induce the given isomorphism");
  return s;
}

// ---------------------------------------------------------------- algebra maps

bool is_algebra_iso(const AlgebraMap& phi, const AlgebraStructure4& a, const AlgebraStructure4& b) {
  const Ring& r = a.ring();
  if (!(phi.ring() == r) || !(b.ring() == r)) return false;
  const Mat4& m = phi.matrix;
  if (!m(0, 0).is_one()) return false;
  for (std::size_t i = 1; i < 4; ++i)
    if (!m(i, 0).is_zero()) return false;
  if (!m.is_invertible()) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (m * a.product(i, j) != b.multiply(m.column(i), m.column(j))) return false;
  return true;
}

AlgebraStructure4 opposite(const AlgebraStructure4& a) {
  AlgebraStructure4 op(a.ring());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) op.at(i, j, k) = a.at(j, i, k);
  return op;
}

AlgebraStructure4 base_change_algebra(const AlgebraStructure4& a, const Ring& dst) {
  AlgebraStructure4 out(dst);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) out.at(i, j, k) = ring_hom_apply(a.ring(), dst, a.at(i, j, k));
  return out;
}

}  // namespace evencl
