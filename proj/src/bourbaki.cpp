#include "evencl/bourbaki.hpp"

namespace evencl {

TensorElement TensorElement::word(const Ring& r, std::vector<int> w) {
  TensorElement t(r);
  t.terms.emplace(std::move(w), r.one());
  return t;
}

void TensorElement::add(const std::vector<int>& w, const Elem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

TensorElement TensorElement::scaled(const Elem& c) const {
  TensorElement t(ring);
  for (const auto& [w, v] : terms) t.add(w, v * c);
  return t;
}

TensorElement TensorElement::left_multiply(const Vec<3>& x) const {
  TensorElement t(ring);
  for (int g = 0; g < 3; ++g) {
    if (x[g].is_zero()) continue;
    for (const auto& [w, v] : terms) {
      std::vector<int> longer{g};
      longer.insert(longer.end(), w.begin(), w.end());
      t.add(longer, v * x[g]);
    }
  }
  return t;
}

namespace {

Vec<3> unit_vector(const Ring& r, int g) {
  Vec<3> v = zero_vec<3>(r);
  v[g] = r.one();
  return v;
}

TensorElement t_on_word(const Vec<3>& f, const Ring& r, std::span<const int> w) {
  TensorElement out(r);
  if (w.empty()) return out;
  const std::vector<int> tail(w.begin() + 1, w.end());
  out.add(tail, f[w[0]]);
  out -= t_on_word(f, r, tail).left_multiply(unit_vector(r, w[0]));
  return out;
}

TensorElement psi_on_word(const BilinearForm3& b, std::span<const int> w) {
  const Ring& r = b.ring();
  if (w.empty()) return TensorElement::word(r, {});
  const TensorElement rest = psi_on_word(b, w.subspan(1));
  TensorElement out = rest.left_multiply(unit_vector(r, w[0]));
  out += bourbaki_t(b.matrix.transpose().column(w[0]), rest);
  return out;
}

}  // namespace

TensorElement bourbaki_t(const Vec<3>& f, const TensorElement& x) {
  TensorElement out(x.ring);
  for (const auto& [w, c] : x.terms) out += t_on_word(f, x.ring, w).scaled(c);
  return out;
}

TensorElement bourbaki_psi(const BilinearForm3& b, const TensorElement& x) {
  TensorElement out(x.ring);
  for (const auto& [w, c] : x.terms) out += psi_on_word(b, w).scaled(c);
  return out;
}

CliffordElement reduce_tensor(const QuadraticForm3& q, const TensorElement& x) {
  CliffordElement out(q.ring());
  for (const auto& [w, c] : x.terms) out += reduce_word(q, w).scaled(c);
  return out;
}

CliffordElement bourbaki_t(const Vec<3>& f, std::span<const int> word, const QuadraticForm3& q) {
  return reduce_tensor(q, t_on_word(f, q.ring(), word));
}

LambdaEven exterior_even_coordinates(const CliffordElement& x) {
  const CliffordEven e = even_part(x);
  return {{e.c[0], e.c[1], -e.c[2], e.c[3]}};
}

Mat4 psi_even_matrix_by_recursion(const BilinearForm3& b) {
  const Ring& r = b.ring();
  const QuadraticForm3 zero(r);
  const std::array<std::vector<int>, 4> words = {{{}, {1, 2}, {0, 2}, {0, 1}}};
  Mat4 m(r);
  for (std::size_t col = 0; col < 4; ++col) {
    const auto image = bourbaki_psi(b, TensorElement::word(r, words[col]));
    m.set_column(col, exterior_even_coordinates(reduce_tensor(zero, image)).c);
  }
  return m;
}

}  // namespace evencl
