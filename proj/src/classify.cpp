#include "evencl/classify.hpp"

#include <map>
#include <tuple>
#include <set>

#include "evencl/azumaya.hpp"
#include "evencl/fp_kernel.hpp"

namespace evencl {
namespace {

void require_small_field(const Ring& field) {
  if (!field.is_prime_field()) throw Error(Errc::not_a_field, field.descriptor() + " is not a prime field");
  if (field.characteristic_prime() > 3)
    throw Error(Errc::field_too_large, "exhaustive classification over " + field.descriptor());
}

BilinearForm3 lift_of(const QuadraticForm3& q, LiftScheme lifts) {
  return lifts == LiftScheme::upper ? default_lift(q) : lower_lift(q);
}

// Relabels class ids by first appearance.
std::vector<int> canonical_labels(const std::vector<int>& class_of) {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(class_of.size());
  for (int c : class_of) out.push_back(relabel.try_emplace(c, static_cast<int>(relabel.size())).first->second);
  return out;
}

}  // namespace

bool same_partition(const Partition& a, const Partition& b) {
  return a.forms == b.forms && canonical_labels(a.class_of) == canonical_labels(b.class_of);
}

std::size_t form_index(const QuadraticForm3& q) {
  const auto n = q.ring().size();
  std::size_t idx = 0;
  for (const auto& c : q.coeffs()) idx = idx * n + c.index();
  return idx;
}

Partition witt_partition(const Ring& field, LiftScheme lifts) {
  require_small_field(field);
  Partition part{field, all_quadratic_forms(field), {}, {}, {}};
  std::vector<fp::Algebra> reps;
  part.class_of.reserve(part.forms.size());
  for (std::size_t i = 0; i < part.forms.size(); ++i) {
    const fp::Algebra alg(upsilon(lift_of(part.forms[i], lifts)));
    int cls = -1;
    for (std::size_t r = 0; r < reps.size() && cls < 0; ++r)
      if (fp::IsoSearch(alg, reps[r]).first()) cls = static_cast<int>(r);
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(alg);
      part.representatives.push_back(i);
    }
    part.class_of.push_back(cls);
  }
  part.witness.resize(part.forms.size());
  return part;
}

Partition orbit_partition(const Ring& field) {
  require_small_field(field);
  Partition part{field, all_quadratic_forms(field), {}, {}, {}};
  const std::size_t n = part.forms.size();
  part.class_of.assign(n, -1);
  part.witness.resize(n);
  const auto& gl3 = general_linear_group(field);
  const auto units = field.units();
  for (std::size_t i = 0; i < n; ++i) {
    if (part.class_of[i] >= 0) continue;
    const int cls = static_cast<int>(part.representatives.size());
    part.representatives.push_back(i);
    const QuadraticForm3& q = part.forms[i];
    for (const auto& h : gl3) {
      const QuadraticForm3 moved = precompose(q, h);
      for (const auto& lambda : units) {
        const std::size_t j = form_index(scale(moved, lambda));
        if (part.class_of[j] >= 0) continue;
        part.class_of[j] = cls;
        part.witness[j] = Similarity{h.inverse(), lambda};
      }
    }
  }
  return part;
}

BijectionReport verify_bijection(const Ring& field) {
  require_small_field(field);
  BijectionReport rep;
  rep.field = field.descriptor();
  const Partition witt = witt_partition(field);
  const Partition orbit = orbit_partition(field);
  rep.forms = witt.forms.size();
  rep.witt_classes = witt.class_count();
  rep.orbit_classes = orbit.class_count();
  rep.equal = same_partition(witt, orbit);

  // Any two lifts give isomorphic algebras: the identity of C0(q), written
  // against the upper lift on one side and the lower lift on the other.
  rep.lift_independent = same_partition(witt, witt_partition(field, LiftScheme::lower));
  for (const auto& q : witt.forms) {
    const auto up = default_lift(q), low = lower_lift(q);
    const AlgebraMap id = change_lifts(AlgebraMap::identity(field), up, up, up, low);
    if (!is_algebra_iso(id, upsilon(up), upsilon(low))) rep.lift_independent = false;
  }

  // Each recorded orbit witness obeys the similarity identity and the d0 law.
  rep.orbit_witnesses_valid = true;
  for (std::size_t i = 0; i < orbit.forms.size(); ++i) {
    const auto& w = orbit.witness[i];
    if (!w) continue;
    const auto& q = orbit.forms[orbit.representatives[orbit.class_of[i]]];
    const auto& target = orbit.forms[i];
    const Elem det = w->g.det();
    if (!is_similarity(*w, q, target) ||
        half_discriminant(target) != w->l.pow(3) * det.pow(-2) * half_discriminant(q))
      rep.orbit_witnesses_valid = false;
  }

  // Semiregular classes against Azumaya classes among all upsilon(B).
  std::set<int> semiregular_classes;
  bool classes_pure = true;
  for (std::size_t i = 0; i < witt.forms.size(); ++i) {
    const bool sr = is_semiregular(witt.forms[i]);
    const bool rep_sr = is_semiregular(witt.forms[witt.representatives[witt.class_of[i]]]);
    if (sr != rep_sr) classes_pure = false;
    if (sr) semiregular_classes.insert(witt.class_of[i]);
  }
  rep.semiregular_classes = semiregular_classes.size();

  std::vector<fp::Algebra> azumaya_reps;
  auto azumaya_class = [&](const fp::Algebra& alg) {
    for (std::size_t r = 0; r < azumaya_reps.size(); ++r)
      if (fp::IsoSearch(alg, azumaya_reps[r]).first()) return static_cast<int>(r);
    azumaya_reps.push_back(alg);
    return static_cast<int>(azumaya_reps.size() - 1);
  };
  bool sweep_consistent = true;
  std::map<int, std::set<int>> azumaya_of_class;
  std::map<int, std::set<int>> class_of_azumaya;
  for (const auto& b : all_bilinear_forms(field)) {
    const AlgebraStructure4 a = upsilon(b);
    const QuadraticForm3 q = induced_quadratic(b);
    const bool az = is_azumaya(a);
    if (az != is_semiregular(q)) sweep_consistent = false;
    if (!az) continue;
    const int z = azumaya_class(fp::Algebra(a));
    const int w = witt.class_of[form_index(q)];
    azumaya_of_class[w].insert(z);
    class_of_azumaya[z].insert(w);
  }
  rep.azumaya_classes = azumaya_reps.size();
  bool one_to_one = classes_pure && sweep_consistent && rep.azumaya_classes == rep.semiregular_classes &&
                    azumaya_of_class.size() == semiregular_classes.size();
  for (const auto& [w, zs] : azumaya_of_class) one_to_one = one_to_one && zs.size() == 1;
  for (const auto& [z, ws] : class_of_azumaya) one_to_one = one_to_one && ws.size() == 1;
  rep.azumaya_bijection = one_to_one;

  rep.pass = rep.equal && rep.lift_independent && rep.orbit_witnesses_valid && rep.azumaya_bijection;
  return rep;
}

std::vector<AlgebraMap> automorphism_group(const AlgebraStructure4& a) {
  require_small_field(a.ring());
  const fp::Algebra alg(a);
  std::vector<AlgebraMap> out;
  for (const auto& v : fp::IsoSearch(alg, alg).all()) out.push_back(fp::to_algebra_map(alg, v, a.ring()));
  return out;
}

Elem lambda2_determinant(const AlgebraMap& phi) {
  Mat3 block(phi.ring());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = phi.matrix(i + 1, j + 1);
  return block.det();
}

ExactRowsReport verify_exact_rows(const QuadraticForm3& q) {
  const Ring& field = q.ring();
  require_small_field(field);
  if (!is_semiregular(q)) throw Error(Errc::not_semiregular, q.to_string() + " over " + field.descriptor());
  ExactRowsReport rep;
  rep.field = field.descriptor();
  rep.form = q;

  const auto units = field.units();
  std::vector<Elem> mu2;
  for (const auto& c : units)
    if ((c * c).is_one()) mu2.push_back(c);
  rep.mu2_order = mu2.size();

  std::vector<Similarity> go;
  for (const auto& g : general_linear_group(field))
    for (const auto& l : units) {
      Similarity s{g, l};
      if (is_similarity(s, q, q)) go.push_back(std::move(s));
    }

  const AlgebraStructure4 c0 = even_clifford_algebra(q);
  const auto aut_list = automorphism_group(c0);
  std::set<Mat4> aut, aut_prime, saut;
  rep.det_one = true;
  for (const auto& phi : aut_list) {
    const Elem d = lambda2_determinant(phi);
    aut.insert(phi.matrix);
    if (is_square(d)) aut_prime.insert(phi.matrix);
    if (d.is_one()) saut.insert(phi.matrix);
    if (!d.is_one()) rep.det_one = false;
  }
  rep.aut_order = aut.size();
  rep.aut_prime_order = aut_prime.size();
  rep.saut_order = saut.size();

  const Mat4 identity = Mat4::identity(field);
  std::set<Mat4> go_image, o_image, so_image;
  std::size_t so_count = 0, o_count = 0;
  std::vector<Similarity> go_kernel, o_kernel;
  rep.det_relation = true;
  for (const auto& s : go) {
    const AlgebraMap phi = c0_of_similarity(s, q);
    if (lambda2_determinant(phi) != s.g.det().pow(2) * s.l.pow(-3)) rep.det_relation = false;
    go_image.insert(phi.matrix);
    if (phi.matrix == identity) go_kernel.push_back(s);
    if (!s.l.is_one()) continue;
    ++o_count;
    o_image.insert(phi.matrix);
    if (phi.matrix == identity) o_kernel.push_back(s);
    if (s.g.det().is_one()) {
      ++so_count;
      so_image.insert(phi.matrix);
    }
  }
  rep.go_order = go.size();
  rep.o_order = o_count;
  rep.so_order = so_count;

  std::set<Similarity, decltype([](const Similarity& x, const Similarity& y) {
             return std::tie(x.g, x.l) < std::tie(y.g, y.l);
           })>
      expected_o_kernel, expected_go_kernel, got_o_kernel(o_kernel.begin(), o_kernel.end()),
      got_go_kernel(go_kernel.begin(), go_kernel.end());
  for (const auto& c : mu2) expected_o_kernel.insert({Mat3::scalar(c), field.one()});
  for (const auto& c : units) expected_go_kernel.insert({Mat3::scalar(c), c * c});
  rep.o_kernel_is_mu2 = got_o_kernel.size() == o_kernel.size() && got_o_kernel == expected_o_kernel;
  rep.go_kernel_is_scalars = got_go_kernel.size() == go_kernel.size() && got_go_kernel == expected_go_kernel;
  rep.o_onto_aut_prime = o_image == aut_prime;
  rep.go_onto_aut = go_image == aut;
  rep.so_bijective = so_image == saut && so_image.size() == so_count;
  rep.counting = o_count == o_image.size() * rep.mu2_order;

  // s+_1 on Aut: a section and a homomorphism.
  const LiftVariant splus{LiftVariant::Kind::s_plus, 1};
  std::map<Mat4, Similarity> lifted;
  rep.splus_section = true;
  rep.splus_saut_in_so = true;
  for (const auto& phi : aut_list) {
    const Similarity s = lift_section(phi, q, q, splus);
    if (c0_of_similarity(s, q) != phi) rep.splus_section = false;
    if (saut.count(phi.matrix) && !(s.l.is_one() && s.g.det().is_one())) rep.splus_saut_in_so = false;
    lifted.emplace(phi.matrix, s);
  }
  rep.splus_homomorphism = true;
  for (const auto& [m1, s1] : lifted)
    for (const auto& [m2, s2] : lifted) {
      const auto it = lifted.find(m2 * m1);
      if (it == lifted.end() || it->second != s1.then(s2)) rep.splus_homomorphism = false;
    }

  rep.pass = rep.o_kernel_is_mu2 && rep.o_onto_aut_prime && rep.go_kernel_is_scalars && rep.go_onto_aut &&
             rep.so_bijective && rep.det_one && rep.det_relation && rep.splus_section && rep.splus_homomorphism &&
             rep.splus_saut_in_so && rep.counting;
  return rep;
}

}  // namespace evencl
