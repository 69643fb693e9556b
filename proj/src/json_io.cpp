#include "evencl/json_io.hpp"

#include <vector>

namespace evencl {
namespace {

std::vector<Elem> parse_list(const Ring& r, std::string_view text, std::size_t expected, std::string_view what) {
  std::vector<Elem> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find_first_of(",;", start);
    auto item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(r.parse_element(item));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (out.size() != expected)
    throw Error(Errc::parse_error, std::string(what) + " needs " + std::to_string(expected) + " entries, got " +
                                       std::to_string(out.size()));
  return out;
}

template <std::size_t N>
Json matrix_json(const Matrix<N>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < N; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < N; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Elem elem_from_json(const Ring& r, const Json& j) {
  if (j.is_string()) return r.parse_element(j.get<std::string>());
  if (j.is_number_integer()) return r.from_int(j.get<long long>());
  throw Error(Errc::parse_error, "ring element must be a string or integer: " + j.dump());
}

template <std::size_t N>
Matrix<N> matrix_from_json(const Ring& r, const Json& j) {
  if (!j.is_array() || j.size() != N) throw Error(Errc::parse_error, "expected " + std::to_string(N) + " rows");
  Matrix<N> m(r);
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_array() || j[i].size() != N) throw Error(Errc::parse_error, "row " + std::to_string(i));
    for (std::size_t k = 0; k < N; ++k) m(i, k) = elem_from_json(r, j[i][k]);
  }
  return m;
}

Ring ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string())
    throw Error(Errc::parse_error, "missing \"ring\" descriptor");
  return Ring::parse(j["ring"].get<std::string>());
}

}  // namespace

Json to_json(const Elem& x) { return x.to_string(); }

Json to_json(const QuadraticForm3& q) {
  Json c = Json::array();
  for (const auto& x : q.coeffs()) c.push_back(to_json(x));
  return {{"ring", q.ring().descriptor()}, {"coeffs", c}};
}

Json to_json(const BilinearForm3& b) { return {{"ring", b.ring().descriptor()}, {"matrix", matrix_json(b.matrix)}}; }

Json to_json(const AlgebraStructure4& a) {
  Json c = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < 4; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < 4; ++k) row.push_back(to_json(a.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    c.push_back(std::move(plane));
  }
  return {{"ring", a.ring().descriptor()}, {"constants", c}};
}

Json to_json(const AlgebraMap& phi) { return {{"ring", phi.ring().descriptor()}, {"matrix", matrix_json(phi.matrix)}}; }

Json to_json(const Similarity& s) {
  return {{"ring", s.g.ring().descriptor()}, {"g", matrix_json(s.g)}, {"l", to_json(s.l)}};
}

Json to_json(const BijectionReport& r) {
  return {{"field", r.field},
          {"forms", r.forms},
          {"witt_classes", r.witt_classes},
          {"orbit_classes", r.orbit_classes},
          {"equal", r.equal},
          {"semiregular_classes", r.semiregular_classes},
          {"azumaya_classes", r.azumaya_classes},
          {"lift_independent", r.lift_independent},
          {"orbit_witnesses_valid", r.orbit_witnesses_valid},
          {"azumaya_bijection", r.azumaya_bijection},
          {"pass", r.pass}};
}

Json to_json(const ExactRowsReport& r) {
  return {{"field", r.field},
          {"form", to_json(r.form)},
          {"orders",
           {{"GO", r.go_order},
            {"O", r.o_order},
            {"SO", r.so_order},
            {"Aut", r.aut_order},
            {"Aut_prime", r.aut_prime_order},
            {"S_Aut", r.saut_order},
            {"mu2", r.mu2_order}}},
          {"o_kernel_is_mu2", r.o_kernel_is_mu2},
          {"o_onto_aut_prime", r.o_onto_aut_prime},
          {"go_kernel_is_scalars", r.go_kernel_is_scalars},
          {"go_onto_aut", r.go_onto_aut},
          {"so_bijective", r.so_bijective},
          {"det_one", r.det_one},
          {"det_relation", r.det_relation},
          {"splus_section", r.splus_section},
          {"splus_homomorphism", r.splus_homomorphism},
          {"splus_saut_in_so", r.splus_saut_in_so},
          {"counting", r.counting},
          {"pass", r.pass}};
}

Json to_json(const AgreementRow& row) {
  return {{"B", to_json(row.b)},
          {"d0", to_json(row.d0)},
          {"semiregular", row.semiregular},
          {"azumaya", row.azumaya},
          {"agree", row.agree()}};
}

QuadraticForm3 form_from_json(const Json& j) {
  const Ring r = ring_from_json(j);
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].size() != 6)
    throw Error(Errc::parse_error, "form needs six \"coeffs\"");
  std::array<Elem, 6> c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = elem_from_json(r, j["coeffs"][i]);
  return QuadraticForm3(r, c);
}

BilinearForm3 bilinear_from_json(const Json& j) {
  const Ring r = ring_from_json(j);
  if (!j.contains("matrix")) throw Error(Errc::parse_error, "bilinear form needs \"matrix\"");
  return {matrix_from_json<3>(r, j["matrix"])};
}

AlgebraStructure4 algebra_from_json(const Json& j) {
  const Ring r = ring_from_json(j);
  const Json& c = j.contains("constants") ? j["constants"] : Json();
  if (!c.is_array() || c.size() != 4) throw Error(Errc::parse_error, "algebra needs 4x4x4 \"constants\"");
  AlgebraStructure4 a(r);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c[i].is_array() || c[i].size() != 4) throw Error(Errc::parse_error, "constants plane " + std::to_string(i));
    for (std::size_t k = 0; k < 4; ++k) {
      const Json& row = c[i][k];
      if (!row.is_array() || row.size() != 4) throw Error(Errc::parse_error, "constants row");
      for (std::size_t m = 0; m < 4; ++m) a.at(i, k, m) = elem_from_json(r, row[m]);
    }
  }
  return a;
}

AlgebraMap map_from_json(const Json& j) {
  const Ring r = ring_from_json(j);
  if (!j.contains("matrix")) throw Error(Errc::parse_error, "algebra map needs \"matrix\"");
  return {matrix_from_json<4>(r, j["matrix"])};
}

QuadraticForm3 parse_form(const Ring& r, std::string_view text) {
  const auto v = parse_list(r, text, 6, "form");
  return QuadraticForm3(r, {v[0], v[1], v[2], v[3], v[4], v[5]});
}

Mat3 parse_matrix3(const Ring& r, std::string_view text) {
  const auto v = parse_list(r, text, 9, "3x3 matrix");
  Mat3 m(r);
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
  return m;
}

Mat4 parse_matrix4(const Ring& r, std::string_view text) {
  const auto v = parse_list(r, text, 16, "4x4 matrix");
  Mat4 m(r);
  for (std::size_t i = 0; i < 16; ++i) m(i / 4, i % 4) = v[i];
  return m;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace evencl
