// Command-line front end: every subcommand prints one JSON object on stdout.
// Exit codes: 0 success, 1 verification failure or domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "evencl/acceptance.hpp"
#include "evencl/azumaya.hpp"
#include "evencl/classify.hpp"
#include "evencl/json_io.hpp"

using namespace evencl;

namespace {

struct Options {
  std::string ring = "q";
  std::string form, bilinear, algebra, variant = "splus:1", field, g, l, map, target;
  std::vector<std::string> suites;
  bool all = false;
  bool json = true;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const Json& j, int code = 0) {
  std::cout << canonical_dump(j) << "\n";
  return code;
}

// --algebra takes inline JSON or @path.
Json read_json_arg(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("--algebra: cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("--algebra: ") + e.what());
  }
}

QuadraticForm3 need_form(const Options& o, const Ring& r) {
  if (o.form.empty()) throw UsageError("--form is required");
  return parse_form(r, o.form);
}

BilinearForm3 need_bilinear(const Options& o, const Ring& r) {
  if (o.bilinear.empty()) throw UsageError("--bilinear is required");
  return {parse_matrix3(r, o.bilinear)};
}

// The lift used for a form: --bilinear if given (it must induce --form), else the upper lift.
BilinearForm3 lift_for(const Options& o, const Ring& r) {
  if (o.bilinear.empty()) return default_lift(need_form(o, r));
  BilinearForm3 b = need_bilinear(o, r);
  if (!o.form.empty() && induced_quadratic(b) != parse_form(r, o.form))
    throw UsageError("--bilinear does not induce --form");
  return b;
}

AlgebraStructure4 algebra_input(const Options& o, const Ring& r) {
  if (!o.algebra.empty()) return algebra_from_json(read_json_arg(o.algebra));
  return upsilon(need_bilinear(o, r));
}

int cmd_c0(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  return emit(to_json(upsilon(lift_for(o, r))));
}

int cmd_d0(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const auto q = need_form(o, r);
  return emit({{"d0", to_json(half_discriminant(q))}, {"semiregular", is_semiregular(q)}});
}

int cmd_semiregular(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const auto q = need_form(o, r);
  Json out = {{"form", to_json(q)}, {"d0", to_json(half_discriminant(q))}, {"semiregular", is_semiregular(q)}};
  if (r.is_prime_field() && r.characteristic_prime() <= 5) out["azumaya"] = is_azumaya(even_clifford_algebra(q));
  return emit(out);
}

int cmd_upsilon(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  return emit(to_json(upsilon(need_bilinear(o, r))));
}

int cmd_recover(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const AlgebraStructure4 a = algebra_input(o, r);
  const BilinearForm3 b = recover_bilinear(a);
  return emit({{"bilinear", to_json(b)}, {"form", to_json(induced_quadratic(b))}, {"roundtrip", upsilon(b) == a}});
}

int cmd_opposite(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const AlgebraStructure4 a = algebra_input(o, r);
  Json out = to_json(opposite(a));
  if (o.algebra.empty()) {
    const auto b = need_bilinear(o, r);
    out["matches_minus_transpose"] = opposite(a) == upsilon({-b.matrix.transpose()});
  }
  return emit(out);
}

int cmd_lift(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const auto q = need_form(o, r);
  const auto variant = LiftVariant::parse(o.variant);
  AlgebraMap phi;
  QuadraticForm3 target;
  if (!o.map.empty()) {
    if (o.target.empty()) throw UsageError("--map needs --target");
    phi = {parse_matrix4(r, o.map)};
    target = parse_form(r, o.target);
  } else {
    if (o.g.empty()) throw UsageError("lift needs --g (with --l) or --map (with --target)");
    const Similarity s{parse_matrix3(r, o.g), o.l.empty() ? r.one() : r.parse_element(o.l)};
    target = act_similarity(s, q);
    phi = c0_of_similarity(s, q, target);
  }
  const Similarity lifted = lift_section(phi, q, target, variant);
  return emit({{"variant", variant.to_string()},
               {"phi", to_json(phi)},
               {"target", to_json(target)},
               {"det_lambda2", to_json(transfer_to_lambda2(phi, q, target).det())},
               {"similarity", to_json(lifted)},
               {"induces_phi", c0_of_similarity(lifted, q) == phi}});
}

int cmd_classify(const Options& o) {
  if (o.field.empty()) throw UsageError("--field is required");
  const Ring f = Ring::parse(o.field);
  const auto report = verify_bijection(f);
  const auto witt = witt_partition(f);
  std::vector<std::size_t> sizes(witt.class_count(), 0);
  for (int c : witt.class_of) ++sizes[c];
  Json classes = Json::array();
  for (std::size_t c = 0; c < witt.class_count(); ++c) {
    const auto& rep = witt.forms[witt.representatives[c]];
    classes.push_back({{"representative", to_json(rep)},
                       {"size", sizes[c]},
                       {"semiregular", is_semiregular(rep)},
                       {"d0", to_json(half_discriminant(rep))}});
  }
  Json out = to_json(report);
  out["classes"] = classes;
  return emit(out, report.pass ? 0 : 1);
}

int cmd_autgroup(const Options& o) {
  const Ring r = Ring::parse(o.ring);
  const auto aut = automorphism_group(upsilon(lift_for(o, r)));
  Json maps = Json::array();
  std::set<std::string> dets;
  for (const auto& phi : aut) {
    maps.push_back(to_json(phi)["matrix"]);
    dets.insert(lambda2_determinant(phi).to_string());
  }
  return emit({{"ring", r.descriptor()}, {"order", aut.size()}, {"determinants", dets}, {"automorphisms", maps}});
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.suites;
  if (o.all) suites = acceptance_suites();
  if (suites.empty()) throw UsageError("verify needs --suite <name> or --all");
  const std::set<std::string> known(acceptance_suites().begin(), acceptance_suites().end());
  for (const auto& s : suites)
    if (!known.count(s)) throw UsageError("--suite: unknown suite '" + s + "'");
  const auto results = run_acceptance(suites, o.seed, o.jobs);
  bool pass = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    criteria.push_back({{"id", r.id}, {"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  return emit({{"pass", pass}, {"seed", o.seed}, {"criteria", criteria}}, pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even Clifford algebras of ternary quadratic forms over small rings"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App* c) { c->add_option("--ring", o.ring, "z, q, fp:<p>, zmod:<p>^<k>, dual:<p>"); };
  auto add_form = [&](CLI::App* c) { c->add_option("--form", o.form, "a1,a2,a3,u23,u13,u12"); };
  auto add_bilinear = [&](CLI::App* c) { c->add_option("--bilinear", o.bilinear, "nine entries, row by row"); };
  auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", o.algebra, "AlgebraStructure4 JSON or @file"); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed for randomized suites");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_flag("--json", o.json, "JSON output (always on)");
  };

  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> fn) {
    auto* c = app.add_subcommand(name, help);
    add_common(c);
    handlers[name] = std::move(fn);
    return c;
  };

  auto* c0 = sub("c0", "even Clifford algebra of a form", cmd_c0);
  add_ring(c0), add_form(c0), add_bilinear(c0);
  auto* d0 = sub("d0", "half-discriminant", cmd_d0);
  add_ring(d0), add_form(d0);
  auto* sr = sub("semiregular", "semiregularity (and Azumaya verdict over F_p, p <= 5)", cmd_semiregular);
  add_ring(sr), add_form(sr);
  auto* up = sub("upsilon", "algebra structure of a bilinear form", cmd_upsilon);
  add_ring(up), add_bilinear(up);
  auto* rec = sub("recover", "bilinear form of a specialized algebra", cmd_recover);
  add_ring(rec), add_bilinear(rec), add_algebra(rec);
  auto* op = sub("opposite", "opposite algebra", cmd_opposite);
  add_ring(op), add_bilinear(op), add_algebra(op);
  auto* lift = sub("lift", "similarity inducing an algebra isomorphism", cmd_lift);
  add_ring(lift), add_form(lift);
  lift->add_option("--variant", o.variant, "sprime, s:<2k+1>, splus:<2k+1>");
  lift->add_option("--g", o.g, "similarity matrix, nine entries");
  lift->add_option("--l", o.l, "multiplier");
  lift->add_option("--map", o.map, "algebra map, sixteen entries");
  lift->add_option("--target", o.target, "target form of --map");
  auto* cls = sub("classify", "Witt and orbit partitions over fp:2 or fp:3", cmd_classify);
  cls->add_option("--field", o.field, "fp:2 or fp:3");
  auto* aut = sub("autgroup", "automorphisms of the even Clifford algebra", cmd_autgroup);
  add_ring(aut), add_form(aut), add_bilinear(aut);
  auto* ver = sub("verify", "acceptance suites", cmd_verify);
  ver->add_option("--suite", o.suites, "suite name (repeatable)");
  ver->add_flag("--all", o.all, "every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    emit({{"error", "UsageError"}, {"message", e.what()}});
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(o);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return emit({{"error", "UsageError"}, {"message", e.what()}}, 2);
  } catch (const Error& e) {
    const int code = e.code() == Errc::parse_error || e.code() == Errc::invalid_descriptor ? 2 : 1;
    return emit({{"error", std::string(e.name())}, {"message", e.what()}}, code);
  }
}
