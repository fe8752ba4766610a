#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "spherecomb/complex.hpp"
#include "spherecomb/errors.hpp"
#include "spherecomb/link.hpp"
#include "spherecomb/macaulay.hpp"
#include "spherecomb/orthopath.hpp"
#include "spherecomb/realize.hpp"
#include "spherecomb/vectors.hpp"

using namespace sc;
using nlohmann::json;

namespace {

struct Args {
  std::string generator, file, h, f, g, gamma, z, format = "json", mode = "sphere", strategy = "max", scheme = "chebyshev";
  std::string rho = "1/2", given;
  int d = -1, N = -1, m = -1, r = -1;
  long cap = -1;
  unsigned seed = 0;
  long guard_faces = 2000000;
  bool assume_premise = false;
};

json ints_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

json opt_json(const std::optional<Int>& v) { return v ? json(to_string(*v)) : json(nullptr); }
json opt_json(const std::optional<Rat>& v) { return v ? json(to_string(*v)) : json(nullptr); }

std::string scalar_text(const json& v, bool table) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
    return table && digits ? shorten(s) : s;
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out, bool table) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out, table);
  } else if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
    if (flat) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i], table);
      out.emplace_back(path, "(" + s + ")");
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out, table);
    }
  } else {
    out.emplace_back(path, scalar_text(v, table));
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows, format == "table");
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << k << ",\"" << v << "\"\n";
    return;
  }
  std::size_t w = 0;
  for (const auto& kv : rows) w = std::max(w, kv.first.size());
  for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
}

SimplicialComplex load_complex(const Args& a) {
  if (!a.generator.empty() && !a.file.empty()) throw ParseError("give either --generator or --file, not both");
  SimplicialComplex K = !a.generator.empty() ? generate(a.generator) : load_facets(a.file);
  long total = 0;
  for (const auto& fv : f_vector(K).f) total += fv.get_si();
  if (total > a.guard_faces) throw SizeGuard("complex has more faces than --guard-faces");
  return K;
}

bool has_complex(const Args& a) { return !a.generator.empty() || !a.file.empty(); }

int count_sources(const Args& a) {
  return has_complex(a) + !a.h.empty() + !a.f.empty() + !a.g.empty() + !a.gamma.empty();
}

// full h-vector from whichever source was given
std::vector<Int> resolve_h(const Args& a, std::optional<SimplicialComplex>* K = nullptr) {
  if (count_sources(a) != 1) throw ParseError("give exactly one of --generator, --file, --h, --f, --g, --gamma");
  if (has_complex(a)) {
    SimplicialComplex c = load_complex(a);
    auto h = h_vector(c).entries;
    if (K) *K = c;
    return h;
  }
  if (!a.h.empty()) return parse_int_csv(a.h);
  if (!a.f.empty()) {
    auto f = parse_int_csv(a.f);
    return f_to_h(f, static_cast<int>(f.size())).entries;
  }
  if (a.d < 0) throw ParseError("--g and --gamma need --d");
  if (!a.g.empty()) {
    auto g = parse_int_csv(a.g);
    if (static_cast<int>(g.size()) != a.d / 2 + 1) throw ShapeError("--g needs floor(d/2)+1 entries");
    std::vector<Int> half;
    Int s = 0;
    for (const Int& x : g) half.push_back(s += x);
    return mirror_h(half, a.d);
  }
  return gamma_to_full_h(parse_int_csv(a.gamma), a.d);
}

json verdict_json(const CheckVerdict& v) {
  json j;
  j["ok"] = v.ok;
  j["failing_index"] = v.failing_index;
  j["reason"] = v.reason;
  j["trimmed_trailing_zeros"] = v.trimmed_trailing_zeros;
  return j;
}

int cmd_vectors(const Args& a) {
  std::optional<SimplicialComplex> K;
  auto h = resolve_h(a, &K);
  int d = static_cast<int>(h.size()) - 1;
  json j;
  j["d"] = d;
  if (K) j["f"] = ints_json(f_vector(*K).f);
  else {
    auto f = h_to_f(h, d).entries;
    j["f"] = ints_json(std::vector<Int>(f.begin() + 1, f.end()));
  }
  j["h"] = ints_json(h);
  bool ds = dehn_sommerville_check(h);
  j["dehn_sommerville"] = ds;
  if (!ds) throw NotReciprocal("h = (" + join(h) + ") is not reciprocal");
  j["g_trunc"] = ints_json(h_to_g(h, false).entries);
  j["g_ext"] = ints_json(h_to_g(h, true).entries);
  auto cheb = gamma_via_chebyshev(h);
  j["gamma"] = ints_json(cheb);
  if (d % 2 == 0) {
    auto mat = h_half_to_gamma(std::vector<Int>(h.begin(), h.begin() + d / 2 + 1), d);
    j["gamma_matrix_agrees"] = mat == cheb;
  }
  emit(j, a.format);
  return 0;
}

int cmd_check(const Args& a, const std::string& which) {
  CheckVerdict v;
  json j;
  j["mode"] = which;
  if (which == "fvector") {
    if (a.f.empty()) throw ParseError("check fvector needs --f");
    auto f = parse_int_csv(a.f);
    j["f"] = ints_json(f);
    v = check_f_vector(f);
  } else {
    std::vector<Int> h;
    if (which == "cm") {
      if (a.h.empty()) throw ParseError("check cm needs --h");
      h = parse_int_csv(a.h);
      v = check_cm_h(h);
    } else {
      h = resolve_h(a);
      v = check_sphere_g(h);
    }
    j["h"] = ints_json(h);
  }
  j["verdict"] = verdict_json(v);
  emit(j, a.format);
  return v.ok ? 0 : 1;
}

json tri_json(Tri t) { return tri_name(t); }

int cmd_link(const Args& a) {
  if (!has_complex(a)) throw ParseError("link analyze needs --generator or --file");
  SimplicialComplex K = load_complex(a);
  auto lc = check_link_condition(K);
  if (!lc.all_ok) {
    json j;
    j["error"] = "link condition fails";
    json e = json::array();
    for (const Face& f : lc.violations()) e.push_back(face_str(f));
    j["violating_edges"] = e;
    emit(j, a.format);
    return 3;
  }
  LinkOptions o;
  o.verify_premise = !a.assume_premise;
  LinkReport r = analyze_link(K, o);
  json j;
  j["d"] = r.d;
  j["f1"] = to_string(r.f1);
  j["f1_identity_ok"] = r.f1_identity_ok;
  j["h"] = ints_json(r.h.entries);
  j["g_trunc"] = ints_json(r.g_trunc.entries);
  j["g_ext"] = ints_json(r.g_ext.entries);
  for (const auto& row : r.vertex_rows)
    j["vertex_identity"].push_back({{"i", row.index}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"equal", row.equal}});
  for (const auto& row : r.edge_rows)
    j["edge_identity"].push_back({{"k", row.index}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"equal", row.equal}});
  for (const auto& c : r.c_rows)
    j["edge_sums"].push_back({{"k", c.k}, {"direct", to_string(c.direct)}, {"closed", to_string(c.closed)}, {"equal", c.equal}});
  j["contraction_ok"] = r.contraction_ok;
  j["premise"] = r.premise_status;
  j["interlacing"] = json::array();
  for (const auto& row : r.interlacing)
    j["interlacing"].push_back({{"k", row.k}, {"alpha", opt_json(row.alpha)}, {"beta", opt_json(row.beta)},
                                {"degenerate", row.degenerate}, {"low_ok", row.low_ok}, {"high_ok", row.high_ok}});
  j["sandwiches"] = json::array();
  for (const auto& s : r.sandwiches)
    j["sandwiches"].push_back({{"i", s.i}, {"lower", s.lower.str()}, {"mid", to_string(s.mid)}, {"upper", s.upper.str()},
                               {"lower_le_mid", tri_json(s.lower_le_mid)}, {"mid_le_upper", tri_json(s.mid_le_upper)},
                               {"cushion_nonneg", s.cushion_nonneg}, {"premise_violation", s.premise_violation}, {"note", s.note}});
  j["triviality"] = json::array();
  for (const auto& t : r.triviality) {
    json row{{"k", t.k}, {"skipped", t.skipped}};
    if (t.skipped) {
      row["reason"] = t.reason;
    } else {
      row["r_prev"] = to_string(t.r_prev);
      row["r_k"] = to_string(t.r_k);
      row["omega"] = t.omega.str();
      row["ratlowbd"] = t.ratlowbd_applicable ? json(t.ratlowbd.str()) : json(nullptr);
      row["trivial_test"] = tri_json(t.trivial_test);
      row["tags"] = t.tags;
      row["r_in_unit"] = t.r_in_unit;
    }
    j["triviality"].push_back(row);
  }
  j["identities_ok"] = r.identities_ok();
  emit(j, a.format);
  return r.identities_ok() ? 0 : 1;
}

int cmd_extend(const Args& a) {
  if (a.gamma.empty() || a.d < 0) throw ParseError("extend needs --gamma and --d");
  Mode mode = parse_mode(a.mode);
  Strategy s;
  s.cap = a.cap;
  if (a.strategy == "max") {
    s.kind = Strategy::max;
  } else if (a.strategy == "fraction") {
    s.kind = Strategy::fraction;
    s.rho = parse_rat(a.rho);
  } else if (a.strategy == "given") {
    s.kind = Strategy::given;
    s.values = parse_int_csv(a.given);
  } else if (a.strategy == "random") {
    std::mt19937 rng(a.seed);
    s.kind = Strategy::fraction;
    s.rho = Rat(1 + static_cast<long>(rng() % 100), 100);
    s.rho.canonicalize();
  } else {
    throw ParseError("unknown strategy '" + a.strategy + "'");
  }
  auto r = extend_gamma(parse_int_csv(a.gamma), a.d, mode, s);
  json j;
  j["d"] = a.d;
  j["mode"] = mode_name(mode);
  if (s.kind == Strategy::fraction) j["rho"] = to_string(s.rho);
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"index", row.index}, {"mode", mode_name(row.mode)},
                         {"upper", row.unbounded ? json("unbounded") : opt_json(row.upper)},
                         {"chosen", to_string(row.chosen)}, {"slack", to_string(row.slack)}});
  j["gamma"] = ints_json(r.gamma);
  j["complete"] = r.complete;
  if (!r.complete) j["infeasible_index"] = r.infeasible_index;
  else j["h"] = ints_json(gamma_to_full_h(r.gamma, a.d));
  emit(j, a.format);
  return r.complete ? 0 : 1;
}

WeightScheme scheme_of(const Args& a, int N) {
  if (a.scheme == "chebyshev") return chebyshev_scheme(N);
  return load_weights(a.scheme);
}

int cmd_ortho(const Args& a, const std::string& which) {
  json j;
  if (which == "mu") {
    if (a.N < 0) throw ParseError("ortho mu needs --N");
    auto w = scheme_of(a, a.N);
    auto mu = mu_matrix(w, a.N);
    j["N"] = a.N;
    auto ratios = mu_ratios(mu);
    for (std::size_t n = 0; n < mu.size(); ++n) {
      j["mu"].push_back(rats_json(std::vector<Rat>(mu[n].begin(), mu[n].begin() + static_cast<long>(n) + 1)));
      json r = json::array();
      for (std::size_t s = 0; s < n; ++s) r.push_back(opt_json(ratios[n][s]));
      j["ratios"].push_back(r);
    }
    j["inverse_pair_ok"] = inverse_pair_check(w, a.N);
  } else if (which == "invert") {
    if (a.z.empty()) throw ParseError("ortho invert needs --z");
    auto z = parse_rat_csv(a.z);
    auto w = scheme_of(a, static_cast<int>(z.size()) - 1);
    auto f = formal_h(z, w);
    j["N"] = f.N;
    j["q"] = rats_json(f.q);
    j["h"] = rats_json(f.h);
    j["g"] = rats_json(f.g);
    auto u = formal_unimodality_check(z, w);
    j["monotone"] = u.monotone;
    j["per_l"] = u.per_l;
    j["thresholds"] = rats_json(u.thresholds);
    j["literal_condition"] = u.literal_condition;
    j["coefficient_condition"] = u.coefficient_condition;
  } else if (which == "covers") {
    if (a.m < 0 || a.r < 0) throw ParseError("ortho covers needs --m and --r");
    auto w = scheme_of(a, a.m);
    auto P = unitary_family(w, a.m);
    Rat c = coefficient_via_covers(w, a.m, a.r);
    Rat want = a.r <= a.m ? P[static_cast<std::size_t>(a.m)][static_cast<std::size_t>(a.r)] : Rat(0);
    j["m"] = a.m;
    j["r"] = a.r;
    j["cover_sum"] = to_string(c);
    j["coefficient"] = to_string(want);
    j["agree"] = c == want;
    if (a.m >= 2) {
      auto dc = dimer_identity_check(a.m, a.r);
      j["dimer_identity"] = {{"lhs", to_string(dc.lhs)}, {"rhs", to_string(dc.rhs)}, {"A", to_string(dc.A)},
                             {"B", to_string(dc.B)}, {"vacuous", dc.vacuous}, {"ok", dc.ok}};
    }
  } else {
    auto h = resolve_h(a);
    int d = static_cast<int>(h.size()) - 1;
    if (d % 2 != 0) throw RangeError("gamma-dimers needs even d");
    if (!dehn_sommerville_check(h)) throw NotReciprocal("h is not reciprocal");
    auto g = gamma_via_covers(h);
    j["h"] = ints_json(h);
    j["gamma"] = ints_json(g);
    j["agrees_with_matrix"] = g == h_half_to_gamma(std::vector<Int>(h.begin(), h.begin() + d / 2 + 1), d);
    j["agrees_with_chebyshev"] = g == gamma_via_chebyshev(h);
  }
  emit(j, a.format);
  return 0;
}

void add_input(CLI::App* c, Args& a) {
  c->add_option("--generator", a.generator, "cross:d, simplexboundary:d or cycle:n");
  c->add_option("--file", a.file, "facet file");
  c->add_option("--h", a.h, "h-vector, comma separated");
  c->add_option("--f", a.f, "f-vector f_0.. comma separated");
  c->add_option("--g", a.g, "truncated g-vector");
  c->add_option("--gamma", a.gamma, "gamma vector");
  c->add_option("--d", a.d, "ambient d");
  c->add_option("--guard-faces", a.guard_faces, "largest complex accepted")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherecomb: face numbers of simplicial spheres"};
  app.set_help_flag("--help", "print help");
  app.fallthrough();
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", a.seed, "seed for randomized strategies");

  auto* vec = app.add_subcommand("vectors", "f, h, g and gamma of a complex or vector");
  add_input(vec, a);

  auto* chk = app.add_subcommand("check", "necessary conditions on face numbers");
  chk->require_subcommand(1);
  std::string check_mode;
  for (const char* m : {"fvector", "cm", "sphere"}) {
    auto* s = chk->add_subcommand(m);
    add_input(s, a);
    s->callback([&check_mode, m] { check_mode = m; });
  }

  auto* lnk = app.add_subcommand("link", "link condition identities and inequalities");
  lnk->require_subcommand(1);
  auto* ana = lnk->add_subcommand("analyze");
  add_input(ana, a);
  ana->add_flag("--assume-premise", a.assume_premise, "skip the contraction recount");

  auto* ext = app.add_subcommand("extend", "extend a gamma prefix step by step");
  add_input(ext, a);
  ext->add_option("--mode", a.mode, "sphere, cm or fvector");
  ext->add_option("--strategy", a.strategy, "max, fraction, given or random");
  ext->add_option("--rho", a.rho, "fraction in (0,1]");
  ext->add_option("--values", a.given, "given values, comma separated");
  ext->add_option("--cap", a.cap, "value at unbounded steps (default d)");

  auto* ort = app.add_subcommand("ortho", "Motzkin path weights and covers");
  ort->require_subcommand(1);
  std::string ortho_mode;
  for (const char* m : {"mu", "invert", "covers", "gamma-dimers"}) {
    auto* s = ort->add_subcommand(m);
    add_input(s, a);
    s->add_option("--N", a.N, "path length");
    s->add_option("--scheme", a.scheme, "chebyshev or a weights JSON file");
    s->add_option("--z", a.z, "generalized gamma z_0..z_N");
    s->add_option("--m", a.m, "interval length");
    s->add_option("--r", a.r, "missing cells");
    s->callback([&ortho_mode, m] { ortho_mode = m; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (vec->parsed()) return cmd_vectors(a);
    if (chk->parsed()) return cmd_check(a, check_mode);
    if (lnk->parsed()) return cmd_link(a);
    if (ext->parsed()) return cmd_extend(a);
    if (ort->parsed()) return cmd_ortho(a, ortho_mode);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
