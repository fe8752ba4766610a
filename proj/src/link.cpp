#include "spherecomb/link.hpp"

#include "spherecomb/errors.hpp"

namespace sc {

static CountVector g_ext_of(const SimplicialComplex& K) { return h_to_g(h_vector(K).entries, true); }

Equality vertex_local_global_check(const SimplicialComplex& K, int i) {
  CountVector h = h_vector(K);
  int d = h.d;
  Equality e;
  for (int v : K.vertices()) e.lhs += h_vector(link(K, {v})).at_or_zero(i);
  e.rhs = (i + 1) * h.at_or_zero(i + 1) + (d - i) * h.at_or_zero(i);
  return e;
}

void require_link_condition(const SimplicialComplex& K) {
  for (const Face& e : K.edges())
    if (!link_condition_at(K, e))
      throw PreconditionError("link condition fails at edge " + face_str(e), face_str(e));
}

Rat edge_sum_closed(const CountVector& g, int k) {
  int d = g.d;
  Int rhs = (k + 1) * (k + 2) * g.at_or_zero(k + 2) + 2 * (k + 1) * (d - k) * g.at_or_zero(k + 1) +
            (d - k) * (d - k + 1) * g.at_or_zero(k);
  Rat r(rhs, 2);
  r.canonicalize();
  return r;
}

static std::vector<CountVector> edge_link_g(const SimplicialComplex& K) {
  std::vector<CountVector> out;
  for (const Face& e : K.edges()) out.push_back(g_ext_of(link(K, e)));
  return out;
}

Int edge_sum_direct(const SimplicialComplex& K, int k) {
  Int s = 0;
  for (const CountVector& g : edge_link_g(K)) s += g.at_or_zero(k);
  return s;
}

Equality edge_local_global_check(const SimplicialComplex& K, int k) {
  if (k < 0 || k > K.d() - 2) throw RangeError("edge identity index must satisfy 0 <= k <= d-2");
  require_link_condition(K);
  CountVector g = g_ext_of(K);
  Equality e;
  e.lhs = 2 * edge_sum_direct(K, k);
  Rat c = edge_sum_closed(g, k);
  e.rhs = 2 * c.get_num() / c.get_den();
  return e;
}

static ContractionCheck contraction_with(const SimplicialComplex& K, const CountVector& hK, const Face& e_in) {
  Face e = e_in;
  std::sort(e.begin(), e.end());
  if (!link_condition_at(K, e)) throw PreconditionError("link condition fails at edge " + face_str(e), face_str(e));
  int d = hK.d;
  ContractionCheck c;
  c.edge = e;
  ContractionResult cr = contract_edge(K, e);
  std::vector<Int> f = f_vector(cr.complex).f;
  f.resize(static_cast<std::size_t>(d), 0);
  c.recount = f_to_h(f, d).entries;
  CountVector hl = h_vector(link(K, e));
  c.formula = hK.entries;
  for (int k = 1; k <= d; ++k) c.formula[static_cast<std::size_t>(k)] -= hl.at_or_zero(k - 1);
  c.equal = c.recount == c.formula;
  c.g_nonneg = true;
  for (const Int& x : h_to_g(c.recount, false).entries)
    if (x < 0) c.g_nonneg = false;
  return c;
}

ContractionCheck contraction_h_check(const SimplicialComplex& K, const Face& e) {
  return contraction_with(K, h_vector(K), e);
}

Tri le_pow(const Rat& x, const Rat& b, unsigned long p, unsigned long q) {
  if (b < 0) throw RangeError("le_pow: negative base under a fractional power");
  if (x < 0) return Tri::True;
  for (mpfr_prec_t prec : {128, 256, 512, 1024}) {
    Tri t = le(Interval(x, prec), Interval(b, prec).pow_rat(p, q));
    if (t != Tri::Unknown) return t;
  }
  // x^q <= b^p exactly
  Int xn, xd, bn, bd;
  mpz_pow_ui(xn.get_mpz_t(), x.get_num_mpz_t(), q);
  mpz_pow_ui(xd.get_mpz_t(), x.get_den_mpz_t(), q);
  mpz_pow_ui(bn.get_mpz_t(), b.get_num_mpz_t(), p);
  mpz_pow_ui(bd.get_mpz_t(), b.get_den_mpz_t(), p);
  return xn * bd <= bn * xd ? Tri::True : Tri::False;
}

bool LinkReport::identities_ok() const {
  if (!f1_identity_ok || !contraction_ok) return false;
  for (const auto& r : vertex_rows)
    if (!r.equal) return false;
  for (const auto& r : edge_rows)
    if (!r.equal) return false;
  for (const auto& r : c_rows)
    if (!r.equal) return false;
  return true;
}

static const Int& c_of(const LinkReport& r, int k) { return r.c_rows.at(static_cast<std::size_t>(k)).direct; }

std::vector<InterlacingRow> interlacing_bounds(const LinkReport& r) {
  std::vector<InterlacingRow> out;
  int d = r.d;
  for (int k = 1; k <= d / 2 - 1; ++k) {
    InterlacingRow row{k, std::nullopt, std::nullopt, false, false, false};
    Int den_a = 2 * (r.f1 - (k + 1) * (d - k));
    Int den_b = k * (k + 1);
    if (den_a == 0) {
      row.degenerate = true;
    } else {
      Rat a((d - k) * (d - k + 1), den_a);
      a.canonicalize();
      row.alpha = a;
    }
    Rat b(2 * (r.f1 - k * (d - k + 1)), den_b);
    b.canonicalize();
    row.beta = b;
    Rat gk(r.g_trunc[static_cast<std::size_t>(k)]), gk1(r.g_trunc[static_cast<std::size_t>(k + 1)]);
    row.low_ok = row.alpha && *row.alpha * gk <= gk1;
    row.high_ok = gk1 <= *row.beta * gk;
    out.push_back(row);
  }
  return out;
}

SandwichCheck sandwich_from_report(const LinkReport& r, int i) {
  int d = r.d;
  if (i < 2 || i > d / 2 - 1)
    throw RangeError("sandwich index must satisfy 2 <= i <= floor(d/2)-1, got " + std::to_string(i));
  SandwichCheck s;
  s.i = i;
  Rat f1(r.f1), gi(r.g_trunc[static_cast<std::size_t>(i)]), gi1(r.g_trunc[static_cast<std::size_t>(i + 1)]);
  Rat c_prev(c_of(r, i - 1)), c_i(c_of(r, i));
  Rat base = f1 * gi - c_prev;
  Rat x = f1 * gi1 - c_i;
  s.mid = 2 * c_i;
  s.cushion_nonneg = x >= 0;
  auto ui = static_cast<unsigned long>(i);
  if (base < 0 || c_prev < 0) {
    s.premise_violation = true;
    s.note = "negative base under a fractional power";
    return s;
  }
  const mpfr_prec_t prec = 256;
  s.lower = Interval(2 * f1 * gi1, prec) - Interval(Rat(2), prec) * Interval(base, prec).pow_rat(ui + 1, ui);
  s.upper = Interval(Rat(2), prec) * Interval(c_prev, prec).pow_rat(ui, ui - 1);
  s.lower_le_mid = le_pow(x, base, ui + 1, ui);
  s.cushion_upper = s.lower_le_mid;
  s.mid_le_upper = le_pow(c_i, c_prev, ui, ui - 1);
  return s;
}

std::vector<TrivialityRow> triviality_diagnostics(const LinkReport& r) {
  std::vector<TrivialityRow> out;
  int d = r.d;
  const mpfr_prec_t prec = 256;
  for (int k = 1; k <= d / 2 - 1; ++k) {
    TrivialityRow row;
    row.k = k;
    Int gk = r.g_trunc[static_cast<std::size_t>(k)], gk1 = r.g_trunc[static_cast<std::size_t>(k + 1)];
    if (gk <= 0 || gk1 <= 0) {
      row.skipped = true;
      row.reason = "zero g entry";
      out.push_back(row);
      continue;
    }
    auto uk = static_cast<unsigned long>(k);
    row.r_prev = Rat(c_of(r, k - 1), r.f1 * gk);
    row.r_k = Rat(c_of(r, k), r.f1 * gk1);
    row.r_prev.canonicalize();
    row.r_k.canonicalize();
    row.r_in_unit = row.r_k >= 0 && row.r_k <= 1 && row.r_prev >= 0 && row.r_prev <= 1;
    Interval F1(Rat(r.f1), prec), Gk(Rat(gk), prec), Gk1(Rat(gk1), prec);
    row.omega = F1.pow_rat(1, uk) * Gk.pow_rat(uk + 1, uk) / Gk1;
    Interval one(Rat(1), prec);
    Interval rest(1 - row.r_prev, prec);
    if (row.r_prev >= 0) row.simplified = Interval(row.r_prev, prec).pow_rat(uk + 1, uk);
    // omega^(k/(k+1)) = f1^(1/(k+1)) g_k / g_{k+1}^(k/(k+1))
    Interval om_pow = F1.pow_rat(1, uk + 1) * Gk / Gk1.pow_rat(uk, uk + 1);
    Interval base = one - om_pow * rest;
    if (!base.surely_negative()) {
      row.ratlowbd_applicable = true;
      row.ratlowbd = base.pow_rat(uk + 1, uk);
      row.ratlowbd_ok = le(row.ratlowbd, Interval(row.r_k, prec));
    }
    if (row.r_prev <= 1) {
      Interval t = row.omega * rest.pow_rat(uk + 1, uk);
      Tri lt1 = lt(t, one);
      row.trivial_test = lt1 == Tri::True ? Tri::False : lt1 == Tri::False ? Tri::True : Tri::Unknown;
    }
    if (row.trivial_test == Tri::True) row.tags.push_back("trivial-by-M-vector");
    else if (row.trivial_test == Tri::False) row.tags.push_back("nontrivial-candidate");
    else row.tags.push_back("unknown");
    if (r.g_trunc[1] < d + 10) row.tags.push_back("interlacing-active");
    out.push_back(row);
  }
  return out;
}

LinkReport analyze_link(const SimplicialComplex& K, const LinkOptions& opt) {
  if (K.is_void() || !K.pure()) throw PreconditionError("complex must be pure and nonvoid", "");
  require_link_condition(K);
  LinkReport r;
  r.h = h_vector(K);
  r.d = r.h.d;
  int d = r.d;
  r.g_trunc = h_to_g(r.h.entries, false);
  r.g_ext = h_to_g(r.h.entries, true);
  auto edges = K.edges();
  r.f1 = static_cast<long>(edges.size());
  r.f1_identity_ok = r.f1 == binom(d + 1, 2) + d * r.g_ext.at_or_zero(1) + r.g_ext.at_or_zero(2);

  std::vector<CountVector> vlinks;
  for (int v : K.vertices()) vlinks.push_back(h_vector(link(K, {v})));
  for (int i = 0; i <= d; ++i) {
    Int lhs = 0;
    for (const auto& hl : vlinks) lhs += hl.at_or_zero(i);
    Int rhs = (i + 1) * r.h.at_or_zero(i + 1) + (d - i) * r.h.at_or_zero(i);
    r.vertex_rows.push_back({i, lhs, rhs, lhs == rhs});
  }

  std::vector<CountVector> elinks = edge_link_g(K);
  for (int k = 0; k <= d - 2; ++k) {
    Int direct = 0;
    for (const auto& g : elinks) direct += g.at_or_zero(k);
    Rat closed = edge_sum_closed(r.g_ext, k);
    r.c_rows.push_back({k, direct, closed, Rat(direct) == closed});
    Int rhs2 = 2 * closed.get_num() / closed.get_den();
    r.edge_rows.push_back({k, 2 * direct, rhs2, 2 * direct == rhs2});
  }

  if (opt.verify_premise) {
    bool nonneg = true;
    for (const Face& e : edges) {
      ContractionCheck c = contraction_with(K, r.h, e);
      if (!c.equal) r.contraction_ok = false;
      if (!c.g_nonneg) nonneg = false;
    }
    r.premise_status = !r.contraction_ok ? "failed: recount mismatch"
                       : nonneg          ? "verified numerically"
                                         : "failed: some contraction has a negative g entry";
  } else {
    r.premise_status = "assumed";
  }

  r.interlacing = interlacing_bounds(r);
  for (int i = 2; i <= d / 2 - 1; ++i) r.sandwiches.push_back(sandwich_from_report(r, i));
  r.triviality = triviality_diagnostics(r);
  return r;
}

SandwichCheck global_sandwich_check(const SimplicialComplex& K, int i) {
  int d = K.d();
  if (i < 2 || i > d / 2 - 1)
    throw RangeError("sandwich index must satisfy 2 <= i <= floor(d/2)-1, got " + std::to_string(i));
  LinkOptions o;
  o.verify_premise = false;
  return sandwich_from_report(analyze_link(K, o), i);
}

Surrogates surrogates(const std::vector<Int>& g_trunc, int d, int k) {
  if (k < 1 || k + 1 > d / 2) throw RangeError("surrogates need 1 <= k <= floor(d/2)-1");
  std::vector<Int> h_half(g_trunc.size());
  Int run = 0;
  for (std::size_t i = 0; i < g_trunc.size(); ++i) h_half[i] = run += g_trunc[i];
  CountVector g = h_to_g(mirror_h(h_half, d), true);
  Int f1 = binom(d + 1, 2) + d * g.at_or_zero(1) + g.at_or_zero(2);
  Surrogates s;
  s.d = d;
  s.k = k;
  Rat c_prev = edge_sum_closed(g, k - 1);
  Rat gk(g.at_or_zero(k)), gk1(g.at_or_zero(k + 1)), gk2(g.at_or_zero(k + 2));
  if (gk == 0 || gk1 == 0 || f1 == 0) throw RangeError("surrogates need nonzero g_k, g_{k+1}");
  s.r_prev = c_prev / (Rat(f1) * gk);
  s.q_k = gk1 / gk / Rat(f1);
  s.tail = (k + 1) * (k + 2) * (gk2 / gk1) / Rat(f1);
  s.g1_over_d = Rat(g.at_or_zero(1), d);
  s.g1_over_d.canonicalize();
  return s;
}

}  // namespace sc
