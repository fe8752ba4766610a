#include "spherecomb/orthopath.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "spherecomb/errors.hpp"
#include "spherecomb/macaulay.hpp"

namespace sc {

bool WeightScheme::positive() const {
  for (const Rat& x : b)
    if (x <= 0) return false;
  for (const Rat& x : lam)
    if (x <= 0) return false;
  return true;
}

WeightScheme chebyshev_scheme(int N) {
  WeightScheme w;
  w.b.assign(static_cast<std::size_t>(N + 1), Rat(1));
  for (int m = 1; m <= N + 1; ++m) w.lam.push_back(m == 1 ? Rat(1, 2) : Rat(1, 4));
  return w;
}

static Rat rat_field(const nlohmann::json& x) {
  if (x.is_string()) return parse_rat(x.get<std::string>());
  if (x.is_number_integer()) return Rat(x.get<long>());
  throw ParseError("weight entries must be integers or \"p/q\" strings");
}

WeightScheme parse_weights(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("weight JSON: ") + e.what());
  }
  if (!j.contains("b") || !j.contains("lam")) throw ParseError("weight JSON needs \"b\" and \"lam\"");
  WeightScheme w;
  for (const auto& x : j["b"]) w.b.push_back(rat_field(x));
  for (const auto& x : j["lam"]) w.lam.push_back(rat_field(x));
  return w;
}

WeightScheme load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_weights(ss.str());
}

static void need_weights(const WeightScheme& w, int N) {
  if (N < 0) throw RangeError("negative N");
  if (static_cast<int>(w.b.size()) < N || static_cast<int>(w.lam.size()) < N - 1)
    throw ShapeError("weight scheme too short for N = " + std::to_string(N));
}

std::vector<Poly> unitary_family(const WeightScheme& w, int N) {
  need_weights(w, N);
  std::vector<Poly> P;
  P.push_back({1});
  if (N == 0) return P;
  P.push_back({-w.b[0], 1});
  for (int m = 1; m < N; ++m) {
    Poly next = Poly{-w.b[static_cast<std::size_t>(m)], 1} * P[static_cast<std::size_t>(m)] +
                scale(P[static_cast<std::size_t>(m - 1)], -w.lambda(m));
    next.resize(static_cast<std::size_t>(m + 2));
    P.push_back(std::move(next));
  }
  return P;
}

RatMatrix mu_matrix(const WeightScheme& w, int N) {
  need_weights(w, N);
  RatMatrix mu(static_cast<std::size_t>(N + 1), std::vector<Rat>(static_cast<std::size_t>(N + 1)));
  mu[0][0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int k = 0; k <= n; ++k) {
      Rat v = 0;
      if (k >= 1) v += mu[n - 1][k - 1];
      if (k <= n - 1) v += w.b[static_cast<std::size_t>(k)] * mu[n - 1][k];
      if (k + 1 <= n - 1) v += w.lambda(k + 1) * mu[n - 1][k + 1];
      mu[n][k] = v;
    }
  return mu;
}

Rat mu_bruteforce(const WeightScheme& w, int N, int k) {
  if (N > 18) throw SizeGuard("mu_bruteforce: N > 18");
  need_weights(w, N);
  if (k < 0 || k > N) return 0;
  Rat total = 0;
  std::function<void(int, int, Rat)> walk = [&](int step, int level, Rat wt) {
    int left = N - step;
    if (std::abs(level - k) > left) return;
    if (left == 0) {
      total += wt;
      return;
    }
    walk(step + 1, level + 1, wt);
    walk(step + 1, level, wt * w.b[static_cast<std::size_t>(level)]);
    if (level > 0) walk(step + 1, level - 1, wt * w.lambda(level));
  };
  walk(0, 0, Rat(1));
  return total;
}

bool inverse_pair_check(const WeightScheme& w, int N) {
  auto P = unitary_family(w, N);
  auto M = mu_matrix(w, N);
  std::size_t n = static_cast<std::size_t>(N + 1);
  auto p = [&](std::size_t m, std::size_t l) { return l < P[m].size() ? P[m][l] : Rat(0); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat mp = 0, pm = 0;
      for (std::size_t t = 0; t < n; ++t) {
        mp += M[i][t] * p(t, j);
        pm += p(i, t) * M[t][j];
      }
      Rat id = i == j ? 1 : 0;
      if (mp != id || pm != id) return false;
    }
  return true;
}

std::vector<std::vector<std::optional<Rat>>> mu_ratios(const RatMatrix& mu) {
  std::vector<std::vector<std::optional<Rat>>> out;
  for (const auto& row : mu) {
    std::vector<std::optional<Rat>> r;
    for (std::size_t s = 1; s < row.size(); ++s) {
      if (row[s - 1] == 0) r.push_back(std::nullopt);
      else r.push_back(row[s] / row[s - 1]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Rat cover_sum(const CoverSpec& s, const WeightScheme* w) {
  if (s.m > 24) throw SizeGuard("cover enumeration: m > 24");
  if (s.m < 0 || s.missing < 0) return 0;
  int start = 0;
  if (s.excise_leading_pair) {
    if (s.m < 2) return 0;
    start = 2;
  }
  if (w) need_weights(*w, s.m);
  Rat sgn = s.signed_pieces ? -1 : 1;
  auto mono = [&](int p) { return w ? Rat(-w->b[static_cast<std::size_t>(p)]) : sgn * s.monomer_colors; };
  auto dimer = [&](int p) { return w ? Rat(-w->lambda(p + 1)) : sgn; };
  Rat total = 0;
  std::function<void(int, int, Rat)> rec = [&](int pos, int miss, Rat wt) {
    if (s.m - pos < miss) return;
    if (pos >= s.m) {
      if (miss == 0) total += wt;
      return;
    }
    if (miss > 0) rec(pos + 1, miss - 1, wt);
    if (!s.dimers_only) rec(pos + 1, miss, wt * mono(pos));
    bool leading = pos == 0 && start == 0;
    if (pos + 1 < s.m && !(leading && s.forbid_leading_dimer)) rec(pos + 2, miss, wt * dimer(pos));
  };
  rec(start, s.missing, Rat(1));
  return total;
}

Rat coefficient_via_covers(const WeightScheme& w, int m, int r) {
  CoverSpec s;
  s.m = m;
  s.missing = r;
  return cover_sum(s, &w);
}

DimerCheck dimer_identity_check(int m, int l) {
  if (m < 2) throw RangeError("dimer identity needs m >= 2");
  DimerCheck c;
  c.m = m;
  c.l = l;
  if ((m - l) % 2 != 0 || l < 0 || l > m) {
    c.vacuous = c.ok = true;
    return c;
  }
  Poly t = chebyshev_t(m);
  Rat coef = static_cast<std::size_t>(l) < t.size() ? t[static_cast<std::size_t>(l)] : Rat(0);
  // 2^m [x^l] T_m / 2^(m-1)
  c.lhs = 2 * coef;
  CoverSpec a;
  a.m = m;
  a.missing = l;
  a.dimers_only = true;
  a.forbid_leading_dimer = true;
  CoverSpec b = a;
  b.forbid_leading_dimer = false;
  b.excise_leading_pair = true;
  c.A = cover_sum(a);
  c.B = cover_sum(b);
  Rat sign = ((m - l) / 2) % 2 ? -1 : 1;
  c.rhs = pow2q(l) * sign * (c.A + 2 * c.B);
  c.ok = c.lhs == c.rhs;
  return c;
}

std::vector<Int> gamma_via_covers(const std::vector<Int>& h) {
  if (!dehn_sommerville_check(h)) throw NotReciprocal("h-vector is not palindromic");
  int d = static_cast<int>(h.size()) - 1;
  if (d % 2) throw RangeError("gamma_via_covers needs even d");
  int N = d / 2;
  std::vector<Int> gamma(static_cast<std::size_t>(N + 1));
  for (int r = 0; r <= N; ++r) {
    Rat s = 0;
    for (int j = r; j <= N; ++j) {
      CoverSpec a;
      a.m = j;
      a.missing = r;
      a.monomer_colors = 2;
      a.signed_pieces = true;
      a.forbid_leading_dimer = true;
      CoverSpec b = a;
      b.forbid_leading_dimer = false;
      b.excise_leading_pair = true;
      s += Rat(h[static_cast<std::size_t>(N - j)]) * (cover_sum(a) - 2 * cover_sum(b));
    }
    if (!is_integer(s)) throw DivisibilityError("non-integral cover count");
    gamma[static_cast<std::size_t>(N - r)] = s.get_num();
  }
  return gamma;
}

Poly f_polynomial(const SimplicialComplex& K) {
  FVector fv = f_vector(K);
  Poly p{1};
  for (const Int& x : fv.f) p.push_back(Rat(x));
  trim(p);
  return p;
}

Poly shifted_f_polynomial(const SimplicialComplex& K) {
  Poly f = f_polynomial(K);
  Poly out, pw{1};
  Poly lin{Rat(-1, 2), Rat(1, 2)};
  for (const Rat& c : f) {
    out = out + scale(pw, c);
    pw = pw * lin;
  }
  return out;
}

Poly chebyshev_map(const Poly& p) {
  Poly out;
  for (std::size_t m = 0; m < p.size(); ++m) out = out + scale(chebyshev_t(static_cast<int>(m)), p[m]);
  return out;
}

TchebCheck tcheb_fpoly_identity_check(const SimplicialComplex& K) {
  TchebCheck c;
  c.lhs = chebyshev_map(shifted_f_polynomial(K));
  c.rhs = shifted_f_polynomial(tchebyshev_subdivision(K));
  c.ok = c.lhs == c.rhs;
  return c;
}

FormalH formal_h(const std::vector<Rat>& z, const WeightScheme& w) {
  if (z.empty()) throw ShapeError("empty z");
  int N = static_cast<int>(z.size()) - 1;
  RatMatrix mu = mu_matrix(w, N);
  FormalH f;
  f.N = N;
  f.q.assign(static_cast<std::size_t>(N + 2), Rat(0));
  for (int l = 0; l <= N; ++l)
    for (int m = l; m <= N; ++m) f.q[l] += z[m] * mu[m][l];
  for (int k = 0; k <= N; ++k) f.h.push_back(pow2q(-(N - k)) * f.q[N - k]);
  for (int k = 0; k <= N; ++k) f.g.push_back(pow2q(-(N - k + 1)) * (2 * f.q[N - k] - f.q[N - k + 1]));
  f.q.pop_back();
  return f;
}

UnimodalityReport formal_unimodality_check(const std::vector<Rat>& z, const WeightScheme& w) {
  int N = static_cast<int>(z.size()) - 1;
  RatMatrix mu = mu_matrix(w, N);
  UnimodalityReport u;
  for (int l = 1; l <= N; ++l) {
    Rat s = 0;
    for (int m = l; m <= N; ++m) s += (2 * mu[m][l - 1] - mu[m][l]) * z[m];
    Rat thr = -s / 2;
    bool ok = z[l - 1] >= thr;
    u.thresholds.push_back(thr);
    u.per_l.push_back(ok);
    u.monotone = u.monotone && ok;
  }
  for (int r = 1; r <= N; ++r)
    for (int s = 0; s <= r - 1; ++s)
      if (2 * mu[r - 1][s] > mu[r][s]) u.literal_condition = false;
  for (int m = 1; m <= N; ++m)
    for (int l = 1; l <= m; ++l)
      if (mu[m][l] > 2 * mu[m][l - 1]) u.coefficient_condition = false;
  return u;
}

FormalBound formal_extension_bound(const std::vector<Rat>& z_top, int N, const WeightScheme& w, Mode mode) {
  if (z_top.empty() || z_top[0] != Rat(pow2(N))) throw NormalizationError("z_N must equal 2^N");
  int k = N - (static_cast<int>(z_top.size()) - 1);
  if (k < 1) throw RangeError("no z entry left to bound");
  if (mode == Mode::fvector) throw RangeError("formal bounds support sphere and cm modes");
  std::vector<Rat> z(static_cast<std::size_t>(N + 1), Rat(0));
  for (std::size_t t = 0; t < z_top.size(); ++t) z[static_cast<std::size_t>(N) - t] = z_top[t];
  RatMatrix mu = mu_matrix(w, N);
  auto q = [&](int l) {
    Rat s = 0;
    for (int m = l; m <= N; ++m) s += z[m] * mu[m][l];
    return s;
  };
  FormalBound fb;
  fb.index = k - 1;
  int i = N - k;
  if (i == 0) {
    fb.vacuous = true;
    return fb;
  }
  Rat base = mode == Mode::sphere ? Rat(pow2q(-(k + 1)) * (2 * q(k) - q(k + 1))) : Rat(pow2q(-k) * q(k));
  if (!is_integer(base) || base < 0) {
    fb.nonintegral = true;
    return fb;
  }
  Rat pp(pseudopower(base.get_num(), i));
  Rat rest = 0;
  if (mode == Mode::sphere) {
    for (int m = k; m <= N; ++m) rest += (2 * mu[m][k - 1] - mu[m][k]) * z[m];
    fb.slack = (pow2q(k) * pp - rest) / 2;
  } else {
    for (int m = k; m <= N; ++m) rest += z[m] * mu[m][k - 1];
    fb.slack = pow2q(k - 1) * pp - rest;
  }
  if (fb.slack >= 0) fb.upper = fb.slack;
  return fb;
}

static MPoly add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b) {
    r[m] += c;
    if (r[m] == 0) r.erase(m);
  }
  return r;
}

static MPoly times_var(const MPoly& a, int var) {
  MPoly r;
  for (const auto& [m, c] : a) {
    Monomial mm = m;
    mm[static_cast<std::size_t>(var)] += 1;
    r[mm] = c;
  }
  return r;
}

std::vector<std::vector<MPoly>> mu_symbolic(int N) {
  if (N < 0 || N > 10) throw SizeGuard("symbolic mu limited to N <= 10");
  int vars = 2 * std::max(N, 1);
  auto b_var = [&](int k) { return k; };
  auto l_var = [&](int m) { return std::max(N, 1) + m - 1; };
  std::vector<std::vector<MPoly>> mu(static_cast<std::size_t>(N + 1), std::vector<MPoly>(static_cast<std::size_t>(N + 1)));
  mu[0][0][Monomial(static_cast<std::size_t>(vars), 0)] = 1;
  for (int n = 1; n <= N; ++n)
    for (int k = 0; k <= n; ++k) {
      MPoly v;
      if (k >= 1) v = add(v, mu[n - 1][k - 1]);
      if (k <= n - 1) v = add(v, times_var(mu[n - 1][k], b_var(k)));
      if (k + 1 <= n - 1) v = add(v, times_var(mu[n - 1][k + 1], l_var(k + 1)));
      mu[n][k] = v;
    }
  return mu;
}

SymbolicCheck mu_symbolic_check(int N) {
  auto mu = mu_symbolic(N);
  int half = std::max(N, 1);
  SymbolicCheck c;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) {
      const MPoly& p = mu[n][k];
      int maxdeg = -1;
      for (const auto& [m, coef] : p) {
        int db = 0, dl = 0;
        for (int v = 0; v < half; ++v) db += m[v];
        for (int v = half; v < 2 * half; ++v) dl += m[v];
        maxdeg = std::max(maxdeg, db + dl);
        if (coef <= 0) c.nonneg_ok = false;
        if (db + 2 * dl != n - k) c.weighted_ok = false;
      }
      if (maxdeg != n - k) c.degree_ok = false;
    }
  // mu_{N,N-1} = b_0 + ... + b_{N-1}
  if (N >= 1) {
    MPoly want;
    for (int i = 0; i < N; ++i) {
      Monomial m(static_cast<std::size_t>(2 * half), 0);
      m[static_cast<std::size_t>(i)] = 1;
      want[m] = 1;
    }
    c.sum_b_ok = mu[N][N - 1] == want;
  } else {
    c.sum_b_ok = true;
  }
  if (N >= 2) {
    MPoly want;
    Monomial b0sq(static_cast<std::size_t>(2 * half), 0), l1(static_cast<std::size_t>(2 * half), 0);
    b0sq[0] = 2;
    l1[static_cast<std::size_t>(half)] = 1;
    want[b0sq] = 1;
    want[l1] = 1;
    c.mu20_ok = mu[2][0] == want;
  } else {
    c.mu20_ok = true;
  }
  return c;
}

}  // namespace sc
