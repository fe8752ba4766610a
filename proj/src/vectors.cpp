#include "spherecomb/vectors.hpp"

#include "spherecomb/errors.hpp"

namespace sc {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::f: return "f";
    case Kind::h: return "h";
    case Kind::g_trunc: return "g_trunc";
    case Kind::g_ext: return "g_ext";
    case Kind::gamma: return "gamma";
  }
  return "?";
}

Int CountVector::at_or_zero(long i) const {
  if (i < 0 || i >= static_cast<long>(entries.size())) return 0;
  return entries[static_cast<std::size_t>(i)];
}

nlohmann::json to_json(const CountVector& v) {
  nlohmann::json e = nlohmann::json::array();
  for (const Int& x : v.entries) e.push_back(x.get_str());
  return {{"kind", kind_name(v.kind)}, {"d", v.d}, {"entries", e}};
}

CountVector count_vector_from_json(const nlohmann::json& j) {
  CountVector v;
  std::string k = j.at("kind").get<std::string>();
  if (k == "f") v.kind = Kind::f;
  else if (k == "h") v.kind = Kind::h;
  else if (k == "g_trunc") v.kind = Kind::g_trunc;
  else if (k == "g_ext") v.kind = Kind::g_ext;
  else if (k == "gamma") v.kind = Kind::gamma;
  else throw ParseError("unknown vector kind '" + k + "'");
  v.d = j.at("d").get<int>();
  for (const auto& x : j.at("entries")) v.entries.push_back(parse_int(x.is_string() ? x.get<std::string>() : x.dump()));
  return v;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rat& c) {
  Poly r = a;
  for (Rat& x : r) x *= c;
  trim(r);
  return r;
}

Poly chebyshev_t(int n) {
  if (n < 0) throw RangeError("chebyshev_t: negative degree");
  Poly prev{1}, cur{0, 1};
  if (n == 0) return prev;
  for (int m = 1; m < n; ++m) {
    Poly next = Poly{0, 2} * cur + scale(prev, -1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(p[i]) + ")";
    if (i) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

CountVector f_to_h(const std::vector<Int>& f, int d) {
  if (static_cast<int>(f.size()) != d)
    throw ShapeError("f-vector has length " + std::to_string(f.size()) + ", expected d = " + std::to_string(d));
  CountVector h{Kind::h, d, std::vector<Int>(static_cast<std::size_t>(d + 1))};
  for (int j = 0; j <= d; ++j) {
    Int s = 0;
    for (int i = 0; i <= j; ++i) {
      Int fi = i == 0 ? Int(1) : f[static_cast<std::size_t>(i - 1)];
      Int t = binom(d - i, j - i) * fi;
      if ((j - i) % 2) s -= t;
      else s += t;
    }
    h.entries[static_cast<std::size_t>(j)] = s;
  }
  return h;
}

CountVector h_to_f(const std::vector<Int>& h, int d) {
  if (static_cast<int>(h.size()) != d + 1)
    throw ShapeError("h-vector has length " + std::to_string(h.size()) + ", expected d+1 = " + std::to_string(d + 1));
  CountVector f{Kind::f, d, std::vector<Int>(static_cast<std::size_t>(d))};
  for (int j = 1; j <= d; ++j) {
    Int s = 0;
    for (int i = 0; i <= j; ++i) s += binom(d - i, j - i) * h[static_cast<std::size_t>(i)];
    f.entries[static_cast<std::size_t>(j - 1)] = s;
  }
  return f;
}

CountVector h_vector(const SimplicialComplex& K) {
  if (K.is_void()) throw RangeError("h-vector of the void complex");
  FVector fv = f_vector(K);
  return f_to_h(fv.f, fv.d);
}

CountVector h_to_g(const std::vector<Int>& h, bool ext) {
  if (h.empty()) throw ShapeError("empty h-vector");
  int d = static_cast<int>(h.size()) - 1;
  int top = ext ? d : d / 2;
  CountVector g{ext ? Kind::g_ext : Kind::g_trunc, d, {}};
  for (int k = 0; k <= top; ++k)
    g.entries.push_back(h[static_cast<std::size_t>(k)] - (k ? h[static_cast<std::size_t>(k - 1)] : Int(0)));
  return g;
}

bool dehn_sommerville_check(const std::vector<Int>& h) {
  for (std::size_t i = 0, j = h.size(); i < j; ++i, --j)
    if (h[i] != h[j - 1]) return false;
  return true;
}

Int a_coeff(int d, int i, int j) {
  if (j > i || d - 2 * j < 0) return 0;
  return binom(d - 2 * j, i - j);
}

Int b_coeff(int d, int i, int j) {
  if (j > i || d - 2 * j < 0) return 0;
  return binom(d - 2 * j, i - j) - binom(d - 2 * j, i - j - 1);
}

IntMatrix matrix_a(int d) {
  int n = d / 2 + 1;
  IntMatrix m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m[i][j] = a_coeff(d, i, j);
  return m;
}

IntMatrix matrix_b(int d) {
  int n = d / 2 + 1;
  IntMatrix m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m[i][j] = b_coeff(d, i, j);
  return m;
}

static void need_half(const std::vector<Int>& v, int d, const char* what) {
  if (d < 0) throw RangeError("negative d");
  if (static_cast<int>(v.size()) != d / 2 + 1)
    throw ShapeError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected floor(d/2)+1 = " +
                     std::to_string(d / 2 + 1));
}

static std::vector<Int> lower_mul(const IntMatrix& m, const std::vector<Int>& x) {
  std::vector<Int> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) r[i] += m[i][j] * x[j];
  return r;
}

// unit lower-triangular forward substitution
static std::vector<Int> lower_solve(const IntMatrix& m, const std::vector<Int>& y) {
  std::vector<Int> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Int s = y[i];
    for (std::size_t j = 0; j < i; ++j) s -= m[i][j] * x[j];
    x[i] = s;
  }
  return x;
}

std::vector<Int> gamma_to_h(const std::vector<Int>& gamma, int d) {
  need_half(gamma, d, "gamma");
  return lower_mul(matrix_a(d), gamma);
}

std::vector<Int> gamma_to_g(const std::vector<Int>& gamma, int d) {
  need_half(gamma, d, "gamma");
  return lower_mul(matrix_b(d), gamma);
}

std::vector<Int> h_half_to_gamma(const std::vector<Int>& h_half, int d) {
  need_half(h_half, d, "h half");
  return lower_solve(matrix_a(d), h_half);
}

std::vector<Int> g_to_gamma(const std::vector<Int>& g_trunc, int d) {
  need_half(g_trunc, d, "g_trunc");
  return lower_solve(matrix_b(d), g_trunc);
}

std::vector<Int> mirror_h(const std::vector<Int>& h_half, int d) {
  need_half(h_half, d, "h half");
  std::vector<Int> h(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = h_half[static_cast<std::size_t>(std::min(i, d - i))];
  return h;
}

std::vector<Int> gamma_to_full_h(const std::vector<Int>& gamma, int d) {
  return mirror_h(gamma_to_h(gamma, d), d);
}

std::vector<Int> gamma_via_chebyshev(const std::vector<Int>& h_in) {
  if (h_in.empty()) throw ShapeError("empty h-vector");
  if (!dehn_sommerville_check(h_in)) throw NotReciprocal("h-vector is not palindromic");
  std::vector<Int> h = h_in;
  int d = static_cast<int>(h.size()) - 1;
  if (d % 2) {
    // h(t) = (1+t) r(t)
    std::vector<Int> r(static_cast<std::size_t>(d));
    Int carry = 0;
    for (int i = 0; i < d; ++i) {
      r[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] - carry;
      carry = r[static_cast<std::size_t>(i)];
    }
    if (h[static_cast<std::size_t>(d)] != carry) throw DivisibilityError("h(t) is not divisible by (1+t)");
    h = std::move(r);
    --d;
  }
  int n = d / 2;
  // g(u) = h_N + 2 sum_j h_{N-j} T_j(u/2)
  Poly g{Rat(h[static_cast<std::size_t>(n)])};
  for (int j = 1; j <= n; ++j) {
    Poly t = chebyshev_t(j);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] /= Rat(pow2(static_cast<long>(k)));
    g = g + scale(t, 2 * Rat(h[static_cast<std::size_t>(n - j)]));
  }
  g.resize(static_cast<std::size_t>(n + 1));
  // gamma(u) = sum_k g_k (1-2u)^k u^(N-k)
  Poly gam;
  Poly p{1};
  for (int k = 0; k <= n; ++k) {
    Poly term = scale(p, g[static_cast<std::size_t>(k)]);
    Poly shifted(static_cast<std::size_t>(n - k), Rat(0));
    shifted.insert(shifted.end(), term.begin(), term.end());
    trim(shifted);
    gam = gam + shifted;
    p = p * Poly{1, -2};
  }
  std::vector<Int> out(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < gam.size() && i < out.size(); ++i) {
    if (!is_integer(gam[i])) throw DivisibilityError("non-integral gamma entry");
    out[i] = gam[i].get_num();
  }
  return out;
}

RatioDiagnostics coefficient_ratio_diagnostics(int d) {
  if (d < 2) throw RangeError("coefficient_ratio_diagnostics needs d >= 2");
  RatioDiagnostics r;
  r.d = d;
  Rat alo = 1 + Rat(2, d), ahi = d, blo(1, 3), bhi = d + 1;
  bool first = true;
  for (int rr = 1; rr <= d / 2; ++rr)
    for (int s = 0; s < rr; ++s) {
      Rat qa(a_coeff(d, rr, s), a_coeff(d, rr - 1, s));
      Rat qb(b_coeff(d, rr, s), b_coeff(d, rr - 1, s));
      qa.canonicalize();
      qb.canonicalize();
      if (first) {
        r.a_min = r.a_max = qa;
        r.b_min = r.b_max = qb;
        first = false;
      }
      r.a_min = std::min(r.a_min, qa);
      r.a_max = std::max(r.a_max, qa);
      r.b_min = std::min(r.b_min, qb);
      r.b_max = std::max(r.b_max, qb);
      if (qa < alo || qa > ahi) r.a_ok = false;
      if (qb <= blo || qb >= bhi) r.b_ok = false;
      ++r.count;
    }
  return r;
}

RatioRestrictions gamma_ratio_restrictions(const std::vector<Int>& g, int d) {
  RatioRestrictions r;
  for (std::size_t l = 0; l + 1 < g.size(); ++l) {
    RatioRestrictionRow row{static_cast<int>(l), 3 * g[l + 1] > g[l], 0};
    Int lb = g[l + 1] - (d + 1) * g[l];
    row.gamma_lower = lb > 0 ? lb : Int(0);
    r.all_ok = r.all_ok && row.growth_ok;
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace sc
