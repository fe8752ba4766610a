#include "spherecomb/macaulay.hpp"

#include <cmath>

#include "spherecomb/errors.hpp"
#include "spherecomb/vectors.hpp"

namespace sc {

Int MacaulayRep::value() const {
  Int s = 0;
  for (const auto& [n, i] : terms) s += binom(n, i);
  return s;
}

// largest q in [i, rem + i - 1] with C(q, i) <= rem
static Int top_index(const Int& rem, long i) {
  Int lo = i, hi = rem + i - 1;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (binom(mid, i) <= rem) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

MacaulayRep macaulay_rep(const Int& a, long k) {
  if (a <= 0) throw RangeError("macaulay_rep needs a >= 1, got " + a.get_str());
  if (k <= 0) throw RangeError("macaulay_rep needs k >= 1, got " + std::to_string(k));
  MacaulayRep r{a, k, {}};
  Int rem = a;
  for (long i = k; i >= 1 && rem > 0; --i) {
    Int n = top_index(rem, i);
    r.terms.emplace_back(n, i);
    rem -= binom(n, i);
  }
  return r;
}

Int pseudopower(const Int& a, long k) {
  if (k <= 0) throw RangeError("pseudopower needs k >= 1");
  if (a < 0) throw RangeError("pseudopower of a negative number");
  if (a == 0) return 0;
  Int s = 0;
  for (const auto& [n, i] : macaulay_rep(a, k).terms) s += binom(Int(n + 1), i + 1);
  return s;
}

nlohmann::json to_json(const MacaulayRep& r) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [n, i] : r.terms) t.push_back({n.get_str(), i});
  return {{"a", r.a.get_str()}, {"k", r.k}, {"terms", t}, {"pseudopower", pseudopower(r.a, r.k).get_str()}};
}

static double binom_d(double x, long k) {
  double p = 1;
  for (long j = 0; j < k; ++j) p *= (x - static_cast<double>(j)) / static_cast<double>(j + 1);
  return p;
}

double binomial_root(const Int& a, long k) {
  if (a < 1 || k < 1) throw RangeError("binomial_root needs a >= 1, k >= 1");
  MacaulayRep r = macaulay_rep(a, k);
  const Int& nk = r.terms.front().first;
  if (binom(nk, k) == a) return nk.get_d();
  double lo = nk.get_d(), hi = lo + 1, target = a.get_d();
  for (int it = 0; it < 400 && hi - lo > 1e-12 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (binom_d(mid, k) <= target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

static Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// c^k <= a^(k+1) for c >= 0 rational; interval first, exact powers if the
// intervals overlap
static bool pow_le(const Rat& c, const Int& a, long k) {
  Interval lhs = Interval(c, 128).pow_rat(static_cast<unsigned long>(k), 1);
  Interval rhs = Interval(Rat(a), 128).pow_rat(static_cast<unsigned long>(k + 1), 1);
  Tri t = le(lhs, rhs);
  if (t != Tri::Unknown) return t == Tri::True;
  return ipow(c.get_num(), k) <= ipow(a, k + 1) * ipow(c.get_den(), k);
}

static Interval hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec = 128) {
  Interval r(lo, prec);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

PseudopowerBounds pseudopower_bounds(const Int& a, long k) {
  if (a < 1 || k < 1) throw RangeError("pseudopower_bounds needs a >= 1, k >= 1");
  PseudopowerBounds b;
  b.a = a;
  b.k = k;
  MacaulayRep rep = macaulay_rep(a, k);
  Int nk = rep.terms.front().first;
  b.lower = binom(Int(nk + 1), k + 1);
  b.pp = pseudopower(a, k);
  b.lower_ok = b.lower <= b.pp;
  b.x = binomial_root(a, k);

  Rat a_q(a);
  if (binom(nk, k) == a) {
    b.x_lo = b.x_hi = Rat(nk);
  } else {
    Rat lo(b.x * (1 - 1e-13)), hi(b.x * (1 + 1e-13));
    if (lo < Rat(nk)) lo = Rat(nk);
    if (hi > Rat(nk + 1)) hi = Rat(nk + 1);
    if (binom_poly(lo, k) > a_q || binom_poly(hi, k) < a_q) {
      lo = Rat(nk);
      hi = Rat(nk + 1);
    }
    b.x_lo = lo;
    b.x_hi = hi;
  }

  for (int it = 0; it < 200; ++it) {
    Rat up_lo = binom_poly(b.x_lo + 1, k + 1);
    Rat up_hi = binom_poly(b.x_hi + 1, k + 1);
    bool a_ok = Rat(b.pp) <= up_lo;
    bool b_ok = pow_le(up_hi, a, k);
    b.pp_le_upper = a_ok ? Tri::True : (Rat(b.pp) > up_hi ? Tri::False : Tri::Unknown);
    b.upper_le_power = b_ok ? Tri::True : (!pow_le(up_lo, a, k) ? Tri::False : Tri::Unknown);
    if ((a_ok && b_ok) || b.x_lo == b.x_hi) break;
    if (b.pp_le_upper == Tri::False || b.upper_le_power == Tri::False) break;
    Rat mid = (b.x_lo + b.x_hi) / 2;
    if (binom_poly(mid, k) <= a_q) b.x_lo = mid;
    else b.x_hi = mid;
  }

  b.upper_real = hull(binom_poly(b.x_lo + 1, k + 1), binom_poly(b.x_hi + 1, k + 1));
  b.power_upper = Interval(a_q, 128).pow_rat(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k));
  b.c_k = Interval(Rat(factorial(k)), 128).pow_rat(1, static_cast<unsigned long>(k)) / Interval(Rat(k + 1), 128);
  b.asymptotic = b.c_k * b.power_upper;
  return b;
}

Interval asymptotic_ratio(const Int& a, long k) {
  Interval p = Interval(Rat(a), 256).pow_rat(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k));
  Interval c = Interval(Rat(factorial(k)), 256).pow_rat(1, static_cast<unsigned long>(k)) / Interval(Rat(k + 1), 256);
  return Interval(Rat(pseudopower(a, k)), 256) / (c * p);
}

CheckVerdict check_f_vector(const std::vector<Int>& f_in) {
  CheckVerdict v;
  std::vector<Int> f = f_in;
  while (!f.empty() && f.back() == 0) {
    f.pop_back();
    v.trimmed_trailing_zeros = true;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] <= 0) {
      v.ok = false;
      v.failing_index = static_cast<int>(i);
      v.reason = f[i] == 0 ? "interior zero" : "negative entry";
      return v;
    }
  }
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Int bound = pseudopower(f[i], static_cast<long>(i + 1));
    if (f[i + 1] > bound) {
      v.ok = false;
      v.failing_index = static_cast<int>(i + 1);
      v.reason = "f_" + std::to_string(i + 1) + " = " + f[i + 1].get_str() + " exceeds f_" + std::to_string(i) +
                 "^<" + std::to_string(i + 1) + "> = " + bound.get_str();
      return v;
    }
  }
  return v;
}

// 0 <= v_{i+1} <= v_i^<i> for i >= 1; v_1 >= 0 only
static CheckVerdict m_chain(const std::vector<Int>& v) {
  CheckVerdict r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) {
      r.ok = false;
      r.failing_index = static_cast<int>(i);
      r.reason = "negative entry at index " + std::to_string(i);
      return r;
    }
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    Int bound = pseudopower(v[i], static_cast<long>(i));
    if (v[i + 1] > bound) {
      r.ok = false;
      r.failing_index = static_cast<int>(i + 1);
      r.reason = "entry " + std::to_string(i + 1) + " = " + v[i + 1].get_str() + " exceeds " + v[i].get_str() + "^<" +
                 std::to_string(i) + "> = " + bound.get_str();
      return r;
    }
  }
  return r;
}

CheckVerdict check_cm_h(const std::vector<Int>& h) {
  if (h.empty() || h[0] != 1) return {false, 0, "h_0 != 1", false};
  return m_chain(h);
}

CheckVerdict check_sphere_g(const std::vector<Int>& h) {
  if (h.empty() || h[0] != 1) return {false, 0, "h_0 != 1", false};
  if (!dehn_sommerville_check(h)) return {false, -1, "not palindromic", false};
  std::vector<Int> g;
  int d = static_cast<int>(h.size()) - 1;
  for (int k = 0; k <= d / 2; ++k) g.push_back(h[k] - (k ? h[k - 1] : Int(0)));
  CheckVerdict r = m_chain(g);
  if (!r.ok) r.reason = "g: " + r.reason;
  return r;
}

bool avgh_bound_check(const std::vector<Int>& h, std::size_t q) {
  if (q < 1 || q >= h.size()) throw RangeError("avgh_bound_check needs 1 <= q < length(h)");
  Int s = 0;
  for (std::size_t j = 0; j < q; ++j) s += h[j];
  return Int(static_cast<long>(q)) * h[q] <= h[1] * s;
}

Tri power_sum_check(const std::vector<Rat>& a, unsigned long p, unsigned long q) {
  int nonzero = 0;
  Rat total = 0;
  for (const Rat& x : a) {
    if (x < 0) throw RangeError("power_sum_check needs nonnegative entries");
    if (x != 0) ++nonzero;
    total += x;
  }
  if (nonzero <= 1) return Tri::True;
  Tri t = Tri::Unknown;
  for (mpfr_prec_t prec : {128, 256, 512, 1024}) {
    Interval lhs(Rat(0), prec);
    for (const Rat& x : a) lhs = lhs + Interval(x, prec).pow_rat(p, q);
    Interval rhs = Interval(total, prec).pow_rat(p, q);
    t = le(lhs, rhs);
    if (t != Tri::Unknown) break;
  }
  return t;
}

}  // namespace sc
