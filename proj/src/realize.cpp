#include "spherecomb/realize.hpp"

#include "spherecomb/errors.hpp"
#include "spherecomb/vectors.hpp"

namespace sc {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::sphere: return "sphere";
    case Mode::cm: return "cm";
    case Mode::fvector: return "fvector";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "sphere") return Mode::sphere;
  if (s == "cm") return Mode::cm;
  if (s == "fvector") return Mode::fvector;
  throw ParseError("unknown mode '" + s + "'");
}

ExtensionBound gamma_extension_bound(const std::vector<Int>& prefix, int d, Mode mode) {
  if (prefix.empty() || prefix[0] != 1) throw NormalizationError("gamma_0 must be 1");
  for (const Int& x : prefix)
    if (x < 0) throw RangeError("gamma prefix has a negative entry");
  int next = static_cast<int>(prefix.size());
  if (next > d / 2) throw RangeError("index " + std::to_string(next) + " is beyond floor(d/2) = " + std::to_string(d / 2));
  int i = next - 1;
  ExtensionBound eb;
  eb.index = next;
  eb.mode = mode;
  if (i == 0) {
    eb.unbounded = true;
    eb.slack = 0;
    return eb;
  }
  if (mode == Mode::fvector) {
    eb.upper = pseudopower(prefix[static_cast<std::size_t>(i)], i);
    eb.slack = *eb.upper;
    return eb;
  }
  auto coeff = mode == Mode::sphere ? b_coeff : a_coeff;
  Int base = 0, linear = 0;
  for (int j = 0; j <= i; ++j) {
    base += coeff(d, i, j) * prefix[static_cast<std::size_t>(j)];
    linear += coeff(d, i + 1, j) * prefix[static_cast<std::size_t>(j)];
  }
  eb.slack = pseudopower(base, i) - linear;
  if (eb.slack >= 0) eb.upper = eb.slack;
  return eb;
}

ExtendResult extend_gamma(const std::vector<Int>& prefix, int d, Mode mode, const Strategy& s) {
  if (s.kind == Strategy::fraction && (s.rho <= 0 || s.rho > 1)) throw RangeError("fraction must lie in (0, 1]");
  ExtendResult r;
  r.gamma = prefix;
  Int cap = s.cap < 0 ? Int(d) : s.cap;
  std::size_t given_pos = 0;
  while (static_cast<int>(r.gamma.size()) <= d / 2) {
    ExtensionBound eb = gamma_extension_bound(r.gamma, d, mode);
    ExtendRow row{eb.index, mode, eb.unbounded, eb.upper, 0, eb.slack};
    if (!eb.feasible()) {
      r.rows.push_back(row);
      r.infeasible_index = eb.index;
      return r;
    }
    Int top = eb.unbounded ? cap : *eb.upper;
    Int chosen;
    switch (s.kind) {
      case Strategy::max: chosen = top; break;
      case Strategy::fraction: {
        Rat v = s.rho * Rat(top);
        mpz_fdiv_q(chosen.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        break;
      }
      case Strategy::given:
        if (given_pos >= s.values.size()) throw ShapeError("given sequence is too short");
        chosen = s.values[given_pos++];
        if (chosen < 0) throw RangeError("given value is negative");
        break;
    }
    row.chosen = chosen;
    r.rows.push_back(row);
    if (!eb.unbounded && chosen > *eb.upper) {
      r.infeasible_index = eb.index;
      return r;
    }
    r.gamma.push_back(chosen);
  }
  r.complete = true;
  return r;
}

CheckVerdict check_gamma_in_mode(const std::vector<Int>& gamma, int d, Mode mode) {
  switch (mode) {
    case Mode::sphere: return check_sphere_g(gamma_to_full_h(gamma, d));
    case Mode::cm: return check_cm_h(gamma_to_full_h(gamma, d));
    case Mode::fvector: return check_f_vector(std::vector<Int>(gamma.begin() + 1, gamma.end()));
  }
  return {};
}

ClosedBounds closed_gamma_bounds(const std::vector<Int>& prefix, int d, int q) {
  if (q < 1 || q > d / 2) throw RangeError("q must satisfy 1 <= q <= floor(d/2)");
  if (static_cast<int>(prefix.size()) < std::max(q, 2))
    throw ShapeError("closed_gamma_bounds needs gamma_0..gamma_{max(q,2)-1}");
  auto gam = [&](int j) { return prefix[static_cast<std::size_t>(j)]; };
  ClosedBounds c;
  c.q = q;
  Int g1 = gam(1) + d - 1;
  Int h_prev = 0;
  for (int j = 0; j <= q - 1; ++j) h_prev += a_coeff(d, q - 1, j) * gam(j);
  c.part1 = Rat(g1 * h_prev, q);
  c.part1.canonicalize();
  Int lower_terms = 0;
  for (int j = 0; j < q; ++j) lower_terms += b_coeff(d, q, j) * gam(j);
  c.recursive = 0;
  for (int j = 0; j < q; ++j) {
    Int col = 0;
    for (int i = j; i <= q - 1; ++i) col += b_coeff(d, i, j);
    Rat coef = Rat(g1 * col, q) - Rat(b_coeff(d, q, j));
    c.recursive += coef * Rat(gam(j));
  }
  c.recursive.canonicalize();
  c.closed_g = Rat(g1 * binom(Int(g1 + q - 1), q - 1), q);
  c.closed_g.canonicalize();
  c.closed_gamma = c.closed_g - Rat(lower_terms);
  c.part4_ok = c.closed_gamma >= 0;
  if (static_cast<int>(prefix.size()) > q) {
    Int gq = lower_terms + gam(q);
    c.actual_ok = Rat(gam(q)) <= c.recursive && Rat(gq) <= c.part1;
  }
  return c;
}

OrderDiagnostics order_diagnostics(const std::vector<Int>& g, int d) {
  if (g.size() < 2) throw ShapeError("order_diagnostics needs g_0 and g_1");
  OrderDiagnostics o;
  o.d = d;
  const Int& g1 = g[1];
  for (std::size_t i = 1; i < g.size(); ++i) {
    int ii = static_cast<int>(i);
    Int lo = binom(d, ii) - binom(d, ii - 1);
    Int up;
    mpz_pow_ui(up.get_mpz_t(), g1.get_mpz_t(), i);
    OrderRow row{ii, g[i], lo, up, g[i] >= lo, g[i] <= up};
    if (!row.lower_ok) o.gamma_nonneg_impossible = true;
    o.rows.push_back(row);
  }
  o.linear = g1 <= 2 * d;
  o.interlacing_flag = g1 < d + 10;
  return o;
}

Rat monotonicity_threshold(int d, int i) {
  Rat base(d + 1, i + 1);
  base.canonicalize();
  Rat r = 1;
  for (int j = 0; j < i; ++j) r *= base;
  return r * Rat(factorial(i));
}

}  // namespace sc
