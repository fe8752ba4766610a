#include "spherecomb/interval.hpp"

#include <algorithm>
#include <cstdio>

#include "spherecomb/errors.hpp"

namespace sc {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rat& q, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.prec_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::mid_d() const { return 0.5 * (lo_d() + hi_d()); }

Interval Interval::from_d(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

static mpfr_prec_t pmax(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = pmax(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw RangeError("interval division by an interval containing 0");
  mpfr_prec_t p = pmax(a, b);
  Interval inv(p);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::pow_rat(unsigned long p, unsigned long q) const {
  if (q == 0) throw RangeError("pow_rat: zero root index");
  if (mpfr_sgn(hi_) < 0) throw RangeError("pow_rat: negative base");
  Interval r(prec_);
  mpfr_t base;
  mpfr_init2(base, prec_);
  // lower end
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
    if (p == 0) mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
  } else {
    mpfr_rootn_ui(base, lo_, q, MPFR_RNDD);
    mpfr_pow_ui(r.lo_, base, p, MPFR_RNDD);
  }
  mpfr_rootn_ui(base, hi_, q, MPFR_RNDU);
  mpfr_pow_ui(r.hi_, base, p, MPFR_RNDU);
  mpfr_clear(base);
  return r;
}

Tri le(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi_, b.lo_)) return Tri::True;
  if (mpfr_greater_p(a.lo_, b.hi_)) return Tri::False;
  return Tri::Unknown;
}

Tri lt(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi_, b.lo_)) return Tri::True;
  if (mpfr_greaterequal_p(a.lo_, b.hi_)) return Tri::False;
  return Tri::Unknown;
}

std::string Interval::str(int digits) const {
  char buf[160];
  mpfr_snprintf(buf, sizeof buf, "[%.*RDg, %.*RUg]", digits, lo_, digits, hi_);
  return buf;
}

}  // namespace sc
