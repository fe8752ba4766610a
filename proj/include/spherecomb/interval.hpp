#pragma once

#include <mpfr.h>

#include <string>

#include "spherecomb/numeric.hpp"

namespace sc {

enum class Tri { False, True, Unknown };
const char* tri_name(Tri t);

// Closed interval [lo, hi] with outward (directed) rounding on every op.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rat& q, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  mpfr_prec_t prec() const { return prec_; }
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  bool nonneg() const { return mpfr_sgn(lo_) >= 0; }
  bool maybe_negative() const { return mpfr_sgn(lo_) < 0; }
  bool surely_negative() const { return mpfr_sgn(hi_) < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  // x^(p/q) for x >= 0, p >= 0, q >= 1; lower end clipped at 0 if the
  // interval straddles it
  Interval pow_rat(unsigned long p, unsigned long q) const;

  static Interval from_d(double v, mpfr_prec_t prec);

  // certain comparisons; Unknown when the intervals overlap
  friend Tri le(const Interval& a, const Interval& b);
  friend Tri lt(const Interval& a, const Interval& b);
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

  std::string str(int digits = 12) const;

  mpfr_t lo_, hi_;

 private:
  mpfr_prec_t prec_;
};

}  // namespace sc
