#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spherecomb/interval.hpp"
#include "spherecomb/numeric.hpp"

namespace sc {

struct MacaulayRep {
  Int a;
  long k = 0;
  std::vector<std::pair<Int, long>> terms;  // (n_i, i), i descending
  Int value() const;
};

MacaulayRep macaulay_rep(const Int& a, long k);
// a^<k>; 0^<k> = 0
Int pseudopower(const Int& a, long k);
nlohmann::json to_json(const MacaulayRep& r);

// real x >= k-1 with C(x, k) = a, bisection in double
double binomial_root(const Int& a, long k);

struct PseudopowerBounds {
  Int a;
  long k = 0;
  Int lower;        // C(n_k + 1, k + 1)
  Int pp;           // a^<k>
  double x = 0;     // root of C(x, k) = a
  Rat x_lo, x_hi;   // exact bracket of x
  Interval upper_real;   // encloses C(x + 1, k + 1)
  Interval power_upper;  // encloses a^((k+1)/k)
  Interval c_k;          // (k!)^(1/k) / (k + 1)
  Interval asymptotic;   // C_k a^((k+1)/k)
  bool lower_ok = false;
  Tri pp_le_upper = Tri::Unknown;
  Tri upper_le_power = Tri::Unknown;
  bool chain_ok() const {
    return lower_ok && pp_le_upper == Tri::True && upper_le_power == Tri::True;
  }
};
PseudopowerBounds pseudopower_bounds(const Int& a, long k);

// a^<k> / (C_k a^((k+1)/k)) enclosed
Interval asymptotic_ratio(const Int& a, long k);

struct CheckVerdict {
  bool ok = true;
  int failing_index = -1;
  std::string reason;
  bool trimmed_trailing_zeros = false;
};

CheckVerdict check_f_vector(const std::vector<Int>& f);
CheckVerdict check_cm_h(const std::vector<Int>& h);
CheckVerdict check_sphere_g(const std::vector<Int>& h);

// q h_q <= h_1 (h_0 + ... + h_{q-1})
bool avgh_bound_check(const std::vector<Int>& h, std::size_t q);

// sum a_i^(p/q) <= (sum a_i)^(p/q), rigorous; a_i >= 0
Tri power_sum_check(const std::vector<Rat>& a, unsigned long p, unsigned long q);

}  // namespace sc
