#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spherecomb/complex.hpp"
#include "spherecomb/numeric.hpp"

namespace sc {

enum class Kind { f, h, g_trunc, g_ext, gamma };
const char* kind_name(Kind k);

struct CountVector {
  Kind kind = Kind::h;
  int d = 0;
  std::vector<Int> entries;

  const Int& operator[](std::size_t i) const { return entries[i]; }
  std::size_t size() const { return entries.size(); }
  // entry i, or 0 outside the stored range
  Int at_or_zero(long i) const;
};

nlohmann::json to_json(const CountVector& v);
CountVector count_vector_from_json(const nlohmann::json& j);

// ascending coefficients, trailing zeros trimmed
using Poly = std::vector<Rat>;
void trim(Poly& p);
Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& c);
// Chebyshev T_n of the first kind
Poly chebyshev_t(int n);
std::string poly_str(const Poly& p);

CountVector f_to_h(const std::vector<Int>& f, int d);
CountVector h_to_f(const std::vector<Int>& h, int d);
CountVector h_vector(const SimplicialComplex& K);
// trunc: g_0..g_{d/2}; ext: g_0..g_d
CountVector h_to_g(const std::vector<Int>& h, bool ext);
bool dehn_sommerville_check(const std::vector<Int>& h);

// a_{i,j} = C(d-2j, i-j), b_{i,j} = a_{i,j} - C(d-2j, i-j-1)
Int a_coeff(int d, int i, int j);
Int b_coeff(int d, int i, int j);
using IntMatrix = std::vector<std::vector<Int>>;
IntMatrix matrix_a(int d);
IntMatrix matrix_b(int d);

std::vector<Int> gamma_to_h(const std::vector<Int>& gamma, int d);  // first half
std::vector<Int> gamma_to_g(const std::vector<Int>& gamma, int d);  // g_trunc
std::vector<Int> h_half_to_gamma(const std::vector<Int>& h_half, int d);
std::vector<Int> g_to_gamma(const std::vector<Int>& g_trunc, int d);
// full palindromic h of h(t) = sum gamma_i t^i (1+t)^(d-2i)
std::vector<Int> gamma_to_full_h(const std::vector<Int>& gamma, int d);
// h_half extended by mirroring
std::vector<Int> mirror_h(const std::vector<Int>& h_half, int d);

// d = h.size() - 1; odd d goes through h / (1+t)
std::vector<Int> gamma_via_chebyshev(const std::vector<Int>& h);

struct RatioDiagnostics {
  int d = 0;
  Rat a_min, a_max, b_min, b_max;
  bool a_ok = true, b_ok = true;
  std::size_t count = 0;
};
RatioDiagnostics coefficient_ratio_diagnostics(int d);

struct RatioRestrictionRow {
  int l;
  bool growth_ok;     // 3 g_{l+1} > g_l
  Int gamma_lower;    // lower bound on gamma_{l+1}
};
struct RatioRestrictions {
  std::vector<RatioRestrictionRow> rows;
  bool all_ok = true;
};
RatioRestrictions gamma_ratio_restrictions(const std::vector<Int>& g_trunc, int d);

}  // namespace sc
