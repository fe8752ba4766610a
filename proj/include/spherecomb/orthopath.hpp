#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spherecomb/complex.hpp"
#include "spherecomb/realize.hpp"
#include "spherecomb/vectors.hpp"

namespace sc {

// P_{m+1} = (x - b_m) P_m - lambda_m P_{m-1}
struct WeightScheme {
  std::vector<Rat> b;    // b_0, b_1, ...
  std::vector<Rat> lam;  // lambda_1, lambda_2, ...
  const Rat& lambda(int m) const { return lam.at(static_cast<std::size_t>(m - 1)); }
  bool positive() const;
};

// b = 1, lambda_1 = 1/2, lambda_m = 1/4 after; N+1 entries of each
WeightScheme chebyshev_scheme(int N);
WeightScheme parse_weights(const std::string& json_text);
WeightScheme load_weights(const std::string& path);

using RatMatrix = std::vector<std::vector<Rat>>;

std::vector<Poly> unitary_family(const WeightScheme& w, int N);
// mu[n][k], 0 <= k <= n <= N
RatMatrix mu_matrix(const WeightScheme& w, int N);
// explicit Motzkin path enumeration
Rat mu_bruteforce(const WeightScheme& w, int N, int k);
// M P = I and P M = I with P[m][l] = [x^l] P_m
bool inverse_pair_check(const WeightScheme& w, int N);
// mu_{r,s} / mu_{r,s-1} where defined
std::vector<std::vector<std::optional<Rat>>> mu_ratios(const RatMatrix& mu);

struct CoverSpec {
  int m = 0;               // cells 0..m-1
  int missing = 0;         // uncovered cells
  bool forbid_leading_dimer = false;
  bool excise_leading_pair = false;  // cover [2, m-1] only
  int monomer_colors = 1;
  bool signed_pieces = false;        // factor (-1)^pieces
  bool dimers_only = false;
};
// with weights: monomer at p is -b_p, dimer {p,p+1} is -lambda_{p+1};
// without: monomers count monomer_colors, dimers 1
Rat cover_sum(const CoverSpec& spec, const WeightScheme* w = nullptr);
Rat coefficient_via_covers(const WeightScheme& w, int m, int r);

struct DimerCheck {
  int m = 0, l = 0;
  Rat lhs, rhs;
  Rat A, B;
  bool vacuous = false;
  bool ok = false;
};
DimerCheck dimer_identity_check(int m, int l);

// even d only
std::vector<Int> gamma_via_covers(const std::vector<Int>& h);

struct TchebCheck {
  Poly lhs, rhs;
  bool ok = false;
};
// f_S(t) = sum f_{i-1} t^i, F(x) = f((x-1)/2)
Poly f_polynomial(const SimplicialComplex& K);
Poly shifted_f_polynomial(const SimplicialComplex& K);
Poly chebyshev_map(const Poly& p);
TchebCheck tcheb_fpoly_identity_check(const SimplicialComplex& K);

struct FormalH {
  int N = 0;
  std::vector<Rat> q;  // q_0..q_N
  std::vector<Rat> h;  // h_0..h_N
  std::vector<Rat> g;  // g_0..g_N
};
FormalH formal_h(const std::vector<Rat>& z, const WeightScheme& w);

struct UnimodalityReport {
  std::vector<Rat> thresholds;  // z_{l-1} must be >= thresholds[l-1]
  std::vector<bool> per_l;
  bool monotone = true;
  bool literal_condition = true;      // 2 mu_{r-1,s} <= mu_{r,s}
  bool coefficient_condition = true;  // mu_{m,l} <= 2 mu_{m,l-1}
};
UnimodalityReport formal_unimodality_check(const std::vector<Rat>& z, const WeightScheme& w);

struct FormalBound {
  int index = 0;  // k-1, the z entry bounded
  bool vacuous = false;
  bool nonintegral = false;
  std::optional<Rat> upper;
  Rat slack;
};
// z_top = (z_N, z_{N-1}, ..., z_k)
FormalBound formal_extension_bound(const std::vector<Rat>& z_top, int N, const WeightScheme& w, Mode mode);

// multivariate polynomials in b_0..b_{N-1}, lambda_1..lambda_N
using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, Int>;
std::vector<std::vector<MPoly>> mu_symbolic(int N);
struct SymbolicCheck {
  bool degree_ok = true, nonneg_ok = true, weighted_ok = true;
  bool sum_b_ok = false, mu20_ok = false;
  bool ok() const { return degree_ok && nonneg_ok && weighted_ok && sum_b_ok && mu20_ok; }
};
SymbolicCheck mu_symbolic_check(int N);

}  // namespace sc
