#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherecomb/complex.hpp"
#include "spherecomb/interval.hpp"
#include "spherecomb/vectors.hpp"

namespace sc {

struct Equality {
  Int lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// sum_v h_i(lk v) against (i+1) h_{i+1} + (d-i) h_i
Equality vertex_local_global_check(const SimplicialComplex& K, int i);

// throws PreconditionError naming the first violating edge
void require_link_condition(const SimplicialComplex& K);

// 2 sum_e g_k(lk e) against the global combination, extended g throughout
Equality edge_local_global_check(const SimplicialComplex& K, int k);

struct ContractionCheck {
  Face edge;
  std::vector<Int> recount;   // h of the contracted complex, recounted
  std::vector<Int> formula;   // h - x h(lk e)
  bool equal = false;
  bool g_nonneg = false;      // g_trunc of the recount is >= 0
};
ContractionCheck contraction_h_check(const SimplicialComplex& K, const Face& e);

// C_k = sum_e g_k(lk e), and half the right-hand side of the edge identity
Int edge_sum_direct(const SimplicialComplex& K, int k);
Rat edge_sum_closed(const CountVector& g_ext, int k);

struct InterlacingRow {
  int k;
  std::optional<Rat> alpha, beta;  // absent when the denominator vanishes
  bool degenerate = false;
  bool low_ok = false, high_ok = false;
};

struct SandwichCheck {
  int i = 0;
  Interval lower, upper;   // the outer brackets
  Rat mid;                 // 2 C_i
  Tri lower_le_mid = Tri::Unknown, mid_le_upper = Tri::Unknown;
  bool cushion_nonneg = false;       // 0 <= 2(F1 g_{i+1} - C_i)
  Tri cushion_upper = Tri::Unknown;  // same statement as lower_le_mid
  bool premise_violation = false;    // negative base under a fractional power
  std::string note;
};

struct TrivialityRow {
  int k;
  bool skipped = false;
  std::string reason;
  Rat r_prev, r_k;
  Interval omega;
  bool ratlowbd_applicable = false;
  Interval ratlowbd;       // lower bound on r_k
  Tri ratlowbd_ok = Tri::Unknown;
  Interval simplified;     // r_{k-1}^((k+1)/k)
  Tri trivial_test = Tri::Unknown;  // omega (1 - r_{k-1})^((k+1)/k) >= 1
  std::vector<std::string> tags;
  bool r_in_unit = false;
};

struct Surrogates {
  int d = 0, k = 0;
  Rat r_prev;     // C_{k-1} / (f1 g_k)
  Rat q_k;        // (g_{k+1} / g_k) / f1
  Rat tail;       // (k+1)(k+2) (g_{k+2} / g_{k+1}) / f1
  Rat g1_over_d;
};
// from a truncated g of a would-be sphere (mirrored to a full h)
Surrogates surrogates(const std::vector<Int>& g_trunc, int d, int k);

struct RowEq {
  int index;
  Int lhs, rhs;
  bool equal;
};
struct CRow {
  int k;
  Int direct;
  Rat closed;
  bool equal;
};

struct LinkReport {
  int d = 0;
  Int f1;
  bool f1_identity_ok = false;
  CountVector h, g_trunc, g_ext;
  std::vector<RowEq> vertex_rows, edge_rows;
  std::vector<CRow> c_rows;
  bool contraction_ok = true;
  std::string premise_status;  // "verified numerically", "assumed", "failed"
  std::vector<InterlacingRow> interlacing;
  std::vector<SandwichCheck> sandwiches;
  std::vector<TrivialityRow> triviality;
  bool identities_ok() const;
};

struct LinkOptions {
  bool verify_premise = true;
};

// the complex must be pure and satisfy the link condition
LinkReport analyze_link(const SimplicialComplex& K, const LinkOptions& opt = {});

std::vector<InterlacingRow> interlacing_bounds(const LinkReport& r);
SandwichCheck global_sandwich_check(const SimplicialComplex& K, int i);
SandwichCheck sandwich_from_report(const LinkReport& r, int i);
std::vector<TrivialityRow> triviality_diagnostics(const LinkReport& r);

// X <= B^(p/q) with intervals, then exact powers; B >= 0
Tri le_pow(const Rat& x, const Rat& b, unsigned long p, unsigned long q);

}  // namespace sc
