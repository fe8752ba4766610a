#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherecomb/macaulay.hpp"
#include "spherecomb/numeric.hpp"

namespace sc {

enum class Mode { sphere, cm, fvector };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ExtensionBound {
  int index = 0;  // the entry being bounded, i + 1
  Mode mode = Mode::sphere;
  bool unbounded = false;     // step i = 0 carries no constraint
  std::optional<Int> upper;   // absent when infeasible or unbounded
  Int slack;                  // pseudopower side minus linear side
  bool feasible() const { return unbounded || upper.has_value(); }
};

// bound on gamma_{i+1} given gamma_0..gamma_i
ExtensionBound gamma_extension_bound(const std::vector<Int>& prefix, int d, Mode mode);

struct Strategy {
  enum Kind { max, fraction, given } kind = max;
  Rat rho = 1;                 // fraction in (0, 1]
  std::vector<Int> values;     // given: one value per missing index
  Int cap = -1;                // value used at unbounded steps; -1 means d
};

struct ExtendRow {
  int index;
  Mode mode;
  bool unbounded;
  std::optional<Int> upper;
  Int chosen;
  Int slack;
};

struct ExtendResult {
  std::vector<Int> gamma;
  std::vector<ExtendRow> rows;
  bool complete = false;
  int infeasible_index = -1;
};

ExtendResult extend_gamma(const std::vector<Int>& prefix, int d, Mode mode, const Strategy& s);

// runs the check matching the mode on a full gamma vector
CheckVerdict check_gamma_in_mode(const std::vector<Int>& gamma, int d, Mode mode);

struct ClosedBounds {
  int q = 0;
  Rat part1;          // g_1 h_{q-1} / q, bound on g_q
  Rat recursive;      // bound on gamma_q
  Rat closed_g;       // g_1 C(g_1 + q - 1, q - 1) / q
  Rat closed_gamma;   // closed_g minus the lower-order terms of g_q
  bool part4_ok = false;  // closed_gamma >= 0, necessary for gamma_q >= 0
  std::optional<bool> actual_ok;  // if gamma_q is in the prefix
};
ClosedBounds closed_gamma_bounds(const std::vector<Int>& prefix, int d, int q);

struct OrderRow {
  int i;
  Int g;
  Int lower;   // C(d,i) - C(d,i-1)
  Int upper;   // g_1^i
  bool lower_ok, upper_ok;
};
struct OrderDiagnostics {
  int d = 0;
  std::vector<OrderRow> rows;
  bool gamma_nonneg_impossible = false;
  bool linear = false;         // g_1 <= 2d
  bool interlacing_flag = false;  // g_1 < d + 10
};
OrderDiagnostics order_diagnostics(const std::vector<Int>& g_trunc, int d);

// ((d+1)/(i+1))^i i!
Rat monotonicity_threshold(int d, int i);

}  // namespace sc
