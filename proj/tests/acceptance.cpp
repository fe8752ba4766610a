#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "spherecomb/complex.hpp"
#include "spherecomb/link.hpp"
#include "spherecomb/macaulay.hpp"
#include "spherecomb/orthopath.hpp"
#include "spherecomb/realize.hpp"
#include "spherecomb/vectors.hpp"

using namespace sc;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) {
    ok = false;
    detail += " over time budget";
  }
  if (!ok) ++failures;
  std::printf("%s %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), s, budget_s,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
}

std::vector<Int> random_palindrome(std::mt19937& rng, int d) {
  std::vector<Int> h(static_cast<std::size_t>(d + 1));
  h[0] = h[static_cast<std::size_t>(d)] = 1;
  for (int i = 1; i <= d / 2; ++i) h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(d - i)] = Int(static_cast<long>(rng() % 500));
  return h;
}

WeightScheme random_scheme(std::mt19937& rng, int N) {
  WeightScheme w;
  for (int i = 0; i <= N; ++i) {
    Rat b(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
    Rat l(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
    b.canonicalize();
    l.canonicalize();
    w.b.push_back(b);
    w.lam.push_back(l);
  }
  return w;
}

std::vector<Int> cross_g(int d) {
  std::vector<Int> g{1};
  for (int i = 1; i <= d / 2; ++i) g.push_back(binom(d, i) - binom(d, i - 1));
  return g;
}

Int f1_of(const std::vector<Int>& g, int d) { return binom(d + 1, 2) + d * g[1] + g[2]; }

// branch builders, each a truncated g for dimension d
std::vector<Int> branch_linear(int d) { return cross_g(d); }

std::vector<Int> branch_large(int d) {
  std::vector<Int> g{1};
  for (int i = 1; i <= d / 2; ++i) {
    Int x;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(i + 1));
    g.push_back(x);
  }
  return g;
}

// g_3 tuned so C_1 / (f1 g_2) tends to mu
std::vector<Int> branch_mu(int d, const Rat& mu) {
  auto g = cross_g(d);
  Rat v = Rat(g[2] * f1_of(g, d)) * 2 * mu / 6;
  Int g3;
  mpz_fdiv_q(g3.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  g[3] = g3;
  return g;
}

}  // namespace

int main() {
  criterion("criterion 1: local-global identities and contraction law on cross-polytope boundaries", 10, [](std::string& det) {
    bool ok = true;
    for (int d = 3; d <= 6; ++d) {
      auto K = cross_polytope_boundary(d);
      for (int i = 0; i <= d; ++i) ok = ok && vertex_local_global_check(K, i).equal();
      for (int k = 0; k <= d - 2; ++k) ok = ok && edge_local_global_check(K, k).equal();
      for (const Face& e : K.edges()) ok = ok && contraction_h_check(K, e).equal;
    }
    auto b = edge_local_global_check(cross_polytope_boundary(4), 1);
    det = "d=4 k=1 edge identity " + to_string(b.lhs) + " = " + to_string(b.rhs);
    return ok && b.lhs == 48 && b.rhs == 48;
  });

  criterion("criterion 2: gamma via matrices, Chebyshev inversion and covers agree", 30, [](std::string& det) {
    std::mt19937 rng(2024);
    int n = 0;
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
      int d = 2 * (1 + t % 4);
      auto h = random_palindrome(rng, d);
      std::vector<Int> half(h.begin(), h.begin() + d / 2 + 1);
      auto a = h_half_to_gamma(half, d);
      ok = ok && a == gamma_via_chebyshev(h) && a == gamma_via_covers(h);
      ++n;
    }
    auto c4 = h_vector(cross_polytope_boundary(4)).entries;
    bool cross = gamma_via_covers(c4) == std::vector<Int>{1, 0, 0} && gamma_via_chebyshev(c4) == std::vector<Int>{1, 0, 0};
    det = std::to_string(n) + " random palindromes";
    return ok && cross;
  });

  criterion("criterion 3: Macaulay representations, pseudopower sandwich and asymptotics", 60, [](std::string& det) {
    bool ok = true;
    for (long k = 1; k <= 6; ++k) {
      Int prev = 0;
      for (long a = 1; a <= 2000; ++a) {
        auto r = macaulay_rep(a, k);
        ok = ok && r.value() == a;
        for (std::size_t j = 1; j < r.terms.size(); ++j) ok = ok && r.terms[j].first < r.terms[j - 1].first;
        Int p = pseudopower(a, k);
        ok = ok && p >= prev;
        prev = p;
      }
    }
    long unknown = 0;
    for (long k = 1; k <= 8; ++k)
      for (long a = 1; a <= 10000; ++a) {
        auto b = pseudopower_bounds(a, k);
        if (b.pp_le_upper == Tri::Unknown || b.upper_le_power == Tri::Unknown) ++unknown;
        ok = ok && b.chain_ok();
      }
    Interval r = asymptotic_ratio(1000000, 3);
    bool ratio = le(r, Interval(Rat(105, 100), 256)) == Tri::True && le(Interval(Rat(95, 100), 256), r) == Tri::True;
    det = "ratio at 10^6 in [" + std::to_string(r.lo_d()) + ", " + std::to_string(r.hi_d()) + "], unknown verdicts " + std::to_string(unknown);
    return ok && ratio;
  });

  criterion("criterion 4: extension round trip and fvector vs sphere bounds", 30, [](std::string& det) {
    std::mt19937 rng(77);
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
      int d = 2 + static_cast<int>(rng() % 11);
      Mode m = static_cast<Mode>(t % 3);
      Strategy s;
      s.kind = static_cast<Strategy::Kind>(rng() % 2);
      s.rho = Rat(1 + static_cast<long>(rng() % 10), 10);
      s.rho.canonicalize();
      s.cap = static_cast<long>(rng() % 40);
      auto r = extend_gamma({Int(1)}, d, m, s);
      ok = ok && r.complete && check_gamma_in_mode(r.gamma, d, m).ok;
    }
    int compared = 0;
    for (int d : {6, 8}) {
      Int dd;
      mpz_ui_pow_ui(dd.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d));
      for (int len = 2; len <= d / 2; ++len)
        for (int t = 0; t < 5; ++t) {
          std::vector<Int> p{1};
          for (int j = 1; j < len; ++j) p.push_back(dd + static_cast<long>(rng() % 100000));
          auto f = gamma_extension_bound(p, d, Mode::fvector);
          auto s = gamma_extension_bound(p, d, Mode::sphere);
          ok = ok && f.upper && s.upper && *f.upper <= *s.upper;
          ++compared;
        }
    }
    det = "50 strategies, " + std::to_string(compared) + " large prefixes";
    return ok;
  });

  criterion("criterion 5: Motzkin path weights and inverse pair", 60, [](std::string& det) {
    std::mt19937 rng(5);
    bool ok = true;
    for (int t = 0; t < 25; ++t) {
      auto w = random_scheme(rng, 10);
      for (int N = 0; N <= 10; ++N) {
        auto mu = mu_matrix(w, N);
        for (int k = 0; k <= N; ++k) ok = ok && mu[N][k] == mu_bruteforce(w, N, k);
      }
    }
    for (int N = 0; N <= 12; ++N) ok = ok && inverse_pair_check(chebyshev_scheme(N), N);
    for (int N = 0; N <= 8; ++N) ok = ok && inverse_pair_check(random_scheme(rng, N), N);
    for (int N = 0; N <= 6; ++N) ok = ok && mu_symbolic_check(N).ok();
    det = "N <= 10 brute force, symbolic N <= 6";
    return ok;
  });

  criterion("criterion 6: Tchebyshev subdivision polynomial identity and order invariance", 10, [](std::string& det) {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) ok = ok && tcheb_fpoly_identity_check(cycle(n)).ok;
    for (int d = 2; d <= 3; ++d) ok = ok && tcheb_fpoly_identity_check(simplex_boundary(d)).ok;
    ok = ok && tcheb_fpoly_identity_check(cross_polytope_boundary(3)).ok;
    auto c3 = cycle(3);
    auto edges = c3.edges();
    std::sort(edges.begin(), edges.end());
    auto ref = f_vector(tchebyshev_subdivision(c3, edges)).f;
    int orders = 0;
    do {
      ok = ok && f_vector(tchebyshev_subdivision(c3, edges)).f == ref;
      ++orders;
    } while (std::next_permutation(edges.begin(), edges.end()));
    auto oct = cross_polytope_boundary(3);
    auto oe = oct.edges();
    auto oref = f_vector(tchebyshev_subdivision(oct, oe)).f;
    std::mt19937 rng(6);
    for (int t = 0; t < 10; ++t) {
      std::shuffle(oe.begin(), oe.end(), rng);
      ok = ok && f_vector(tchebyshev_subdivision(oct, oe)).f == oref;
    }
    det = std::to_string(orders) + " orders on the 3-cycle, 10 on the octahedron";
    return ok && orders == 6;
  });

  criterion("criterion 7: link-condition inequalities on cross-polytope boundaries", 60, [](std::string& det) {
    bool ok = true;
    int sandwiches = 0, unknown = 0;
    for (int d = 4; d <= 8; ++d) {
      auto r = analyze_link(cross_polytope_boundary(d));
      ok = ok && r.identities_ok() && r.premise_status == "verified numerically";
      for (const auto& row : r.interlacing) ok = ok && row.low_ok && row.high_ok;
      for (const auto& s : r.sandwiches) {
        ++sandwiches;
        if (s.lower_le_mid == Tri::Unknown || s.mid_le_upper == Tri::Unknown) ++unknown;
        ok = ok && s.lower_le_mid == Tri::True && s.mid_le_upper == Tri::True && s.cushion_nonneg;
      }
      bool tagged = false;
      for (const auto& t : r.triviality) {
        if (t.skipped) continue;
        tagged = std::find(t.tags.begin(), t.tags.end(), "interlacing-active") != t.tags.end();
        ok = ok && tagged && t.r_in_unit;
      }
      ok = ok && tagged;
    }
    det = std::to_string(sandwiches) + " sandwiches, " + std::to_string(unknown) + " unknown";
    return ok && unknown == 0;
  });

  criterion("criterion 8: dimer identity", 5, [](std::string& det) {
    bool ok = true;
    int n = 0;
    for (int m = 2; m <= 14; ++m)
      for (int l = m % 2; l <= m; l += 2) {
        ok = ok && dimer_identity_check(m, l).ok;
        ++n;
      }
    auto w = dimer_identity_check(2, 0);
    det = std::to_string(n) + " pairs, (2,0): " + to_string(w.lhs) + " = " + to_string(w.rhs);
    return ok && w.lhs == -2 && w.rhs == -2;
  });

  criterion("surrogates: finite-d quantities move monotonically toward each branch target", 30, [](std::string& det) {
    struct Branch {
      std::string name;
      std::function<std::vector<Int>(int)> g;
      int k;
      Rat target;
    };
    std::vector<Branch> branches{
        {"linear", branch_linear, 1, Rat(0)},
        {"large", branch_large, 1, Rat(0)},
        {"mu=1/2", [](int d) { return branch_mu(d, Rat(1, 2)); }, 2, Rat(1, 2)},
        {"mu=1", [](int d) { return branch_mu(d, Rat(1)); }, 2, Rat(1)},
    };
    bool ok = true;
    for (const auto& b : branches) {
      Rat prev = -1;
      det += b.name + ":";
      for (int d : {10, 20, 40}) {
        auto s = surrogates(b.g(d), d, b.k);
        Rat gap = abs(s.r_prev - b.target);
        det += " " + std::to_string(s.r_prev.get_d());
        if (prev >= 0 && !(gap < prev)) ok = false;
        prev = gap;
      }
      det += "; ";
    }
    return ok;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
