#include <doctest.h>

#include <random>

#include "spherecomb/errors.hpp"
#include "spherecomb/vectors.hpp"

using namespace sc;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// sum h_i x^(d-i) == sum f_{i-1} (x-1)^(d-i) at a few integer points
bool fh_identity(const std::vector<Int>& f, const std::vector<Int>& h, int d) {
  for (long x = -3; x <= 4; ++x) {
    Int lhs = 0, rhs = 0;
    for (int i = 0; i <= d; ++i) {
      Int p, q;
      mpz_pow_ui(p.get_mpz_t(), Int(x).get_mpz_t(), static_cast<unsigned long>(d - i));
      mpz_pow_ui(q.get_mpz_t(), Int(x - 1).get_mpz_t(), static_cast<unsigned long>(d - i));
      lhs += h[i] * p;
      rhs += (i == 0 ? Int(1) : f[i - 1]) * q;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// h(t) = sum gamma_i t^i (1+t)^(d-2i) expanded as polynomials
std::vector<Int> h_from_gamma_oracle(const std::vector<Int>& gamma, int d) {
  std::vector<Int> h(d + 1);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::vector<Int> p{1};
    for (int r = 0; r < d - 2 * static_cast<int>(i); ++r) {
      std::vector<Int> q(p.size() + 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j] += p[j];
        q[j + 1] += p[j];
      }
      p = q;
    }
    for (std::size_t j = 0; j < p.size(); ++j) h[i + j] += gamma[i] * p[j];
  }
  return h;
}

Rat det(std::vector<std::vector<Rat>> m) {
  std::size_t n = m.size();
  Rat r = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      r = -r;
    }
    r *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return r;
}

}  // namespace

TEST_CASE("f to h") {
  CHECK(f_to_h(ints({6, 12, 8}), 3).entries == ints({1, 3, 3, 1}));
  CHECK(f_to_h(ints({8, 24, 32, 16}), 4).entries == ints({1, 4, 6, 4, 1}));
  for (long n = 3; n <= 9; ++n) CHECK(f_to_h(ints({n, n}), 2).entries == ints({1, n - 2, 1}));
  CHECK_THROWS_AS(f_to_h(ints({1, 2}), 3), ShapeError);
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    int d = 1 + static_cast<int>(rng() % 8);
    std::vector<Int> f;
    for (int i = 0; i < d; ++i) f.emplace_back(static_cast<long>(rng() % 200) - 50);
    auto h = f_to_h(f, d).entries;
    CHECK(fh_identity(f, h, d));
    CHECK(h_to_f(h, d).entries == f);
  }
}

TEST_CASE("g vectors and Dehn-Sommerville") {
  CHECK(h_to_g(ints({1, 4, 6, 4, 1}), false).entries == ints({1, 3, 2}));
  CHECK(h_to_g(ints({1, 4, 6, 4, 1}), true).entries == ints({1, 3, 2, -2, -3}));
  CHECK(h_to_g(ints({1, 2, 1}), false).entries == ints({1, 1}));
  CHECK(dehn_sommerville_check(ints({1, 4, 6, 4, 1})));
  CHECK(dehn_sommerville_check(ints({1, 3, 4, 3, 1})));
  CHECK_FALSE(dehn_sommerville_check(ints({1, 2, 3, 1})));
}

TEST_CASE("gamma matrices") {
  auto A = matrix_a(4);
  CHECK(A[0][0] == 1);
  CHECK(A[1][0] == 4);
  CHECK(A[2][0] == 6);
  CHECK(A[2][1] == 2);
  CHECK(gamma_to_h(ints({1, 0, 0}), 4) == ints({1, 4, 6}));
  CHECK(h_half_to_gamma(ints({1, 4, 6}), 4) == ints({1, 0, 0}));
  CHECK(gamma_to_h(ints({1, 2}), 2) == ints({1, 4}));
  CHECK(gamma_to_g(ints({1, 2}), 2) == ints({1, 3}));
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    int d = 1 + static_cast<int>(rng() % 12);
    std::vector<Int> gam;
    for (int i = 0; i <= d / 2; ++i) gam.emplace_back(static_cast<long>(rng() % 40) - 10);
    auto full = h_from_gamma_oracle(gam, d);
    CHECK(gamma_to_full_h(gam, d) == full);
    auto g = h_to_g(full, false).entries;
    CHECK(gamma_to_g(gam, d) == g);
    CHECK(h_half_to_gamma(gamma_to_h(gam, d), d) == gam);
    CHECK(g_to_gamma(g, d) == gam);
  }
}

TEST_CASE("gamma nonnegative implies h_i >= C(d,i)") {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    int d = 2 + static_cast<int>(rng() % 10);
    std::vector<Int> gam{1};
    for (int i = 1; i <= d / 2; ++i) gam.emplace_back(static_cast<long>(rng() % 30));
    auto h = gamma_to_h(gam, d);
    for (int i = 0; i <= d / 2; ++i) CHECK(h[i] >= binom(d, i));
  }
}

TEST_CASE("total nonnegativity of A and B, minors up to 4") {
  for (int d = 2; d <= 10; ++d)
    for (const auto& M : {matrix_a(d), matrix_b(d)}) {
      int n = static_cast<int>(M.size());
      for (int sz = 1; sz <= std::min(4, n); ++sz)
        for (unsigned rows = 0; rows < (1u << n); ++rows) {
          if (__builtin_popcount(rows) != sz) continue;
          for (unsigned cols = 0; cols < (1u << n); ++cols) {
            if (__builtin_popcount(cols) != sz) continue;
            std::vector<std::vector<Rat>> sub;
            for (int i = 0; i < n; ++i) {
              if (!(rows >> i & 1u)) continue;
              std::vector<Rat> row;
              for (int j = 0; j < n; ++j)
                if (cols >> j & 1u) row.emplace_back(M[i][j]);
              sub.push_back(row);
            }
            CHECK(det(sub) >= 0);
          }
        }
    }
}

TEST_CASE("chebyshev inversion") {
  CHECK(gamma_via_chebyshev(ints({1, 4, 1})) == ints({1, 2}));
  CHECK(gamma_via_chebyshev(ints({1, 4, 6, 4, 1})) == ints({1, 0, 0}));
  CHECK(gamma_via_chebyshev(ints({1, 3, 3, 1})) == ints({1, 0}));
  CHECK_THROWS_AS(gamma_via_chebyshev(ints({1, 2, 3})), NotReciprocal);
  std::mt19937 rng(3);
  for (int t = 0; t < 80; ++t) {
    int d = 1 + static_cast<int>(rng() % 14);
    std::vector<Int> half;
    for (int i = 0; i <= d / 2; ++i) half.emplace_back(static_cast<long>(rng() % 1000) - 300);
    auto h = mirror_h(half, d);
    CHECK(gamma_via_chebyshev(h) == h_half_to_gamma(half, d));
  }
}

TEST_CASE("coefficient ratio diagnostics") {
  for (int d = 2; d <= 16; ++d) {
    auto r = coefficient_ratio_diagnostics(d);
    CHECK(r.a_ok);
    CHECK(r.b_ok);
  }
  auto r2 = coefficient_ratio_diagnostics(2);
  CHECK(r2.count == 1);
  CHECK(r2.a_min == 2);
  auto r4 = coefficient_ratio_diagnostics(4);
  CHECK(r4.a_min >= Rat(3, 2));
  CHECK(r4.a_max <= 4);
  CHECK_THROWS_AS(coefficient_ratio_diagnostics(1), RangeError);
}

TEST_CASE("gamma ratio restrictions") {
  auto r = gamma_ratio_restrictions(ints({1, 3, 2}), 4);
  CHECK(r.all_ok);
  CHECK(r.rows[0].gamma_lower == 0);
  CHECK(r.rows[1].gamma_lower == 0);
  auto bad = gamma_ratio_restrictions(ints({1, 3, 1}), 4);
  CHECK_FALSE(bad.rows[1].growth_ok);
  CHECK_FALSE(gamma_ratio_restrictions(ints({1, 0}), 6).rows[0].growth_ok);
}

TEST_CASE("f1 identity on generated spheres") {
  for (int d = 4; d <= 7; ++d) {
    auto K = cross_polytope_boundary(d);
    auto g = h_to_g(h_vector(K).entries, false);
    CHECK(f_vector(K).f[1] == binom(d + 1, 2) + d * g[1] + g[2]);
  }
}

TEST_CASE("json form") {
  CountVector v{Kind::gamma, 4, ints({1, 0, 0})};
  auto j = to_json(v);
  CHECK(j["kind"] == "gamma");
  CHECK(j["entries"][0] == "1");
  auto back = count_vector_from_json(j);
  CHECK(back.entries == v.entries);
  CHECK(back.d == 4);
}
