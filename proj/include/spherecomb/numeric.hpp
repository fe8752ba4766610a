#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sc {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0.  n must be >= 0.
Int binom(long n, long k);
Int binom(const Int& n, long k);
// generalized C(x, k) = x(x-1)...(x-k+1)/k! at a rational point
Rat binom_poly(const Rat& x, long k);

Int factorial(long n);
Int pow2(long e);
Rat pow2q(long e);  // 2^e for any sign of e

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // "p" or "p/q"

// "12", "-3", "3/4"; throws ParseError
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);
// comma separated list of integers
std::vector<Int> parse_int_csv(const std::string& s);
std::vector<Rat> parse_rat_csv(const std::string& s);

// "1234…(n digits)" style shortening for table output
std::string shorten(const std::string& digits, std::size_t limit = 30);

std::string join(const std::vector<Int>& v, const std::string& sep = ",");
std::string join(const std::vector<Rat>& v, const std::string& sep = ",");

bool is_integer(const Rat& q);

}  // namespace sc
