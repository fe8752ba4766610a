#include "spherecomb/numeric.hpp"

#include <cctype>

#include "spherecomb/errors.hpp"

namespace sc {

Int binom(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) throw RangeError("binom: negative top " + std::to_string(n));
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int binom(const Int& n, long k) {
  if (k < 0) return 0;
  if (sgn(n) < 0) throw RangeError("binom: negative top");
  if (n < k) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rat binom_poly(const Rat& x, long k) {
  if (k < 0) return 0;
  Rat r = 1;
  for (long i = 0; i < k; ++i) r *= (x - i);
  r /= Rat(factorial(k));
  r.canonicalize();
  return r;
}

Int factorial(long n) {
  if (n < 0) throw RangeError("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int pow2(long e) {
  if (e < 0) throw RangeError("pow2: negative exponent");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Rat pow2q(long e) {
  if (e >= 0) return Rat(pow2(e));
  return Rat(Int(1), pow2(-e));
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

static std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_int(const std::string& raw) {
  std::string s = trim(raw);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("expected integer, got '" + raw + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("bad integer '" + raw + "' at position " + std::to_string(j));
  if (s[0] == '+') s = s.substr(1);
  return Int(s, 10);
}

Rat parse_rat(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + raw + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

template <class T, class F>
static std::vector<T> split_csv(const std::string& s, F conv) {
  std::vector<T> out;
  std::string cur;
  std::size_t field = 0;
  auto flush = [&] {
    try {
      out.push_back(conv(cur));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (field " + std::to_string(field) + ")");
    }
    cur.clear();
    ++field;
  };
  for (char c : s) {
    if (c == ',') flush();
    else cur.push_back(c);
  }
  flush();
  return out;
}

std::vector<Int> parse_int_csv(const std::string& s) { return split_csv<Int>(s, parse_int); }
std::vector<Rat> parse_rat_csv(const std::string& s) { return split_csv<Rat>(s, parse_rat); }

std::string shorten(const std::string& digits, std::size_t limit) {
  std::size_t n = digits.size();
  std::size_t sign = (!digits.empty() && digits[0] == '-') ? 1 : 0;
  if (n - sign <= limit) return digits;
  return digits.substr(0, sign + 12) + "…(" + std::to_string(n - sign) + " digits)";
}

std::string join(const std::vector<Int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::string join(const std::vector<Rat>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

bool is_integer(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

}  // namespace sc
