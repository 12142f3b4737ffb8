#include "tilings/exactnum.hpp"

#include <stdexcept>

namespace tilings {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

ExactRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  ExactRational r;
  if (slash == std::string::npos) {
    r = ExactRational(ExactInt(text));
  } else {
    ExactInt num(text.substr(0, slash));
    ExactInt den(text.substr(slash + 1));
    return make_rational(num, den);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

ExactInt isqrt_exact(const ExactInt& n) {
  if (n < 0) throw std::domain_error("isqrt_exact: negative argument");
  ExactInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) throw std::domain_error("isqrt_exact: not a perfect square");
  return root;
}

ExactInt to_integer(const ExactRational& v) {
  if (v.get_den() != 1) throw std::domain_error("to_integer: non-integral rational");
  return v.get_num();
}

ExactInt factorial(std::uint32_t n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInt double_factorial_odd(std::uint32_t m) {
  if (m < 1) throw std::domain_error("double_factorial_odd: m must be >= 1");
  ExactInt r = 1;
  for (std::int64_t f = 2 * static_cast<std::int64_t>(m) - 1; f >= 1; f -= 2) r *= f;
  return r;
}

ExactRational pochhammer(const ExactRational& a, std::uint32_t k) {
  ExactRational r = 1;
  ExactRational term = a;
  for (std::uint32_t i = 0; i < k; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

ExactInt hyperfactorial(std::uint32_t n) {
  ExactInt r = 1;
  ExactInt fac = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    fac *= i;
    r *= fac;
  }
  return r;
}

ExactRational angle_bracket(const ExactRational& a, std::int64_t k) {
  if (k < 0) return 1;
  ExactRational r = 1;
  for (std::int64_t i = 0; i <= k; ++i) {
    std::int64_t e = std::min(i + 1, k + 1 - i);
    ExactRational base = a + ExactRational(static_cast<long>(i));
    for (std::int64_t j = 0; j < e; ++j) r *= base;
  }
  return r;
}

ExactInt delta(const std::vector<std::int64_t>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) throw std::invalid_argument("delta: list must be strictly increasing");
  ExactInt r = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) r *= ExactInt(s[j] - s[i]);
  return r;
}

}  // namespace tilings
