#include "bollobas/exact.hpp"

#include "bollobas/errors.hpp"

#include <mutex>
#include <vector>

namespace bollobas {

namespace {

struct FactorialCache {
  std::mutex mutex;
  std::vector<BigInteger> values{BigInteger(1)};
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

} // namespace

BigInteger factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  auto& cache = factorial_cache();
  std::lock_guard lock(cache.mutex);
  auto& v = cache.values;
  while (static_cast<int>(v.size()) <= n) {
    v.push_back(v.back() * static_cast<unsigned>(v.size()));
  }
  return v[static_cast<std::size_t>(n)];
}

BigInteger binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInteger multinomial(int n, std::span<const int> ks) {
  if (n < 0) throw DomainError("multinomial with negative n");
  int used = 0;
  BigInteger denom = 1;
  for (int k : ks) {
    if (k < 0) throw DomainError("multinomial with a negative part");
    used += k;
    if (used > n) throw DomainError("multinomial parts exceed n");
    denom *= factorial(k);
  }
  return factorial(n) / (denom * factorial(n - used));
}

BigInteger multinomial(const TupleType& t) {
  return multinomial(t.total(), t.sizes());
}

Rational bollobas_sum(const Family& f) {
  Rational sum = 0;
  for (const auto& t : f) {
    sum += Rational(1, multinomial(type_of(t)));
  }
  return sum;
}

Rational skew_sum(const Family& f) {
  const int d = f.arity();
  Rational sum = 0;
  for (const auto& t : f) {
    const auto type = type_of(t);
    sum += Rational(1, binomial(type.total() + d - 1, d - 1) * multinomial(type));
  }
  return sum;
}

Rational pair_weighted_sum(const Family& f) {
  if (f.arity() != 2) {
    throw ArityError("pair_weighted_sum needs d = 2, got " + std::to_string(f.arity()));
  }
  Rational sum = 0;
  for (const auto& t : f) {
    const int a = t.part_size(0);
    const int b = t.part_size(1);
    sum += Rational(1, BigInteger(1 + a + b) * binomial(a + b, a));
  }
  return sum;
}

Rational recursive_bound(int n, int d) {
  if (n < 1) throw DomainError("recursive_bound needs n >= 1");
  if (d < 2) throw ArityError("recursive_bound needs d >= 2");
  Rational bound = 1;
  for (int k = 3; k <= d; ++k) {
    bound = Rational(binomial(n + k - 2, k - 2), BigInteger(k - 1)) + (k - 2) * bound;
  }
  return bound;
}

std::string to_string(const Rational& r) {
  // cpp_rational::str() already gives "p" or "p/q" in lowest terms.
  return r.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
      }
    }
    return BigInteger(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInteger num = parse_int(text.substr(0, slash));
  BigInteger den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_decimal(const Rational& r, int digits) {
  BigInteger num = boost::multiprecision::numerator(r);
  const BigInteger den = boost::multiprecision::denominator(r);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  BigInteger scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInteger scaled = num * scale / den;
  const BigInteger whole = scaled / scale;
  out += whole.str();
  if (digits > 0) {
    std::string frac = BigInteger(scaled % scale).str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

} // namespace bollobas
