#include "fmes/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace fmes {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("negative Bernoulli index");
  static std::mutex guard;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(guard);
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    Rational acc = 0;
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

std::uint64_t hash_value(const Rational& q) {
  auto limb = [](const mpz_class& z) -> std::uint64_t {
    if (z == 0) return 0;
    std::uint64_t low = mpz_getlimbn(z.get_mpz_t(), 0);
    return sgn(z) < 0 ? ~low : low;
  };
  std::uint64_t h = limb(q.get_num());
  h ^= limb(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace fmes
