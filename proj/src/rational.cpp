#include "modinv/rational.hpp"

#include <stdexcept>

namespace modinv {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s);
    } else {
      num = Integer(s.substr(0, slash));
      den = Integer(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool exact_integer_root(const Integer& value, unsigned k, Integer& root) {
  if (value < 0) return false;
  Integer r;
  mpz_root(r.get_mpz_t(), value.get_mpz_t(), k);
  Integer check;
  mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
  if (check != value) return false;
  root = r;
  return true;
}

}  // namespace

bool exact_root(const Rational& value, unsigned k, Rational& root) {
  if (k == 0 || value <= 0) return false;
  Integer num, den;
  if (!exact_integer_root(value.get_num(), k, num)) return false;
  if (!exact_integer_root(value.get_den(), k, den)) return false;
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

bool is_power_of_two(const Rational& r, long* exponent) {
  if (r == 0) return false;
  Integer num = abs(r.get_num());
  Integer den = r.get_den();
  auto log2_exact = [](const Integer& v, long& e) {
    if (v <= 0) return false;
    const auto bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    if (mpz_scan1(v.get_mpz_t(), 0) != bits - 1) return false;
    e = static_cast<long>(bits - 1);
    return true;
  };
  long en = 0, ed = 0;
  if (!log2_exact(num, en) || !log2_exact(den, ed)) return false;
  if (exponent != nullptr) *exponent = en - ed;
  return true;
}

Rational pow(const Rational& base, long exponent) {
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace modinv
