#include "omega/field.hpp"

#include <cctype>

namespace omega {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::reduce(const Scalar& v) const {
  // v is always an integer here: only representatives with denominator 1 are
  // fed into +, -, *.
  mpz_class r = v.get_num() % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Scalar(r);
}

Scalar Field::from_int(long v) const {
  if (p_ == 0) return Scalar(v);
  return reduce(Scalar(v));
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw InvalidInput("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

Scalar Field::embed(const Scalar& q) const {
  if (p_ == 0) return q;
  Scalar num = reduce(Scalar(q.get_num()));
  Scalar den = reduce(Scalar(q.get_den()));
  if (den == 0) throw InvalidInput("denominator divisible by the characteristic");
  return mul(num, inv(den));
}

Scalar Field::parse(std::string_view text) const {
  if (text.empty()) throw InvalidInput("empty scalar string");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+')) {
      throw InvalidInput("malformed scalar '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  Scalar q;
  try {
    q = Scalar(s);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed scalar '" + s + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return embed(q);
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
  if (p_ == 0) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace omega
