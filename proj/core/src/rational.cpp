#include "sl2cat/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sl2cat {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s))
      throw std::invalid_argument("Rational: malformed integer '" + s + "'");
    return Rational(mpq_class(mpz_class(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("Rational: malformed rational '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sl2cat
