#include "singindex/rational.hpp"

#include "singindex/error.hpp"

#include <cctype>
#include <limits>

namespace singindex {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw RejectedInput("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw RejectedInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw RejectedInput("value " + q.get_str() + " is not an integer");
  const Integer& z = q.get_num();
  if (!z.fits_slong_p()) throw RejectedInput("integer " + z.get_str() + " out of range");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace singindex
