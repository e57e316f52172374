#include "qwick/rational.hpp"

#include <cctype>
#include <string>

#include "qwick/errors.hpp"

namespace qwick {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational value;
  // mpq accepts "a/b" and "a"; reject anything with stray characters.
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+')) {
      throw DomainError("malformed rational '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(s.begin());
  if (value.set_str(s, 10) != 0) throw DomainError("malformed rational '" + std::string(text) + "'");
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace qwick
