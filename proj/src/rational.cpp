#include "recon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace recon {

Rational parse_rational(std::string_view text) {
  auto valid = !text.empty();
  std::size_t digits = 0;
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < text.size() && valid; ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      ++digits;
    } else if (ch == '-' && i == 0) {
      continue;
    } else if (ch == '/' && digits > 0 && slashes == 0) {
      ++slashes;
      digits = 0;
    } else {
      valid = false;
    }
  }
  if (!valid || digits == 0) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Rational value(std::string(text), 10);
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace recon
