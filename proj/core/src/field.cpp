#include "qgrass/field.hpp"

#include <charconv>

#include "qgrass/errors.hpp"

namespace qgrass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxPrime) {
    throw PreconditionError("field characteristic " + std::to_string(p) + " exceeds 2^31-1");
  }
  if (!is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw PreconditionError("unrecognized field '" + std::string(text) +
                          "' (expected \"Q\" or \"Fp:<prime>\")");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* context) {
  if (a != b) {
    throw FieldMismatch(std::string(context) + ": operands over " + a.to_string() + " and " +
                        b.to_string());
  }
}

}  // namespace qgrass
