#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qgrass {

// The coefficient field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  // Largest admissible prime; keeps products of residues inside 64 bits.
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  // Throws PreconditionError unless p is a prime <= kMaxPrime.
  static FieldSpec prime(std::uint64_t p);
  // Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Throws FieldMismatch when a != b; `context` names the caller.
void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* context);

}  // namespace qgrass
