#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilesum {

using Integer = boost::multiprecision::cpp_int;

/// Coefficient ring: the integers, or Z/nZ for n >= 2.
///
/// Values are plain Integers; every operation returns the canonical
/// representative (0..n-1 for Z/n).
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring{}; }
  static Ring modulo(std::int64_t n);

  /// Parses "Z" or "Zmod:n".
  static Ring parse(std::string_view text);

  bool is_integers() const noexcept { return modulus_ == 0; }
  std::int64_t modulus() const noexcept { return modulus_; }

  Integer normalize(Integer v) const;
  Integer add(const Integer& a, const Integer& b) const { return normalize(a + b); }
  Integer sub(const Integer& a, const Integer& b) const { return normalize(a - b); }
  Integer neg(const Integer& a) const { return normalize(-a); }
  Integer mul(const Integer& a, const Integer& b) const { return normalize(a * b); }

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::int64_t n) : modulus_(n) {}

  std::int64_t modulus_ = 0;
};

// Throws RingMismatch when the two rings differ.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace tilesum
