#include "tilesum/ring.hpp"

#include <charconv>

#include "tilesum/error.hpp"

namespace tilesum {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidMachine: return "InvalidMachine";
    case Errc::LeftEdgeViolation: return "LeftEdgeViolation";
    case Errc::UndefinedTransition: return "UndefinedTransition";
    case Errc::DoesNotFit: return "DoesNotFit";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::UnknownTile: return "UnknownTile";
    case Errc::UnknownColor: return "UnknownColor";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::RankExceedsIndex: return "RankExceedsIndex";
    case Errc::UnboundSymbol: return "UnboundSymbol";
    case Errc::NotACycle: return "NotACycle";
    case Errc::DuplicateShift: return "DuplicateShift";
    case Errc::BadIndex: return "BadIndex";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Ring Ring::modulo(std::int64_t n) {
  if (n < 2) throw Error(Errc::Parse, "modulus must be at least 2, got " + std::to_string(n));
  return Ring(n);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text.starts_with("Zmod:")) {
    auto digits = text.substr(5);
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return modulo(n);
  }
  throw Error(Errc::Parse, "ring must be 'Z' or 'Zmod:n', got '" + std::string(text) + "'");
}

Integer Ring::normalize(Integer v) const {
  if (modulus_ == 0) return v;
  v %= modulus_;
  if (v < 0) v += modulus_;
  return v;
}

std::string Ring::to_string() const {
  return modulus_ == 0 ? "Z" : "Zmod:" + std::to_string(modulus_);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw Error(Errc::RingMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace tilesum
