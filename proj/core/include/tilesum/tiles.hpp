#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tilesum {

/// Edge color. State/Letter/Head carry names, so a tiling system stands on
/// its own without the machine it was compiled from.
struct Color {
  enum class Kind : std::uint8_t {
    State,
    Letter,
    Head,
    ArrowRight,
    ArrowUp,
    ArrowLeft,
    ArrowDown,
    ArrowDiag,
    TriLeft,
    TriRight,
    Blank0,
  };

  Kind kind = Kind::Blank0;
  std::string state;
  std::string letter;

  static Color blank0() { return {}; }
  static Color of(Kind k) { return {k, {}, {}}; }
  static Color of_state(std::string q) { return {Kind::State, std::move(q), {}}; }
  static Color of_letter(std::string a) { return {Kind::Letter, {}, std::move(a)}; }
  static Color of_head(std::string q, std::string a) { return {Kind::Head, std::move(q), std::move(a)}; }

  bool is_blank0() const { return kind == Kind::Blank0; }

  /// Tagged text form: "c0", "R-arrow", "U-arrow", "L-arrow", "D-arrow",
  /// "diag", "tri-l", "tri-r", "q:<state>", "a:<letter>", "qa:<state>,<letter>".
  std::string to_string() const;
  static Color parse(std::string_view text);

  /// Short glyph used by the text renderer.
  std::string glyph() const;

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
};

struct Tile {
  Color north, east, south, west;
  std::optional<std::string> name;

  bool same_colors(const Tile& o) const {
    return north == o.north && east == o.east && south == o.south && west == o.west;
  }

  friend bool operator==(const Tile&, const Tile&) = default;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

struct TilingSystem {
  std::set<Color> colors;
  Color distinguished = Color::blank0();
  std::vector<Tile> tiles;

  /// Index of the tile with the same four colors, if any.
  std::optional<std::size_t> find(const Tile& t) const;
  const Tile* find_named(std::string_view name) const;

  /// Every color used by a tile is declared, and c0 is declared.
  std::vector<std::string> check() const;
};

}  // namespace tilesum
