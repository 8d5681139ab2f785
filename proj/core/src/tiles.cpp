#include "tilesum/tiles.hpp"

#include "tilesum/error.hpp"

namespace tilesum {

namespace {

struct Fixed {
  Color::Kind kind;
  const char* tag;
  const char* glyph;
};

constexpr Fixed kFixed[] = {
    {Color::Kind::Blank0, "c0", "."},       {Color::Kind::ArrowRight, "R-arrow", ">"},
    {Color::Kind::ArrowUp, "U-arrow", "^"}, {Color::Kind::ArrowLeft, "L-arrow", "<"},
    {Color::Kind::ArrowDown, "D-arrow", "v"}, {Color::Kind::ArrowDiag, "diag", "\\"},
    {Color::Kind::TriLeft, "tri-l", "<|"},  {Color::Kind::TriRight, "tri-r", "|>"},
};

}  // namespace

std::string Color::to_string() const {
  switch (kind) {
    case Kind::State:
      return "q:" + state;
    case Kind::Letter:
      return "a:" + letter;
    case Kind::Head:
      return "qa:" + state + "," + letter;
    default:
      for (const auto& f : kFixed)
        if (f.kind == kind) return f.tag;
  }
  return "?";
}

std::string Color::glyph() const {
  switch (kind) {
    case Kind::State:
      return state;
    case Kind::Letter:
      return letter;
    case Kind::Head:
      return state + ":" + letter;
    default:
      for (const auto& f : kFixed)
        if (f.kind == kind) return f.glyph;
  }
  return "?";
}

Color Color::parse(std::string_view text) {
  for (const auto& f : kFixed)
    if (text == f.tag) return Color::of(f.kind);
  auto rest = [&](std::size_t n) { return std::string(text.substr(n)); };
  if (text.starts_with("q:") && text.size() > 2) return Color::of_state(rest(2));
  if (text.starts_with("a:") && text.size() > 2) return Color::of_letter(rest(2));
  if (text.starts_with("qa:")) {
    auto body = text.substr(3);
    auto comma = body.find(',');
    if (comma != std::string_view::npos && comma > 0 && comma + 1 < body.size())
      return Color::of_head(std::string(body.substr(0, comma)), std::string(body.substr(comma + 1)));
  }
  throw Error(Errc::Parse, "bad color '" + std::string(text) + "'");
}

std::optional<std::size_t> TilingSystem::find(const Tile& t) const {
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (tiles[i].same_colors(t)) return i;
  return std::nullopt;
}

const Tile* TilingSystem::find_named(std::string_view name) const {
  for (const auto& t : tiles)
    if (t.name && *t.name == name) return &t;
  return nullptr;
}

std::vector<std::string> TilingSystem::check() const {
  std::vector<std::string> out;
  if (!colors.count(distinguished)) out.push_back("distinguished color is not declared");
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (const Color* c : {&tiles[i].north, &tiles[i].east, &tiles[i].south, &tiles[i].west})
      if (!colors.count(*c)) out.push_back("tile " + std::to_string(i) + " uses undeclared color " + c->to_string());
  }
  return out;
}

}  // namespace tilesum
