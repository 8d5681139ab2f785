#include "tilesum/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace tilesum {

namespace {

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string edge_label(const std::vector<std::pair<Color, Integer>>& items) {
  std::string out;
  for (const auto& [c, v] : items) {
    if (!out.empty()) out += "+";
    if (v != 1) out += v.str() + ":";
    out += c.glyph();
  }
  return out;
}

std::string tile_label(const Tile& t) {
  if (t.name) return *t.name;
  return t.south.glyph() + "/" + t.north.glyph() + t.east.glyph();
}

struct Bounds {
  std::int64_t x0, y0, x1, y1;
};

}  // namespace

std::string render_ascii(const EdgeMap& f) {
  if (f.is_zero()) return "";
  std::map<EdgeId, std::vector<std::pair<Color, Integer>>> edges;
  for (const auto& [k, v] : f.support()) edges[k.edge].push_back({k.color, v});

  Bounds b{edges.begin()->first.base.x, edges.begin()->first.base.y, edges.begin()->first.base.x,
           edges.begin()->first.base.y};
  std::size_t width = 1;
  for (const auto& [e, items] : edges) {
    b.x0 = std::min(b.x0, e.base.x);
    b.x1 = std::max(b.x1, e.base.x + (e.orient == Orient::H ? 1 : 0));
    b.y0 = std::min(b.y0, e.base.y);
    b.y1 = std::max(b.y1, e.base.y + (e.orient == Orient::V ? 1 : 0));
    width = std::max(width, edge_label(items).size());
  }

  // Each lattice column takes width+1 characters: the vertex, then the
  // horizontal edge to its right. Vertical edges start at the vertex.
  auto line = [&](std::int64_t y, Orient o) {
    std::string s;
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
      auto it = edges.find({{x, y}, o});
      const std::string label = it == edges.end() ? "" : edge_label(it->second);
      s += o == Orient::H ? "+" + pad(label, width) : pad(label, width + 1);
    }
    return rstrip(s);
  };

  std::ostringstream out;
  for (std::int64_t y = b.y1; y >= b.y0; --y) {
    out << "y=" << y << "\t" << line(y, Orient::H) << "\n";
    if (y > b.y0) out << "\t" << line(y - 1, Orient::V) << "\n";
  }
  return out.str();
}

std::string render_ascii(const Certificate& cert) {
  if (cert.placements.empty()) return "";
  std::map<Point, std::vector<std::string>> cells;
  Bounds b{cert.placements.front().pos.x, cert.placements.front().pos.y, cert.placements.front().pos.x,
           cert.placements.front().pos.y};
  for (const auto& p : cert.canonical().placements) {
    cells[p.pos].push_back(tile_label(p.tile));
    b.x0 = std::min(b.x0, p.pos.x);
    b.x1 = std::max(b.x1, p.pos.x);
    b.y0 = std::min(b.y0, p.pos.y);
    b.y1 = std::max(b.y1, p.pos.y);
  }
  std::map<Point, std::string> text;
  std::size_t width = 1;
  for (const auto& [p, labels] : cells) {
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : "+") + l;
    width = std::max(width, s.size());
    text[p] = s;
  }

  std::ostringstream out;
  out << "x\t";
  for (std::int64_t x = b.x0; x <= b.x1; ++x) out << pad(std::to_string(x), width) << (x == b.x1 ? "" : " ");
  out << "\n";
  for (std::int64_t y = b.y1; y >= b.y0; --y) {
    std::string row;
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
      auto it = text.find({x, y});
      row += pad(it == text.end() ? "." : it->second, width) + (x == b.x1 ? "" : " ");
    }
    out << "y=" << y << "\t" << rstrip(row) << "\n";
  }
  return out.str();
}

namespace {

constexpr int kCell = 80;

std::string svg_header(const Bounds& b) {
  const std::int64_t w = (b.x1 - b.x0 + 1) * kCell + kCell, h = (b.y1 - b.y0 + 1) * kCell + kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << " " << h << "\" font-family=\"monospace\" font-size=\"11\">\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Certificate& cert) {
  Bounds b{0, 0, 0, 0};
  if (!cert.placements.empty()) b = {cert.placements[0].pos.x, cert.placements[0].pos.y, cert.placements[0].pos.x,
                                     cert.placements[0].pos.y};
  for (const auto& p : cert.placements) {
    b.x0 = std::min(b.x0, p.pos.x);
    b.x1 = std::max(b.x1, p.pos.x);
    b.y0 = std::min(b.y0, p.pos.y);
    b.y1 = std::max(b.y1, p.pos.y);
  }
  std::ostringstream out;
  out << svg_header(b);
  for (const auto& p : cert.canonical().placements) {
    // SVG y grows downward; row y1 is drawn at the top.
    const std::int64_t px = (p.pos.x - b.x0) * kCell + kCell / 2, py = (b.y1 - p.pos.y) * kCell + kCell / 2;
    const Tile& t = p.tile;
    out << "<g data-x=\"" << p.pos.x << "\" data-y=\"" << p.pos.y << "\">";
    out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"none\" stroke=\"black\"/>";
    auto label = [&](std::int64_t x, std::int64_t y, const char* anchor, const Color& c) {
      out << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor << "\">" << xml_escape(c.glyph())
          << "</text>";
    };
    label(px + kCell / 2, py + 14, "middle", t.north);
    label(px + kCell - 4, py + kCell / 2 + 4, "end", t.east);
    label(px + kCell / 2, py + kCell - 6, "middle", t.south);
    label(px + 4, py + kCell / 2 + 4, "start", t.west);
    if (t.name) {
      out << "<text x=\"" << px + kCell / 2 << "\" y=\"" << py + kCell / 2 + 4
          << "\" text-anchor=\"middle\" fill=\"gray\">" << xml_escape(*t.name) << "</text>";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const EdgeMap& f) {
  std::map<EdgeId, std::vector<std::pair<Color, Integer>>> edges;
  for (const auto& [k, v] : f.support()) edges[k.edge].push_back({k.color, v});
  Bounds b{0, 0, 0, 0};
  if (!edges.empty()) {
    const Point p = edges.begin()->first.base;
    b = {p.x, p.y, p.x, p.y};
  }
  for (const auto& [e, items] : edges) {
    b.x0 = std::min(b.x0, e.base.x);
    b.x1 = std::max(b.x1, e.base.x + 1);
    b.y0 = std::min(b.y0, e.base.y);
    b.y1 = std::max(b.y1, e.base.y + 1);
  }
  std::ostringstream out;
  out << svg_header(b);
  for (const auto& [e, items] : edges) {
    const std::int64_t x = (e.base.x - b.x0) * kCell + kCell / 2, y = (b.y1 - e.base.y) * kCell + kCell / 2;
    const std::int64_t x2 = e.orient == Orient::H ? x + kCell : x, y2 = e.orient == Orient::V ? y - kCell : y;
    out << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"black\" stroke-width=\"2\"/>";
    out << "<text x=\"" << (x + x2) / 2 + 3 << "\" y=\"" << (y + y2) / 2 - 3 << "\">" << xml_escape(edge_label(items))
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tilesum
