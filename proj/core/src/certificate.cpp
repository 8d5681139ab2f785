#include "tilesum/certificate.hpp"

#include <algorithm>
#include <map>

#include "tilesum/error.hpp"

namespace tilesum {

Certificate Certificate::canonical() const {
  Certificate out = *this;
  std::sort(out.placements.begin(), out.placements.end());
  return out;
}

InitialShape parse_initial_shape(const EdgeMap& f0) {
  auto fail = [](const std::string& why) -> InitialShape { throw Error(Errc::MalformedInput, why); };
  if (f0.is_zero()) return fail("input map is zero");

  std::map<std::int64_t, Color> row;
  std::int64_t arrow_x = 0;
  int arrows = 0;
  for (const auto& [key, v] : f0.entries()) {
    if (v != 1) return fail("input map value other than 1 at " + key.color.to_string());
    const auto& e = key.edge;
    if (e.orient == Orient::V) {
      if (key.color.kind != Color::Kind::ArrowRight || e.base.y != 0)
        return fail("unexpected vertical entry " + key.color.to_string());
      arrow_x = e.base.x;
      ++arrows;
      continue;
    }
    if (e.base.y != 1) return fail("horizontal entry outside row 1");
    if (!row.emplace(e.base.x, key.color).second) return fail("two colors on one row edge");
  }
  if (arrows != 1) return fail("input map needs exactly one right-arrow");

  InitialShape shape;
  shape.n = arrow_x - 1;
  if (shape.n < 1) return fail("right-arrow must sit right of the first input cell");
  if (static_cast<std::int64_t>(row.size()) != shape.n + 1) return fail("row 1 is not contiguous from 0 to n");
  for (std::int64_t x = 0; x <= shape.n; ++x) {
    auto it = row.find(x);
    if (it == row.end()) return fail("row 1 is not contiguous from 0 to n");
    shape.row.push_back(it->second);
  }
  if (shape.row.front().kind != Color::Kind::ArrowDown) return fail("row 1 must start with a down-arrow");
  for (std::size_t i = 1; i < shape.row.size(); ++i) {
    const auto k = shape.row[i].kind;
    if (k == Color::Kind::ArrowDown || k == Color::Kind::ArrowUp || k == Color::Kind::Blank0)
      return fail("row 1 holds a marker color inside the tape");
  }
  return shape;
}

bool verify_zero(const EdgeMap& f0, const Certificate& cert, const TilingSystem& ts) {
  EdgeMap sum = evaluate_placements(ts, cert.placements, f0.ring());
  sum += f0;
  return sum.is_zero();
}

namespace {

bool is_bottom_row_tile(const Tile& t) {
  return t.south.is_blank0() && t.west.kind == Color::Kind::ArrowRight;
}

std::string where(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace

std::string to_string(AuditRule r) {
  switch (r) {
    case AuditRule::OutsideRegion:
      return "outside-region";
    case AuditRule::BottomTileRaised:
      return "bottom-tile-raised";
    case AuditRule::PastLastColumn:
      return "past-last-column";
    case AuditRule::Stacked:
      return "stacked";
  }
  return "?";
}

std::vector<AuditFinding> audit_certificate(const Certificate& cert, const EdgeMap& f0) {
  const InitialShape shape = parse_initial_shape(f0);
  const std::int64_t n = shape.n, m = cert.width_m;
  std::vector<AuditFinding> out;
  std::map<Point, int> count;

  for (const auto& p : cert.placements) {
    const Point q = p.pos;
    const bool shaded = q.x >= 0 && q.y >= 0 && (q.y >= 1 || q.x >= n + 1);
    if (!shaded) out.push_back({AuditRule::OutsideRegion, q, "placement outside the shaded region at " + where(q)});
    if (q.y >= 1 && is_bottom_row_tile(p.tile))
      out.push_back({AuditRule::BottomTileRaised, q, "bottom-row tile above row 0 at " + where(q)});
    if (q.x > m) out.push_back({AuditRule::PastLastColumn, q, "placement right of column m at " + where(q)});
    if (q.y >= 1 && q.x >= 0 && q.x <= m) ++count[q];
  }
  for (const auto& [q, c] : count)
    if (c >= 2) out.push_back({AuditRule::Stacked, q, std::to_string(c) + " tiles stacked at " + where(q)});
  return out;
}

}  // namespace tilesum
