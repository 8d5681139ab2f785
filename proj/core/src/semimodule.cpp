#include "tilesum/semimodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilesum/error.hpp"

namespace tilesum {

std::vector<std::string> SemimoduleInstance::check(bool nonzero_generators) const {
  std::vector<std::string> out;
  auto check_one = [&](const ModuleElement& e, const std::string& what) {
    if (!(e.ring() == ring)) out.push_back(what + " is over " + e.ring().to_string() + ", not " + ring.to_string());
    if (e.rank() != rank) out.push_back(what + " has rank " + std::to_string(e.rank()));
  };
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_one(generators[i], "generator " + std::to_string(i));
    if (nonzero_generators && generators[i].is_zero()) out.push_back("generator " + std::to_string(i) + " is zero");
  }
  check_one(target, "target");
  return out;
}

ModuleElement combine(const SemimoduleInstance& inst, const Witness& w) {
  ModuleElement sum(inst.ring, inst.rank);
  for (const auto& t : w) {
    if (t.generator >= inst.generators.size())
      throw Error(Errc::BadIndex, "witness names generator " + std::to_string(t.generator));
    sum.add_scaled(inst.generators[t.generator], t.shift, t.coeff);
  }
  return sum;
}

bool verify_witness(const SemimoduleInstance& inst, const Witness& w) { return combine(inst, w) == inst.target; }

std::vector<Color> color_index(const TilingSystem& ts) { return {ts.colors.begin(), ts.colors.end()}; }

SemimoduleInstance tiling_to_instance(const TilingSystem& ts, const EdgeMap& f0) {
  const auto colors = color_index(ts);
  SemimoduleInstance inst;
  inst.ring = f0.ring();
  inst.rank = 2 * colors.size();
  for (const auto& t : ts.tiles) inst.generators.push_back(from_edgemap(tile_eval(t, f0.ring()), colors));
  inst.target = from_edgemap(negate(f0), colors);
  return inst;
}

Witness certificate_to_witness(const TilingSystem& ts, const Certificate& cert) {
  std::map<std::pair<Point, std::size_t>, Integer> counts;
  for (const auto& p : cert.placements) {
    auto idx = ts.find(p.tile);
    if (!idx) throw Error(Errc::UnknownTile, "certificate tile is not in the system");
    counts[{p.pos, *idx}] += 1;
  }
  Witness w;
  for (const auto& [k, c] : counts) w.push_back({k.first, k.second, c});
  return w;
}

Window certificate_window(const Certificate& cert) { return {0, 0, cert.width_m, cert.height_n}; }

namespace {

// Decides shifts one at a time in row-major order. After the generators at
// shift s are chosen, every residual entry that no later shift can reach
// (its "last shift" is s) must be zero. Within a shift the search branches
// on the generators that hit the first nonzero such entry, then tries
// further generators whose contributions cancel among themselves.
class SweepSearch {
 public:
  SweepSearch(const SemimoduleInstance& inst, const Window& window, std::int64_t cap, bool distinct,
              SearchLimits limits)
      : inst_(inst), window_(window), cap_(cap), distinct_(distinct), limits_(limits), residual_(inst.target) {
    by_idx_.resize(inst.rank);
    for (std::size_t g = 0; g < inst.generators.size(); ++g)
      for (const auto& [k, v] : inst.generators[g].entries()) by_idx_[k.idx].push_back({g, k.pos, v});
    for (auto& hits : by_idx_)
      std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.offset < b.offset; });
    if (!window.empty())
      for (std::int64_t y = window.y0; y <= window.y1; ++y)
        for (std::int64_t x = window.x0; x <= window.x1; ++x) shifts_.push_back({x, y});
  }

  std::optional<Witness> run() {
    if (residual_.is_zero()) return Witness{};
    if (cap_ < 1 || shifts_.empty()) return std::nullopt;
    for (const auto& [k, v] : residual_.entries())
      if (!last_shift(k)) return std::nullopt;
    if (!sweep(0)) return std::nullopt;
    Witness w;
    for (const auto& [u, c] : used_) w.push_back({u.first, u.second, Integer(c)});
    return w;
  }

 private:
  struct Hit {
    std::size_t gen;
    Point offset;
    Integer value;
  };

  // Entries finalized at one shift, and who can still change them there.
  struct Plan {
    std::vector<ModuleKey> keys;
    std::map<ModuleKey, std::vector<std::pair<std::size_t, Integer>>> hitters;
  };

  // Latest shift in the window that can still change entry k.
  std::optional<Point> last_shift(const ModuleKey& k) const {
    const auto& hits = by_idx_[k.idx];
    for (auto it = hits.begin(); it != hits.end(); ++it)
      if (window_.contains(k.pos - it->offset)) return k.pos - it->offset;
    return std::nullopt;
  }

  const Plan& plan(std::size_t i) {
    if (auto it = plans_.find(i); it != plans_.end()) return it->second;
    Plan p;
    const Point s = shifts_[i];
    std::set<ModuleKey> keys;
    for (std::size_t g = 0; g < inst_.generators.size(); ++g) {
      for (const auto& [k, v] : inst_.generators[g].entries()) {
        const ModuleKey key{s + k.pos, k.idx};
        if (last_shift(key) != s) continue;
        keys.insert(key);
        p.hitters[key].push_back({g, v});
      }
    }
    p.keys.assign(keys.begin(), keys.end());
    return plans_.emplace(i, std::move(p)).first->second;
  }

  bool over_budget() { return limits_.max_nodes && ++nodes_ > limits_.max_nodes; }

  void place(Point s, std::size_t g, int sign) {
    residual_.add_scaled(inst_.generators[g], s, -sign);
    const std::pair<Point, std::size_t> u{s, g};
    if (sign > 0) {
      ++used_[u];
      ++here_;
    } else {
      if (--used_[u] == 0) used_.erase(u);
      --here_;
    }
  }

  bool can_add(Point s, std::size_t g) const {
    if (distinct_) return here_ == 0;
    auto it = used_.find({s, g});
    return it == used_.end() || it->second < cap_;
  }

  bool sweep(std::size_t i) {
    if (i == shifts_.size()) return residual_.is_zero();
    if (over_budget()) return false;
    if (!failed_.insert({i, residual_.entries()}).second) return false;
    std::set<std::vector<std::pair<std::size_t, std::int64_t>>> tried;
    here_ = 0;
    return choose(i, plan(i), 0, tried);
  }

  std::vector<std::pair<std::size_t, std::int64_t>> chosen_here(Point s) const {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (auto it = used_.lower_bound({s, 0}); it != used_.end() && it->first.first == s; ++it)
      out.push_back({it->first.second, it->second});
    return out;
  }

  bool choose(std::size_t i, const Plan& p, std::size_t next_extra,
              std::set<std::vector<std::pair<std::size_t, std::int64_t>>>& tried) {
    const Point s = shifts_[i];
    if (!tried.insert(chosen_here(s)).second) return false;
    if (over_budget()) return false;

    const ModuleKey* open = nullptr;
    for (const auto& k : p.keys)
      if (residual_.get(k.pos, k.idx) != 0) {
        open = &k;
        break;
      }

    if (open) {
      const Integer r = residual_.get(open->pos, open->idx);
      for (const auto& [g, v] : p.hitters.at(*open)) {
        // Over Z some contribution must have the residual's sign.
        if (inst_.ring.is_integers() && (v > 0) != (r > 0)) continue;
        if (!can_add(s, g)) continue;
        place(s, g, 1);
        if (choose(i, p, next_extra, tried)) return true;
        place(s, g, -1);
      }
      return false;
    }

    const std::size_t saved_here = here_;
    if (sweep(i + 1)) return true;
    here_ = saved_here;

    // Further generators at s whose finalized entries cancel out.
    for (std::size_t g = next_extra; g < inst_.generators.size(); ++g) {
      if (!can_add(s, g)) continue;
      place(s, g, 1);
      if (choose(i, p, g, tried)) return true;
      place(s, g, -1);
    }
    return false;
  }

  const SemimoduleInstance& inst_;
  Window window_;
  std::int64_t cap_;
  bool distinct_;
  SearchLimits limits_;
  ModuleElement residual_;
  std::vector<std::vector<Hit>> by_idx_;
  std::vector<Point> shifts_;
  std::map<std::size_t, Plan> plans_;
  std::map<std::pair<Point, std::size_t>, std::int64_t> used_;
  std::int64_t here_ = 0;  // generators placed at the current shift
  std::set<std::pair<std::size_t, ModuleElement::Entries>> failed_;
  std::size_t nodes_ = 0;
};

void require_consistent(const SemimoduleInstance& inst, bool nonzero) {
  auto problems = inst.check(nonzero);
  if (problems.empty()) return;
  const bool ring_issue = std::any_of(problems.begin(), problems.end(),
                                      [](const std::string& s) { return s.find(" is over ") != std::string::npos; });
  throw Error(ring_issue ? Errc::RingMismatch : Errc::RankMismatch, problems.front());
}

}  // namespace

std::optional<Witness> member_bounded(const SemimoduleInstance& inst, const Window& window, std::int64_t max_coeff,
                                      SearchLimits limits) {
  require_consistent(inst, false);
  return SweepSearch(inst, window, max_coeff, false, limits).run();
}

std::optional<Witness> subset_sum_bounded(const SemimoduleInstance& inst, const Window& window, SearchLimits limits) {
  if (inst.ring.is_integers()) throw Error(Errc::RingMismatch, "subset sums are searched over Z/n only");
  require_consistent(inst, true);
  return SweepSearch(inst, window, 1, true, limits).run();
}

}  // namespace tilesum
