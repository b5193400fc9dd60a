#include "probelab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace probelab {

namespace {

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PROBELAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw);
  }
  return hw;
}

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
  unsigned workers = std::min<size_t>(worker_count(), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Decimal rendering of an exact rational, truncated to fixed precision.
std::string decimal(const Rat& q, int digits = 4) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = q * Rat(scale);
  Int whole = rat_floor(scaled);
  bool neg = whole < 0;
  Int a = abs(whole);
  Int ip = a / scale, fp = a % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

// Vertices in counterclockwise boundary order (2-D).
std::vector<RatVec> boundary_cycle(const Polytope& p) {
  std::vector<std::pair<RatVec, RatVec>> segs;  // edge endpoint pairs
  for (const auto& e : p.edges())
    segs.push_back({p.vertices()[e.v0], p.vertices()[e.v1]});
  std::vector<RatVec> cycle;
  cycle.push_back(segs[0].first);
  RatVec cur = segs[0].second;
  std::vector<bool> used(segs.size(), false);
  used[0] = true;
  for (size_t step = 1; step < segs.size(); ++step) {
    cycle.push_back(cur);
    for (size_t i = 0; i < segs.size(); ++i) {
      if (used[i]) continue;
      if (segs[i].first == cur) {
        cur = segs[i].second;
        used[i] = true;
        break;
      }
      if (segs[i].second == cur) {
        cur = segs[i].first;
        used[i] = true;
        break;
      }
    }
  }
  return cycle;
}

}  // namespace

ScanGrid scan(const Polytope& p, int resolution, long bound) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  ScanGrid grid;
  grid.polytope = p;
  grid.resolution = resolution;
  grid.bound = bound;

  LatVec lo, hi;
  p.vertex_box(lo, hi);
  std::vector<RatVec> samples;
  LatVec cur(p.dim());
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == p.dim()) {
      RatVec q(p.dim());
      for (int i = 0; i < p.dim(); ++i) q[i] = rat(cur[i], Int(resolution));
      if (p.strictly_contains(q)) samples.push_back(q);
      return;
    }
    for (Int v = lo[coord] * resolution; v <= hi[coord] * resolution; ++v) {
      cur[coord] = v;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);

  auto directions = candidate_directions(p.dim(), bound);
  grid.cells.resize(samples.size());
  parallel_for(samples.size(), [&](size_t i) {
    auto report = find_displacing_probe(p, samples[i], directions, bound);
    grid.cells[i] = {samples[i],
                     report.displaced ? CellStatus::kDisplaced
                                      : CellStatus::kNotDisplaced,
                     report.witness};
  });
  return grid;
}

std::string export_csv(const ScanGrid& grid) {
  std::ostringstream os;
  for (int i = 0; i < grid.polytope.dim(); ++i) os << "u" << (i + 1) << ",";
  os << "status,dir\n";
  for (const auto& cell : grid.cells) {
    for (const auto& c : cell.point) os << to_string(c) << ",";
    os << (cell.status == CellStatus::kDisplaced ? "displaced"
                                                 : "not_displaced")
       << ",";
    if (cell.witness) {
      const auto& d = cell.witness->direction;
      for (size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string render_svg(const ScanGrid& grid) {
  const Polytope& p = grid.polytope;
  if (p.dim() != 2) throw std::invalid_argument("svg rendering is 2-D only");
  const int view = 512, margin = 16;
  LatVec lo, hi;
  p.vertex_box(lo, hi);
  Rat w = Rat(hi[0] - lo[0]), h = Rat(hi[1] - lo[1]);
  Rat span = std::max(w, h);
  Rat scale = Rat(view - 2 * margin) / span;
  auto px = [&](const Rat& x) -> Rat {
    return Rat(margin) + scale * (x - Rat(lo[0]));
  };
  auto py = [&](const Rat& y) -> Rat {
    return Rat(view) - (Rat(margin) + scale * (y - Rat(lo[1])));
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view
     << "\" height=\"" << view << "\" viewBox=\"0 0 " << view << " " << view
     << "\">\n";
  os << "<polygon points=\"";
  auto cycle = boundary_cycle(p);
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (i) os << " ";
    os << decimal(px(cycle[i][0])) << "," << decimal(py(cycle[i][1]));
  }
  os << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  Rat cell = scale / Rat(grid.resolution);
  Rat side = cell * rat(3, 5);
  for (const auto& c : grid.cells) {
    const char* color =
        c.status == CellStatus::kDisplaced ? "#cccccc" : "#cc0000";
    os << "<rect x=\"" << decimal(px(c.point[0]) - side / 2) << "\" y=\""
       << decimal(py(c.point[1]) - side / 2) << "\" width=\"" << decimal(side)
       << "\" height=\"" << decimal(side) << "\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace probelab
