#pragma once

#include "probelab/probes.hpp"

namespace probelab {

enum class CellStatus { kDisplaced, kNotDisplaced };

struct ScanCell {
  RatVec point;
  CellStatus status = CellStatus::kNotDisplaced;
  std::optional<Probe> witness;
};

/// Interior sample points with coordinates of denominator m, each labelled by
/// the deterministic probe search. Cells are in lexicographic point order.
struct ScanGrid {
  Polytope polytope;
  int resolution = 0;
  long bound = 0;
  std::vector<ScanCell> cells;
};

/// Evaluates find_displacing_probe on every interior grid point; the
/// per-point work runs on a worker pool (capped by PROBELAB_THREADS) and the
/// output is independent of the worker count.
ScanGrid scan(const Polytope& p, int resolution, long bound);

/// CSV with header "u1,...,un,status,dir"; exact rationals; direction as
/// space-separated integers, empty when not displaced. Byte-stable.
std::string export_csv(const ScanGrid& grid);

/// Deterministic SVG for 2-D scans: polygon outline plus one fixed-size
/// square per sample, #cccccc displaced / #cc0000 not, 512-unit viewport
/// with a 16-unit margin. Throws for dimension != 2.
std::string render_svg(const ScanGrid& grid);

}  // namespace probelab
