#include "taxicab/atlas.hpp"

#include <atomic>
#include <thread>

#include "taxicab/special_cases.hpp"

namespace taxicab {

Point2 AtlasGrid::at(int row, int col) const {
  Rational sx = (x1 - x0) / (n - 1), sy = (y1 - y0) / (n - 1);
  return {x0 + col * sx, y1 - row * sy};
}

char class_char(ConicClass c) {
  switch (c) {
    case ConicClass::kEllipse: return 'E';
    case ConicClass::kParabola: return 'P';
    case ConicClass::kHyperbola: return 'H';
  }
  return '?';
}

namespace {

// Rows are dealt round-robin; each row is written by exactly one worker.
template <typename RowFn>
void for_each_row(int rows, int workers, RowFn fn) {
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([=, &fn] {
      for (int r = w; r < rows; r += workers) fn(r);
    });
  }
  for (auto& t : pool) t.join();
}

void check_grid(const AtlasGrid& grid) {
  if (grid.n < 2 || grid.x1 <= grid.x0 || grid.y1 <= grid.y0) {
    throw geometry_error(ErrorCode::kInvalidArgument, "atlas grid");
  }
}

}  // namespace

std::vector<std::string> atlas_sweep(const PlaneParams& plane, const Rational& kappa,
                                     const AtlasGrid& grid, int workers) {
  check_grid(grid);
  if (kappa <= 0) throw geometry_error(ErrorCode::kNonPositiveKappa, to_string(kappa));
  std::vector<std::string> raster(grid.n, std::string(grid.n, ' '));
  for_each_row(grid.n, workers, [&](int r) {
    for (int c = 0; c < grid.n; ++c) {
      Point2 a = grid.at(r, c);
      LineParams line = normalize_line({a.x1, a.x2, 1});
      ConeSpec cone{plane, line, kappa};
      raster[r][c] = cone.N() == 0 ? kDegenerateCell : class_char(classify(cone));
    }
  });
  return raster;
}

UKappaSweep ukappa_sweep(const Rational& kappa, const AtlasGrid& grid, int workers) {
  check_grid(grid);
  UKappaSweep out;
  out.raster.assign(grid.n, std::string(grid.n, ' '));
  std::atomic<long> bad{0};
  for_each_row(grid.n, workers, [&](int r) {
    for (int c = 0; c < grid.n; ++c) {
      UKappaCheck chk = u_kappa_classify_check(kappa, grid.at(r, c));
      out.raster[r][c] = class_char(chk.klass);
      if (!chk.consistent) ++bad;
    }
  });
  out.inconsistencies = bad.load();
  return out;
}

}  // namespace taxicab
