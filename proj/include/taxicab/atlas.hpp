#pragma once

#include <string>
#include <vector>

#include "taxicab/cone_model.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

struct AtlasGrid {
  Rational x0 = -2, y0 = -2, x1 = 2, y1 = 2;
  int n = 101;

  // Cell (row, col); row 0 is the top edge y1.
  Point2 at(int row, int col) const;
};

char class_char(ConicClass c);
inline constexpr char kDegenerateCell = 'D';

// Classification of (a1, a2, 1) over the grid for a fixed plane and kappa.
std::vector<std::string> atlas_sweep(const PlaneParams& plane, const Rational& kappa,
                                     const AtlasGrid& grid, int workers = 1);

struct UKappaSweep {
  std::vector<std::string> raster;
  long inconsistencies = 0;
};

// Classification of the cones with A = a = (A1, A2, 1), checked cell by cell
// against exact U_kappa membership.
UKappaSweep ukappa_sweep(const Rational& kappa, const AtlasGrid& grid, int workers = 1);

}  // namespace taxicab
