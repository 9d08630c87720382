#pragma once

#include <optional>
#include <string>

#include "taxicab/cone_model.hpp"
#include "taxicab/oracle.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

struct RenderSpec {
  std::optional<Bbox> viewport;  // default: section_bbox
  int width_px = 600;
  std::string section_color = "#1f3a93";
  std::string trace_color = "#c0392b";
  std::string ref_color = "#b0b0b0";
  std::string vertex_color = "#000000";
  std::string aux_color = "#27ae60";
  std::string strip_color = "#e67e22";
  bool show_ref_lines = true;
  bool show_trace = true;
  bool show_aux = true;
  std::optional<CharStrip> strip;
};

// Decimal text with 12 significant digits; the only rational-to-decimal
// conversion in the library.
std::string format_decimal(const Rational& q);

// Portion of {p + t d : t in [lo, hi]} inside the box; unbounded ends when
// lo or hi is empty.
std::optional<std::pair<Point2, Point2>> clip_to_box(const Point2& p, const Point2& d,
                                                     std::optional<Rational> lo,
                                                     std::optional<Rational> hi,
                                                     const Bbox& box);

std::string render_section(const ConicSection& section, const RenderSpec& spec = {});

}  // namespace taxicab
