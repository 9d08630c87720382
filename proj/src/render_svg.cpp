#include "taxicab/render_svg.hpp"

#include <cstdio>
#include <sstream>

namespace taxicab {

std::string format_decimal(const Rational& q) {
  if (q == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

std::optional<std::pair<Point2, Point2>> clip_to_box(const Point2& p, const Point2& d,
                                                     std::optional<Rational> lo,
                                                     std::optional<Rational> hi,
                                                     const Bbox& box) {
  // Liang-Barsky on each axis, exactly.
  auto clip_axis = [&](const Rational& origin, const Rational& rate, const Rational& a,
                       const Rational& b) {
    if (rate == 0) return origin >= a && origin <= b;
    Rational t0 = (a - origin) / rate, t1 = (b - origin) / rate;
    if (t0 > t1) std::swap(t0, t1);
    if (!lo || *lo < t0) lo = t0;
    if (!hi || *hi > t1) hi = t1;
    return true;
  };
  if (!clip_axis(p.x1, d.x1, box.x0, box.x1)) return std::nullopt;
  if (!clip_axis(p.x2, d.x2, box.y0, box.y1)) return std::nullopt;
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::pair{p + *lo * d, p + *hi * d};
}

namespace {

class SvgWriter {
 public:
  SvgWriter(const Bbox& box, int width_px) : box_(box) {
    Rational w = box.x1 - box.x0, h = box.y1 - box.y0;
    stroke_ = w / 300;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_px
         << "\" height=\"" << format_decimal(Rational(width_px) * h / w) << "\" viewBox=\""
         << format_decimal(box.x0) << " " << format_decimal(-box.y1) << " " << format_decimal(w)
         << " " << format_decimal(h) << "\">\n";
  }

  void line(const Point2& a, const Point2& b, const std::string& color, const Rational& width,
            bool dashed) {
    out_ << "<line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\""
         << y(b) << "\" stroke=\"" << color << "\" stroke-width=\"" << format_decimal(width)
         << "\"";
    if (dashed) out_ << " stroke-dasharray=\"" << format_decimal(4 * width) << "\"";
    out_ << "/>\n";
  }

  void path(const Point2& a, const Point2& b, const std::string& color) {
    out_ << "<path d=\"M " << x(a) << " " << y(a) << " L " << x(b) << " " << y(b)
         << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
         << format_decimal(2 * stroke_) << "\"/>\n";
  }

  void dot(const Point2& p, const std::string& color) {
    out_ << "<circle cx=\"" << x(p) << "\" cy=\"" << y(p) << "\" r=\""
         << format_decimal(3 * stroke_) << "\" fill=\"" << color << "\"/>\n";
  }

  void square(const Point2& p, const std::string& color) {
    Rational s = 3 * stroke_;
    out_ << "<rect x=\"" << format_decimal(p.x1 - s) << "\" y=\"" << format_decimal(-p.x2 - s)
         << "\" width=\"" << format_decimal(2 * s) << "\" height=\"" << format_decimal(2 * s)
         << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
         << format_decimal(stroke_) << "\"/>\n";
  }

  void full_line(const Line2& g, const std::string& color, const Rational& width, bool dashed) {
    Point2 d{-g.c2, g.c1};
    Point2 p = g.c2 != 0 ? Point2{0, -g.c0 / g.c2} : Point2{-g.c0 / g.c1, 0};
    if (auto c = clip_to_box(p, d, std::nullopt, std::nullopt, box_)) {
      if (!(c->first == c->second)) line(c->first, c->second, color, width, dashed);
    }
  }

  const Rational& stroke() const { return stroke_; }
  const Bbox& box() const { return box_; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::string x(const Point2& p) const { return format_decimal(p.x1); }
  std::string y(const Point2& p) const { return format_decimal(-p.x2); }

  Bbox box_;
  Rational stroke_;
  std::ostringstream out_;
};

}  // namespace

std::string render_section(const ConicSection& section, const RenderSpec& spec) {
  Bbox box = spec.viewport ? *spec.viewport : section_bbox(section);
  if (box.x1 <= box.x0 || box.y1 <= box.y0) {
    throw geometry_error(ErrorCode::kInvalidArgument, "degenerate viewport");
  }
  SvgWriter svg(box, spec.width_px);
  if (spec.strip && (spec.strip->A1 != 0 || spec.strip->A2 != 0)) {
    for (int s : {1, -1}) {
      svg.full_line(Line2::make(spec.strip->A1, spec.strip->A2, -s * spec.strip->half_width),
                    spec.strip_color, svg.stroke(), true);
    }
  }
  if (spec.show_ref_lines) {
    for (const RefLine& r : section.ref_lines) svg.full_line(r.line, spec.ref_color, svg.stroke(), false);
  }
  if (spec.show_trace && section.trace) {
    svg.full_line(*section.trace, spec.trace_color, svg.stroke(), true);
  }
  for (const Piece& p : section.pieces) {
    std::optional<std::pair<Point2, Point2>> c;
    if (p.is_segment()) {
      c = clip_to_box(p.as_segment().a, p.direction(), Rational(0), Rational(1), box);
    } else {
      c = clip_to_box(p.as_ray().base, p.direction(), Rational(0), std::nullopt, box);
    }
    if (c && !(c->first == c->second)) svg.path(c->first, c->second, spec.section_color);
  }
  for (const Vertex& v : section.vertices) {
    if (v.location.is_finite()) svg.dot(v.location.point(), spec.vertex_color);
  }
  if (spec.show_aux) {
    for (const AuxPoint& w : section.aux_points) {
      if (w.active && w.location.is_finite()) svg.square(w.location.point(), spec.aux_color);
    }
  }
  return svg.finish();
}

}  // namespace taxicab
