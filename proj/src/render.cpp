#include "asymnorm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace asymnorm {

namespace {

constexpr double kCanvas = 480.0;

struct View {
  Rational lo[2], hi[2];
  double scale = 1.0;

  double sx(const Rational& x) const { return Rational(x - lo[0]).get_d() * scale; }
  double sy(const Rational& y) const { return Rational(hi[1] - y).get_d() * scale; }
  double width() const { return Rational(hi[0] - lo[0]).get_d() * scale; }
  double height() const { return Rational(hi[1] - lo[1]).get_d() * scale; }

  HRep box() const {
    return {{Vector::from_ints({1, 0}), hi[0], false},
            {Vector::from_ints({-1, 0}), -lo[0], false},
            {Vector::from_ints({0, 1}), hi[1], false},
            {Vector::from_ints({0, -1}), -lo[1], false}};
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Vertices of a bounded planar polygon in counter-clockwise order.
std::vector<Point> ordered_polygon(std::vector<Point> pts) {
  if (pts.size() < 3) return pts;
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0].get_d();
    cy += p[1].get_d();
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const double ta = std::atan2(a[1].get_d() - cy, a[0].get_d() - cx);
    const double tb = std::atan2(b[1].get_d() - cy, b[0].get_d() - cx);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return pts;
}

std::vector<Point> clipped(const HRep& rows, const View& view) {
  HRep all = rows;
  for (auto& h : all) h.strict = false;
  for (const auto& h : view.box()) all.push_back(h);
  const auto p = dd_convert_h_to_v(2, all);
  if (!p) return {};
  return ordered_polygon(p->vertices());
}

std::string points_attr(const std::vector<Point>& pts, const View& view) {
  std::string out;
  for (const auto& p : pts) {
    if (!out.empty()) out += ' ';
    out += num(view.sx(p[0])) + "," + num(view.sy(p[1]));
  }
  return out;
}

void shape(std::ostringstream& os, const std::vector<Point>& pts, const View& view,
           const std::string& style) {
  if (pts.empty()) return;
  if (pts.size() == 1) {
    os << "    <circle cx=\"" << num(view.sx(pts[0][0])) << "\" cy=\"" << num(view.sy(pts[0][1]))
       << "\" r=\"3\" " << style << "/>\n";
  } else if (pts.size() == 2) {
    os << "    <polyline points=\"" << points_attr(pts, view) << "\" " << style << "/>\n";
  } else {
    os << "    <polygon points=\"" << points_attr(pts, view) << "\" " << style << "/>\n";
  }
}

}  // namespace

std::string render_svg(const Problem& problem, const CompactnessCertificate& outcome) {
  if (problem.q.dim() != 2) throw UnsupportedDimension("render: only planar instances (dim 2)");
  const CompactInstance inst(problem.q, problem.k);
  const std::vector<Point> e = e_of_k(inst);

  View view;
  {
    std::vector<Point> pts = inst.closure().vertices();
    pts.insert(pts.end(), e.begin(), e.end());
    pts.push_back(Point(2));
    for (int i = 0; i < 2; ++i) {
      view.lo[i] = view.hi[i] = pts.front()[i];
      for (const auto& p : pts) {
        view.lo[i] = std::min(view.lo[i], p[i]);
        view.hi[i] = std::max(view.hi[i], p[i]);
      }
    }
    const Rational extent =
        std::max(Rational(view.hi[0] - view.lo[0]), Rational(view.hi[1] - view.lo[1]));
    const Rational pad = 1 + extent / 4;
    for (int i = 0; i < 2; ++i) {
      view.lo[i] -= pad;
      view.hi[i] += pad;
    }
    view.scale = kCanvas / std::max(Rational(view.hi[0] - view.lo[0]).get_d(),
                                    Rational(view.hi[1] - view.lo[1]).get_d());
  }

  Point anchor = outcome.center ? outcome.center->vertices().front()
                 : !e.empty()   ? e.front()
                                : inst.closure().vertices().front();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(view.width())
     << "\" height=\"" << num(view.height()) << "\" viewBox=\"0 0 " << num(view.width()) << " "
     << num(view.height()) << "\">\n";
  os << "  <title>verdict " << to_string(outcome.verdict) << "</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << num(view.width()) << "\" height=\""
     << num(view.height()) << "\" fill=\"white\"/>\n";

  os << "  <g id=\"closure\">\n";
  shape(os, clipped(problem.k.constraints(), view), view,
        "fill=\"#cfe0f5\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"");
  for (const auto& h : problem.k.constraints()) {
    if (!h.strict) continue;
    HRep face = problem.k.constraints();
    face.push_back({-h.normal, -h.rhs, false});
    shape(os, clipped(face, view), view,
          "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
  }
  os << "  </g>\n";

  os << "  <g id=\"theta\">\n";
  if (!inst.theta().generators.empty()) {
    HRep cone;
    for (const auto& a : problem.q.functionals()) cone.push_back({a, dot(a, anchor), false});
    shape(os, clipped(cone, view), view, "fill=\"#f6d7a7\" fill-opacity=\"0.5\" stroke=\"none\"");
    for (const auto& g : inst.theta().generators) {
      const Point tip = anchor + primitive(g);
      shape(os, {anchor, tip}, view, "fill=\"none\" stroke=\"#b7700f\" stroke-width=\"1.5\"");
    }
  }
  os << "  </g>\n";

  os << "  <g id=\"center\">\n";
  shape(os, ordered_polygon(e), view,
        "fill=\"#7fbf7f\" fill-opacity=\"0.6\" stroke=\"#2e7d32\" stroke-width=\"1.5\"");
  for (const auto& v : e) {
    os << "    <circle cx=\"" << num(view.sx(v[0])) << "\" cy=\"" << num(view.sy(v[1]))
       << "\" r=\"5\" fill=\"" << (member(problem.k, v) ? "#2e7d32" : "white")
       << "\" stroke=\"#2e7d32\" stroke-width=\"1.5\"><title>E(K) " << to_string(v)
       << "</title></circle>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace asymnorm
