#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "zerofree/core.hpp"
#include "zerofree/errors.hpp"

namespace zerofree {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Truncated half-strip { a <= Re(s) <= b, t_min <= Im(s) <= t_max }.
/// b and t_max may be kUnbounded; such regions must be truncated before
/// any boundary is built. Certification proper uses t_min >= 0 (the
/// half-strip K[a,b]); the argument-principle operations accept general
/// rectangles, including t_min < 0.
struct StripRegion {
  double a;
  double b;
  double t_min;
  double t_max;

  StripRegion(double a_, double b_, double t_min_, double t_max_)
      : a(a_), b(b_), t_min(t_min_), t_max(t_max_) {
    if (!(a < b)) throw InvalidRegion("region requires a < b");
    if (!(t_min < t_max)) throw InvalidRegion("region requires t_min < t_max");
    if (std::isinf(a) || std::isinf(t_min))
      throw InvalidRegion("left abscissa and lower height must be finite");
  }

  bool truncated() const { return std::isfinite(b) && std::isfinite(t_max); }
  double width() const { return b - a; }
  double height() const { return t_max - t_min; }
  double diameter() const { return std::hypot(width(), height()); }

  Complex corner_bl() const { return {a, t_min}; }
  Complex corner_br() const { return {b, t_min}; }
  Complex corner_tr() const { return {b, t_max}; }
  Complex corner_tl() const { return {a, t_max}; }

  bool contains(const Complex& s) const {
    return a <= s.real() && s.real() <= b && t_min <= s.imag() && s.imag() <= t_max;
  }
  bool strictly_contains(const Complex& s) const {
    return a < s.real() && s.real() < b && t_min < s.imag() && s.imag() < t_max;
  }
};

/// One directed straight piece of a closed contour.
struct PathSegment {
  Complex start;
  Complex end;
  int samples;

  double length() const { return modulus(end - start); }
  Complex direction() const { return end - start; }
  // k-th uniform sample, k in [0, samples); segment start included,
  // segment end excluded (it is the next segment's start).
  Complex sample(int k) const {
    return start + (static_cast<double>(k) / samples) * (end - start);
  }
};

/// Closed, counterclockwise, piecewise-straight contour. Counterclockwise
/// orientation (interior on the left) is what gives the winding integral
/// its sign.
struct BoundaryPath {
  std::vector<PathSegment> segments;

  bool closed() const {
    if (segments.empty()) return false;
    return segments.back().end == segments.front().start;
  }
  double perimeter() const {
    double p = 0.0;
    for (const auto& seg : segments) p += seg.length();
    return p;
  }
  int total_samples() const {
    int n = 0;
    for (const auto& seg : segments) n += seg.samples;
    return n;
  }
  std::vector<Complex> all_samples() const {
    std::vector<Complex> out;
    out.reserve(total_samples());
    for (const auto& seg : segments)
      for (int k = 0; k < seg.samples; ++k) out.push_back(seg.sample(k));
    return out;
  }
};

/// Four counterclockwise segments (bottom, right, top, left) around a
/// truncated region; sample counts proportional to segment length.
inline BoundaryPath build_boundary(const StripRegion& region, double samples_per_unit,
                                   int min_samples_per_segment = 1) {
  if (!region.truncated())
    throw UnboundedRegion("boundary of an unbounded region; truncate first");
  auto count = [&](double len) {
    const int n = static_cast<int>(std::ceil(len * samples_per_unit));
    return std::max(min_samples_per_segment, std::max(1, n));
  };
  BoundaryPath path;
  const Complex bl = region.corner_bl(), br = region.corner_br();
  const Complex tr = region.corner_tr(), tl = region.corner_tl();
  path.segments.push_back({bl, br, count(region.width())});
  path.segments.push_back({br, tr, count(region.height())});
  path.segments.push_back({tr, tl, count(region.width())});
  path.segments.push_back({tl, bl, count(region.height())});
  return path;
}

/// Closed polygonal path through the given vertices, in order.
inline BoundaryPath make_polygon_path(const std::vector<Complex>& vertices,
                                      int samples_per_segment = 16) {
  BoundaryPath path;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Complex& p = vertices[i];
    const Complex& q = vertices[(i + 1) % vertices.size()];
    path.segments.push_back({p, q, samples_per_segment});
  }
  return path;
}

}  // namespace zerofree
