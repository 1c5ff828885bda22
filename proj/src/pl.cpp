#include "sublat/pl.hpp"

#include <algorithm>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

bool collinear(const std::pair<Rational, Rational>& a,
               const std::pair<Rational, Rational>& b,
               const std::pair<Rational, Rational>& c) {
  return (b.second - a.second) * (c.first - b.first) ==
         (c.second - b.second) * (b.first - a.first);
}

}  // namespace

PLBijection::PLBijection(Rational lo, Rational hi,
                         std::vector<std::pair<Rational, Rational>> points)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw precondition_error("pl: interval needs lo < hi");
  if (points.size() < 2)
    throw precondition_error("pl: at least the two endpoint breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].first < points[i].first))
      throw precondition_error("pl: breakpoint abscissas must increase");
    if (!(points[i - 1].second < points[i].second))
      throw precondition_error("pl: breakpoint values must increase");
  }
  if (points.front() != std::pair(lo_, lo_) ||
      points.back() != std::pair(hi_, hi_))
    throw precondition_error("pl: endpoints must be fixed");
  points_.push_back(points.front());
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (collinear(points_.back(), points[i], points[i + 1])) continue;
    points_.push_back(points[i]);
  }
  points_.push_back(points.back());
}

PLBijection PLBijection::identity(const Rational& lo, const Rational& hi) {
  return PLBijection(lo, hi, {{lo, lo}, {hi, hi}});
}

Rational PLBijection::evaluate(const Rational& x) const {
  if (x < lo_ || x > hi_)
    throw precondition_error("pl: evaluation outside the interval");
  auto it = std::upper_bound(
      points_.begin(), points_.end(), x,
      [](const Rational& v, const std::pair<Rational, Rational>& p) {
        return v < p.first;
      });
  if (it == points_.end()) return points_.back().second;
  const auto& b = *it;
  const auto& a = *(it - 1);
  return a.second +
         (x - a.first) * (b.second - a.second) / (b.first - a.first);
}

PLBijection pl_compose(const PLBijection& f, const PLBijection& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi())
    throw precondition_error("pl: composition needs a common interval");
  PLBijection gi = pl_invert(g);
  std::vector<Rational> xs;
  for (const auto& p : g.breakpoints()) xs.push_back(p.first);
  for (const auto& p : f.breakpoints()) xs.push_back(gi.evaluate(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.emplace_back(x, f.evaluate(g.evaluate(x)));
  return PLBijection(f.lo(), f.hi(), std::move(pts));
}

PLBijection pl_invert(const PLBijection& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pts.emplace_back(p.second, p.first);
  return PLBijection(f.lo(), f.hi(), std::move(pts));
}

}  // namespace sublat
