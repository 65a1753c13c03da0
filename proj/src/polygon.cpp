#include "abseq/polygon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abseq {

int Segment::compare_slope(const Segment& other) const {
  long lhs = static_cast<long>(n) * other.height();
  long rhs = static_cast<long>(other.n) * height();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool is_valid_segment(const Segment& s) {
  if (s.m < 0 || s.n < 0 || s.m + s.n == 0)
    return false;
  return std::gcd(s.m, s.n) == 1;
}

NewtonPolygon::NewtonPolygon(std::vector<Segment> segments) : segs_(std::move(segments)) {}

int NewtonPolygon::height() const {
  int h = 0;
  for (const auto& s : segs_)
    h += s.height();
  return h;
}

int NewtonPolygon::dimension() const {
  int d = 0;
  for (const auto& s : segs_)
    d += s.n;
  return d;
}

std::string NewtonPolygon::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < segs_.size(); ++k) {
    if (k)
      out << '+';
    out << segs_[k].m << ',' << segs_[k].n;
  }
  return out.str();
}

NewtonPolygon make_polygon(std::vector<Segment> segments) {
  if (segments.empty())
    throw std::invalid_argument("polygon needs at least one segment");
  for (const auto& s : segments)
    if (!is_valid_segment(s))
      throw std::invalid_argument("segment (" + std::to_string(s.m) + "," + std::to_string(s.n) +
                                  ") is not a coprime pair");
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return a.compare_slope(b) > 0; });
  return NewtonPolygon(std::move(segments));
}

std::vector<Point> realize(const NewtonPolygon& xi) {
  std::vector<Point> pts{{0, 0}};
  const auto& segs = xi.segments();
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    Point p = pts.back();
    pts.push_back({p.x + it->height(), p.y + it->n});
  }
  return pts;
}

namespace {

// y-value at integer x as num/den, den > 0.
struct Height {
  long num;
  long den;
};

Height height_at(const std::vector<Point>& chain, int x) {
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const Point& a = chain[k - 1];
    const Point& b = chain[k];
    if (x <= b.x) {
      long w = b.x - a.x;
      if (w == 0)
        continue;
      return {static_cast<long>(a.y) * w + static_cast<long>(x - a.x) * (b.y - a.y), w};
    }
  }
  return {chain.back().y, 1};
}

bool at_least(Height a, Height b) { return a.num * b.den >= b.num * a.den; }

} // namespace

bool precedes(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (zeta.height() != xi.height() || zeta.dimension() != xi.dimension())
    throw std::invalid_argument("polygons " + zeta.to_string() + " and " + xi.to_string() +
                                " have different endpoints");
  auto cz = realize(zeta);
  auto cx = realize(xi);
  for (int x = 0; x <= xi.height(); ++x)
    if (!at_least(height_at(cz, x), height_at(cx, x)))
      return false;
  return true;
}

NewtonPolygon add(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<Segment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  return make_polygon(std::move(segs));
}

bool is_straddling(const NewtonPolygon& xi) {
  if (xi.size() != 2)
    return false;
  return 2 * xi[0].n > xi[0].height() && 2 * xi[1].n < xi[1].height();
}

namespace {

struct Vec {
  int a; // horizontal step
  int b; // vertical step
};

std::vector<Vec> primitive_vectors(int h) {
  std::vector<Vec> out;
  for (int a = 1; a <= h; ++a)
    for (int b = 0; b <= a; ++b)
      if (std::gcd(a, b) == 1)
        out.push_back({a, b});
  std::sort(out.begin(), out.end(),
            [](const Vec& p, const Vec& q) { return p.b * q.a < q.b * p.a; });
  return out;
}

void walk_chains(int h, int d, const std::vector<Point>* upper, const std::vector<Point>* lower,
                 std::vector<NewtonPolygon>& out) {
  const auto vecs = primitive_vectors(h);
  std::vector<Segment> current;
  auto in_band = [&](int x, Height y) {
    if (upper && !at_least(height_at(*upper, x), y))
      return false;
    if (lower && !at_least(y, height_at(*lower, x)))
      return false;
    return true;
  };
  std::function<void(int, int, std::size_t)> rec = [&](int x, int y, std::size_t first) {
    if (x == h) {
      if (y == d)
        out.push_back(make_polygon(current));
      return;
    }
    for (std::size_t k = first; k < vecs.size(); ++k) {
      const Vec& v = vecs[k];
      if (x + v.a > h || y + v.b > d)
        continue;
      // Later slopes are at least this one, so the remainder must be steep enough.
      if (static_cast<long>(d - y - v.b) * v.a < static_cast<long>(v.b) * (h - x - v.a))
        continue;
      bool ok = true;
      for (int t = 1; t <= v.a && ok; ++t)
        ok = in_band(x + t, {static_cast<long>(y) * v.a + static_cast<long>(t) * v.b, v.a});
      if (!ok)
        continue;
      current.push_back({v.a - v.b, v.b});
      rec(x + v.a, y + v.b, k);
      current.pop_back();
    }
  };
  rec(0, 0, 0);
}

} // namespace

std::vector<NewtonPolygon> enumerate_chains(int h, int d) {
  std::vector<NewtonPolygon> out;
  if (h < 1 || d < 0 || d > h)
    return out;
  walk_chains(h, d, nullptr, nullptr, out);
  return out;
}

std::vector<NewtonPolygon> chains_between(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  std::vector<NewtonPolygon> out;
  auto upper = realize(zeta);
  auto lower = realize(xi);
  walk_chains(xi.height(), xi.dimension(), &upper, &lower, out);
  return out;
}

std::uint64_t count_chains(int h, int d) {
  if (h < 1 || d < 0 || d > h)
    return 0;
  std::vector<std::vector<std::uint64_t>> dp(h + 1, std::vector<std::uint64_t>(d + 1, 0));
  dp[0][0] = 1;
  for (int a = 1; a <= h; ++a)
    for (int b = 0; b <= a; ++b) {
      if (std::gcd(a, b) != 1)
        continue;
      for (int x = a; x <= h; ++x)
        for (int y = b; y <= d; ++y)
          dp[x][y] += dp[x - a][y - b];
    }
  return dp[h][d];
}

bool is_saturated(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (!precedes(zeta, xi) || zeta == xi)
    throw std::invalid_argument(zeta.to_string() + " is not strictly below " + xi.to_string());
  for (const auto& eta : chains_between(zeta, xi))
    if (!(eta == zeta) && !(eta == xi))
      return false;
  return true;
}

std::vector<NewtonPolygon> straddling_polygons(int h) {
  std::vector<NewtonPolygon> out;
  for (int h1 = 1; h1 < h; ++h1) {
    int h2 = h - h1;
    for (int m1 = 0; m1 <= h1; ++m1) {
      int n1 = h1 - m1;
      if (2 * n1 <= h1 || std::gcd(m1, n1) != 1)
        continue;
      for (int n2 = 0; n2 <= h2; ++n2) {
        int m2 = h2 - n2;
        if (2 * n2 >= h2 || std::gcd(m2, n2) != 1)
          continue;
        out.push_back(make_polygon({{m1, n1}, {m2, n2}}));
      }
    }
  }
  return out;
}

} // namespace abseq
