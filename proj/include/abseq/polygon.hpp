#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abseq {

struct Segment {
  int m = 0;
  int n = 0;

  int height() const { return m + n; }
  // Slope comparison without division: n/h versus other.n/other.h.
  int compare_slope(const Segment& other) const;
  bool operator==(const Segment&) const = default;
};

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
};

class NewtonPolygon {
public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  const Segment& operator[](std::size_t k) const { return segs_[k]; }
  int height() const;
  int dimension() const;
  std::string to_string() const;

  bool operator==(const NewtonPolygon&) const = default;

private:
  std::vector<Segment> segs_;
};

bool is_valid_segment(const Segment& s);

// Sorts by non-increasing slope; throws std::invalid_argument on a bad segment.
NewtonPolygon make_polygon(std::vector<Segment> segments);

// Vertices of the lower convex chain, slopes non-decreasing left to right.
std::vector<Point> realize(const NewtonPolygon& xi);

// zeta lies on or above xi at every integer abscissa.
bool precedes(const NewtonPolygon& zeta, const NewtonPolygon& xi);

NewtonPolygon add(const NewtonPolygon& a, const NewtonPolygon& b);

// Two segments with slopes on either side of 1/2.
bool is_straddling(const NewtonPolygon& xi);

// All lower convex lattice chains from (0,0) to (h,d) with slopes in [0,1],
// optionally restricted to the band between upper (zeta) and lower (xi).
std::vector<NewtonPolygon> enumerate_chains(int h, int d);
std::vector<NewtonPolygon> chains_between(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// Independent count of all chains ending at (h,d).
std::uint64_t count_chains(int h, int d);

// Requires zeta strictly below xi in the order; throws otherwise.
bool is_saturated(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// Every straddling two-segment polygon of the given height.
std::vector<NewtonPolygon> straddling_polygons(int h);

} // namespace abseq
