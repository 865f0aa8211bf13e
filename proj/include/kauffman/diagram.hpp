#ifndef KAUFFMAN_DIAGRAM_HPP
#define KAUFFMAN_DIAGRAM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kauffman/errors.hpp"

namespace kauffman {

enum class Side : std::uint8_t { Left, Right };

// A boundary point: index i on the left is written i, on the right i'.
struct Point {
  Side side;
  int index;  // 1-based, 1..rank

  bool operator==(const Point&) const = default;
};

// Canonical point order: all left points (ascending), then all right points.
bool point_less(const Point& a, const Point& b);

enum class WireKind : std::uint8_t { LWire, RWire, TWire };

// A wire diagram of rank n: a perfect matching on the 2n boundary points
// together with a number of closed circles.
class WireDiagram {
 public:
  static WireDiagram make(int rank, std::span<const std::pair<Point, Point>> pairs,
                          long long circles = 0);
  static WireDiagram make(int rank, const std::vector<std::pair<Point, Point>>& pairs,
                          long long circles = 0);
  static WireDiagram identity(int rank);
  static WireDiagram hook(int rank, int i);    // joins i,i+1 and i',(i+1)'
  static WireDiagram circle(int rank);         // identity matching, one circle

  int rank() const { return rank_; }
  long long circles() const { return circles_; }

  Point partner(Point p) const;
  // The matching as a sorted pair list, each pair ordered left-before-right,
  // ascending index.
  std::vector<std::pair<Point, Point>> pairs() const;

  WireKind wire_kind(Point a, Point b) const;  // a,b must be matched to each other
  int t_wire_count() const;

  // Noncrossing when the 2n points are placed in the circular order
  // 1..n, n'..1'.
  bool is_planar() const;

  friend WireDiagram operator*(const WireDiagram& a, const WireDiagram& b);

  bool operator==(const WireDiagram&) const = default;
  // Total order on diagrams of any rank (rank, matching, circles) for
  // deterministic sorted output.
  bool operator<(const WireDiagram& other) const;

  std::size_t hash() const;

 private:
  WireDiagram(int rank, std::vector<std::int32_t> match, long long circles)
      : rank_(rank), circles_(circles), match_(std::move(match)) {}

  int slot(Point p) const;
  Point point_at(int slot) const;

  int rank_;
  long long circles_;
  // match_[s] is the slot matched to slot s; slots 0..n-1 are left points
  // 1..n, slots n..2n-1 are right points 1'..n'.
  std::vector<std::int32_t> match_;
};

struct WireDiagramHash {
  std::size_t operator()(const WireDiagram& d) const { return d.hash(); }
};

}  // namespace kauffman

#endif
