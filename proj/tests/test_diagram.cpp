#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "kauffman/diagram.hpp"
#include "kauffman/errors.hpp"

using namespace kauffman;

namespace {

Point Lp(int i) { return Point{Side::Left, i}; }
Point Rp(int i) { return Point{Side::Right, i}; }

WireDiagram crossing_nine() {
  return WireDiagram::make(9,
                           std::vector<std::pair<Point, Point>>{
                               {Lp(1), Rp(5)},
                               {Lp(6), Rp(9)},
                               {Lp(8), Rp(8)},
                               {Lp(2), Lp(4)},
                               {Lp(3), Lp(5)},
                               {Lp(7), Lp(9)},
                               {Rp(1), Rp(2)},
                               {Rp(3), Rp(4)},
                               {Rp(6), Rp(7)},
                           },
                           3);
}

WireDiagram planar_nine() {
  return WireDiagram::make(9,
                           std::vector<std::pair<Point, Point>>{
                               {Lp(7), Rp(3)},
                               {Lp(1), Lp(2)},
                               {Lp(3), Lp(6)},
                               {Lp(4), Lp(5)},
                               {Lp(8), Lp(9)},
                               {Rp(1), Rp(2)},
                               {Rp(5), Rp(6)},
                               {Rp(7), Rp(8)},
                               {Rp(4), Rp(9)},
                           },
                           1);
}

WireDiagram random_diagram(std::mt19937& rng, int n) {
  std::vector<Point> points;
  for (int i = 1; i <= n; ++i) {
    points.push_back(Lp(i));
    points.push_back(Rp(i));
  }
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    pairs.emplace_back(points[i], points[i + 1]);
  }
  long long circles = std::uniform_int_distribution<int>(0, 2)(rng);
  return WireDiagram::make(n, pairs, circles);
}

}  // namespace

TEST_CASE("construction validates") {
  WireDiagram h1 = WireDiagram::make(
      2, std::vector<std::pair<Point, Point>>{{Lp(1), Lp(2)}, {Rp(1), Rp(2)}}, 0);
  CHECK(h1 == WireDiagram::hook(2, 1));

  CHECK_THROWS_AS(WireDiagram::make(2,
                                    std::vector<std::pair<Point, Point>>{
                                        {Lp(1), Lp(2)}, {Lp(2), Rp(1)}},
                                    0),
                  NotPerfectMatching);
  CHECK_THROWS_AS(WireDiagram::make(1, std::vector<std::pair<Point, Point>>{{Lp(1), Rp(1)}}, 0),
                  BadRank);
  CHECK_THROWS_AS(WireDiagram::make(
                      2, std::vector<std::pair<Point, Point>>{{Lp(1), Lp(1)}, {Rp(1), Rp(2)}}, 0),
                  NotPerfectMatching);
  CHECK_NOTHROW(crossing_nine());
}

TEST_CASE("wire classification and t-counts") {
  WireDiagram d = crossing_nine();
  CHECK(d.wire_kind(Lp(2), Lp(4)) == WireKind::LWire);
  CHECK(d.wire_kind(Rp(1), Rp(2)) == WireKind::RWire);
  CHECK(d.wire_kind(Lp(8), Rp(8)) == WireKind::TWire);
  CHECK_THROWS_AS(d.wire_kind(Lp(1), Lp(2)), InvalidArgument);

  CHECK(d.t_wire_count() == 3);
  CHECK(WireDiagram::identity(5).t_wire_count() == 5);
  CHECK(WireDiagram::hook(4, 1).t_wire_count() == 2);
}

TEST_CASE("partner lookup and canonical pair order") {
  WireDiagram d = crossing_nine();
  CHECK(d.partner(Lp(1)) == Rp(5));
  CHECK(d.partner(Rp(5)) == Lp(1));
  auto pairs = d.pairs();
  CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                       [](const auto& a, const auto& b) { return point_less(a.first, b.first); }));
  for (const auto& [a, b] : pairs) {
    CHECK(point_less(a, b));
  }
}

TEST_CASE("hook relations on diagrams") {
  for (int n = 2; n <= 6; ++n) {
    WireDiagram c = WireDiagram::circle(n);
    for (int i = 1; i < n; ++i) {
      WireDiagram hi = WireDiagram::hook(n, i);
      CHECK(hi * hi == c * hi);
      CHECK(hi * hi == hi * c);
      for (int j = 1; j < n; ++j) {
        WireDiagram hj = WireDiagram::hook(n, j);
        if (std::abs(i - j) >= 2) {
          CHECK(hi * hj == hj * hi);
        }
        if (std::abs(i - j) == 1) {
          CHECK(hi * hj * hi == hi);
        }
      }
    }
  }
}

TEST_CASE("squared hook gains a circle") {
  WireDiagram h1 = WireDiagram::hook(4, 1);
  WireDiagram sq = h1 * h1;
  CHECK(sq.circles() == 1);
  CHECK(WireDiagram::make(4, sq.pairs(), 0) == h1);
}

TEST_CASE("glued product of two nine-strand diagrams") {
  WireDiagram product = crossing_nine() * planar_nine();
  WireDiagram expected = WireDiagram::make(9,
                                           std::vector<std::pair<Point, Point>>{
                                               {Lp(1), Rp(3)},
                                               {Lp(2), Lp(4)},
                                               {Lp(3), Lp(5)},
                                               {Lp(6), Lp(8)},
                                               {Lp(7), Lp(9)},
                                               {Rp(1), Rp(2)},
                                               {Rp(4), Rp(9)},
                                               {Rp(5), Rp(6)},
                                               {Rp(7), Rp(8)},
                                           },
                                           5);
  CHECK(product == expected);
}

TEST_CASE("rank mismatch rejected") {
  CHECK_THROWS_AS(WireDiagram::identity(3) * WireDiagram::identity(4), RankMismatch);
}

TEST_CASE("planarity") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(WireDiagram::hook(n, i).is_planar());
    }
  }
  CHECK_FALSE(crossing_nine().is_planar());
  CHECK(planar_nine().is_planar());
  CHECK_FALSE((crossing_nine() * planar_nine()).is_planar());
  // crossing t-wires
  CHECK_FALSE(WireDiagram::make(
                  2, std::vector<std::pair<Point, Point>>{{Lp(1), Rp(2)}, {Lp(2), Rp(1)}}, 0)
                  .is_planar());
}

TEST_CASE("identity is neutral") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    WireDiagram d = random_diagram(rng, n);
    WireDiagram id = WireDiagram::identity(n);
    CHECK(id * d == d);
    CHECK(d * id == d);
    CHECK(id * id == id);
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    WireDiagram a = random_diagram(rng, n);
    WireDiagram b = random_diagram(rng, n);
    WireDiagram c = random_diagram(rng, n);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("circles never drop and parity is preserved") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    WireDiagram a = random_diagram(rng, n);
    WireDiagram b = random_diagram(rng, n);
    WireDiagram ab = a * b;
    CHECK(ab.circles() >= a.circles() + b.circles());
    CHECK(a.t_wire_count() % 2 == n % 2);
    CHECK(ab.t_wire_count() % 2 == n % 2);
  }
}

TEST_CASE("planar diagrams are closed under multiplication") {
  std::mt19937 rng(14);
  int checked = 0;
  while (checked < 100) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    WireDiagram a = random_diagram(rng, n);
    WireDiagram b = random_diagram(rng, n);
    if (!a.is_planar() || !b.is_planar()) {
      continue;
    }
    ++checked;
    CHECK((a * b).is_planar());
  }
}

TEST_CASE("circle generator commutes with hooks") {
  for (int n = 2; n <= 6; ++n) {
    WireDiagram c = WireDiagram::circle(n);
    CHECK(c.t_wire_count() == n);
    CHECK(c.circles() == 1);
    for (int i = 1; i < n; ++i) {
      CHECK(c * WireDiagram::hook(n, i) == WireDiagram::hook(n, i) * c);
    }
  }
}
