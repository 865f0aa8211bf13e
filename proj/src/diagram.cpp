#include "kauffman/diagram.hpp"

#include <algorithm>

namespace kauffman {

bool point_less(const Point& a, const Point& b) {
  if (a.side != b.side) {
    return a.side == Side::Left;
  }
  return a.index < b.index;
}

namespace {

void check_rank(int rank) {
  if (rank < 2) {
    throw BadRank("rank must be at least 2, got " + std::to_string(rank));
  }
}

std::string point_text(const Point& p) {
  std::string s = std::to_string(p.index);
  if (p.side == Side::Right) {
    s += '\'';
  }
  return s;
}

}  // namespace

int WireDiagram::slot(Point p) const {
  if (p.index < 1 || p.index > rank_) {
    throw InvalidArgument("point index " + std::to_string(p.index) +
                          " out of range for rank " + std::to_string(rank_));
  }
  return p.side == Side::Left ? p.index - 1 : rank_ + p.index - 1;
}

Point WireDiagram::point_at(int s) const {
  return s < rank_ ? Point{Side::Left, s + 1} : Point{Side::Right, s - rank_ + 1};
}

WireDiagram WireDiagram::make(int rank, std::span<const std::pair<Point, Point>> pairs,
                              long long circles) {
  check_rank(rank);
  if (circles < 0) {
    throw InvalidArgument("circle count must be nonnegative");
  }
  std::vector<std::int32_t> match(2 * static_cast<std::size_t>(rank), -1);
  WireDiagram d(rank, std::move(match), circles);
  for (const auto& [p, q] : pairs) {
    int sp = d.slot(p);
    int sq = d.slot(q);
    if (sp == sq) {
      throw NotPerfectMatching("point " + point_text(p) + " matched to itself");
    }
    if (d.match_[sp] != -1) {
      throw NotPerfectMatching("point " + point_text(p) + " matched more than once");
    }
    if (d.match_[sq] != -1) {
      throw NotPerfectMatching("point " + point_text(q) + " matched more than once");
    }
    d.match_[sp] = sq;
    d.match_[sq] = sp;
  }
  for (std::size_t s = 0; s < d.match_.size(); ++s) {
    if (d.match_[s] == -1) {
      throw NotPerfectMatching("point " + point_text(d.point_at(static_cast<int>(s))) +
                               " is unmatched");
    }
  }
  return d;
}

WireDiagram WireDiagram::make(int rank, const std::vector<std::pair<Point, Point>>& pairs,
                              long long circles) {
  return make(rank, std::span<const std::pair<Point, Point>>(pairs), circles);
}

WireDiagram WireDiagram::identity(int rank) {
  check_rank(rank);
  std::vector<std::int32_t> match(2 * static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    match[i] = rank + i;
    match[rank + i] = i;
  }
  return WireDiagram(rank, std::move(match), 0);
}

WireDiagram WireDiagram::hook(int rank, int i) {
  check_rank(rank);
  if (i < 1 || i >= rank) {
    throw InvalidArgument("hook index must satisfy 1 <= i <= rank-1, got " + std::to_string(i));
  }
  WireDiagram d = identity(rank);
  d.match_[i - 1] = i;
  d.match_[i] = i - 1;
  d.match_[rank + i - 1] = rank + i;
  d.match_[rank + i] = rank + i - 1;
  return d;
}

WireDiagram WireDiagram::circle(int rank) {
  WireDiagram d = identity(rank);
  d.circles_ = 1;
  return d;
}

Point WireDiagram::partner(Point p) const { return point_at(match_[slot(p)]); }

std::vector<std::pair<Point, Point>> WireDiagram::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(rank_);
  for (int s = 0; s < 2 * rank_; ++s) {
    if (match_[s] > s) {
      out.emplace_back(point_at(s), point_at(match_[s]));
    }
  }
  // slot order already is the canonical point order
  return out;
}

WireKind WireDiagram::wire_kind(Point a, Point b) const {
  if (match_[slot(a)] != slot(b)) {
    throw InvalidArgument("points " + point_text(a) + " and " + point_text(b) +
                          " are not matched to each other");
  }
  if (a.side == b.side) {
    return a.side == Side::Left ? WireKind::LWire : WireKind::RWire;
  }
  return WireKind::TWire;
}

int WireDiagram::t_wire_count() const {
  int count = 0;
  for (int s = 0; s < rank_; ++s) {
    count += (match_[s] >= rank_);
  }
  return count;
}

bool WireDiagram::is_planar() const {
  // circular position of slot s: left i at i-1, right i at 2n-i
  auto pos = [this](int s) { return s < rank_ ? s : 3 * rank_ - 1 - s; };
  std::vector<std::pair<int, int>> chords;
  for (int s = 0; s < 2 * rank_; ++s) {
    if (match_[s] > s) {
      int p = pos(s);
      int q = pos(match_[s]);
      chords.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      auto [p1, q1] = chords[a];
      auto [p2, q2] = chords[b];
      bool inside2 = p1 < p2 && p2 < q1;
      bool inside2q = p1 < q2 && q2 < q1;
      if (inside2 != inside2q) {
        return false;
      }
    }
  }
  return true;
}

WireDiagram operator*(const WireDiagram& a, const WireDiagram& b) {
  if (a.rank_ != b.rank_) {
    throw RankMismatch("cannot multiply diagrams of ranks " + std::to_string(a.rank_) +
                       " and " + std::to_string(b.rank_));
  }
  const int n = a.rank_;
  std::vector<std::int32_t> match(2 * static_cast<std::size_t>(n), -1);
  // middle node u (0-based) glues a's right point u+1 to b's left point u+1
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  // Walk from a boundary slot of the product to the other end of its wire.
  // Product slots: 0..n-1 are a's left points, n..2n-1 are b's right points.
  auto trace = [&](int start) {
    bool in_a = start < n;
    int s = in_a ? a.match_[start] : b.match_[start];
    while (true) {
      if (in_a) {
        if (s < n) {
          return s;  // a's left boundary
        }
        int u = s - n;
        seen[u] = true;
        in_a = false;
        s = b.match_[u];
      } else {
        if (s >= n) {
          return s;  // b's right boundary
        }
        seen[s] = true;
        in_a = true;
        s = a.match_[n + s];
      }
    }
  };

  for (int s = 0; s < 2 * n; ++s) {
    if (match[s] != -1) {
      continue;
    }
    int t = trace(s);
    match[s] = t;
    match[t] = s;
  }

  // Unvisited middle nodes lie on closed loops alternating between r-wires
  // of a and l-wires of b; each loop contributes one circle.
  long long cycles = 0;
  for (int u = 0; u < n; ++u) {
    if (seen[u]) {
      continue;
    }
    ++cycles;
    int v = u;
    while (!seen[v]) {
      seen[v] = true;
      int w = a.match_[n + v] - n;
      seen[w] = true;
      v = b.match_[w];
    }
  }
  return WireDiagram(n, std::move(match), a.circles_ + b.circles_ + cycles);
}

bool WireDiagram::operator<(const WireDiagram& other) const {
  if (rank_ != other.rank_) {
    return rank_ < other.rank_;
  }
  if (match_ != other.match_) {
    return match_ < other.match_;
  }
  return circles_ < other.circles_;
}

std::size_t WireDiagram::hash() const {
  std::size_t h = std::hash<long long>{}(circles_) + 0x9e3779b97f4a7c15ULL * rank_;
  for (std::int32_t m : match_) {
    h ^= static_cast<std::size_t>(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kauffman
