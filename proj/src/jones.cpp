#include "kauffman/jones.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace kauffman {

JonesElement::JonesElement(WireDiagram d) : diagram_(std::move(d)) {
  if (diagram_.circles() != 0) {
    throw InvalidArgument("a Jones element has no circles, got " +
                          std::to_string(diagram_.circles()));
  }
  if (!diagram_.is_planar()) {
    throw InvalidArgument("a Jones element must be planar");
  }
}

JonesElement JonesElement::identity(int rank) {
  return JonesElement(WireDiagram::identity(rank));
}

JonesElement JonesElement::hook(int rank, int i) {
  return JonesElement(WireDiagram::hook(rank, i));
}

JonesProduct jmultiply(const JonesElement& a, const JonesElement& b) {
  WireDiagram product = a.diagram() * b.diagram();
  long long removed = product.circles();
  JonesElement result(WireDiagram::make(product.rank(), product.pairs(), 0));
  return {std::move(result), removed};
}

JonesElement cut(const JonesElement& x) {
  const int n = x.rank();
  if (n % 2 != 0) {
    throw OddRank("the cutting map needs even rank, got " + std::to_string(n));
  }
  if (n < 4) {
    throw BadRank("the cutting map needs rank >= 4, got " + std::to_string(n));
  }
  const int t = x.t_wire_count();
  if (t > 2) {
    throw TooManyTWires("the cutting map allows at most two t-wires, got " +
                        std::to_string(t));
  }
  if (t == 0) {
    return x;
  }
  std::vector<int> lefts, rights;
  std::vector<std::pair<Point, Point>> kept;
  for (const auto& [p, q] : x.diagram().pairs()) {
    if (p.side != q.side) {
      lefts.push_back(p.index);
      rights.push_back(q.index);
    } else {
      kept.emplace_back(p, q);
    }
  }
  kept.push_back({Point{Side::Left, lefts[0]}, Point{Side::Left, lefts[1]}});
  kept.push_back({Point{Side::Right, rights[0]}, Point{Side::Right, rights[1]}});
  return JonesElement(WireDiagram::make(n, kept, 0));
}

bool matches(const JonesElement& g, const JonesElement& d) {
  if (g.rank() != d.rank()) {
    throw RankMismatch("matches needs diagrams of equal rank");
  }
  for (const auto& [p, q] : g.diagram().pairs()) {
    if (p.side == Side::Right && q.side == Side::Right) {
      if (d.diagram().partner(Point{Side::Left, p.index}) != Point{Side::Left, q.index}) {
        return false;
      }
    }
  }
  return true;
}

std::vector<JonesElement> enumerate_jones(int rank) {
  if (rank < 2 || rank > 8) {
    throw BadRank("enumeration is supported for ranks 2..8, got " + std::to_string(rank));
  }
  std::vector<JonesElement> generators;
  for (int i = 1; i < rank; ++i) {
    generators.push_back(JonesElement::hook(rank, i));
  }
  std::unordered_map<JonesElement, bool, JonesElementHash> found;
  std::deque<JonesElement> queue;
  queue.push_back(JonesElement::identity(rank));
  found.emplace(queue.back(), true);
  while (!queue.empty()) {
    JonesElement x = std::move(queue.front());
    queue.pop_front();
    for (const JonesElement& g : generators) {
      JonesElement y = jmultiply(x, g).result;
      if (found.emplace(y, true).second) {
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<JonesElement> out;
  out.reserve(found.size());
  for (const auto& [x, _] : found) {
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long catalan(int n) {
  if (n < 0 || n > 30) {
    throw InvalidArgument("catalan(n) supported for 0 <= n <= 30");
  }
  unsigned long long c = 1;
  for (int i = 0; i < n; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return c;
}

JonesMonoid::JonesMonoid(int rank) : rank_(rank), elements_(enumerate_jones(rank)) {
  const int m = size();
  identity_ = index_of(JonesElement::identity(rank));
  table_.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      JonesProduct p = jmultiply(elements_[a], elements_[b]);
      table_[a * m + b] = {index_of(p.result), p.removed};
    }
  }
}

int JonesMonoid::index_of(const JonesElement& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) {
    throw InvalidArgument("element does not belong to J_" + std::to_string(rank_));
  }
  return static_cast<int>(it - elements_.begin());
}

namespace {

JonesElement eval_hook_word(std::initializer_list<int> hooks) {
  JonesElement x = JonesElement::identity(4);
  for (int i : hooks) {
    x = jmultiply(x, JonesElement::hook(4, i)).result;
  }
  return x;
}

struct J4Tables {
  std::vector<std::pair<std::string, JonesElement>> named;
  std::unordered_map<JonesElement, std::string, JonesElementHash> names;
};

const J4Tables& j4_tables() {
  static const J4Tables tables = [] {
    J4Tables t;
    auto add = [&t](const std::string& name, std::initializer_list<int> hooks) {
      JonesElement x = eval_hook_word(hooks);
      t.named.emplace_back(name, x);
      t.names.emplace(x, name);
    };
    add("id", {});
    add("h3", {3});
    add("h3h2", {3, 2});
    add("h3h2h1", {3, 2, 1});
    add("h2h3", {2, 3});
    add("h2", {2});
    add("h2h1", {2, 1});
    add("h1h2h3", {1, 2, 3});
    add("h1h2", {1, 2});
    add("h1", {1});
    add("h1h3", {1, 3});
    add("h1h3h2", {1, 3, 2});
    add("h2h1h3", {2, 1, 3});
    add("h2h1h3h2", {2, 1, 3, 2});
    return t;
  }();
  return tables;
}

// The row of an l-wire pattern (and symmetrically the column of an r-wire
// pattern).  Two-t-wire diagrams have a single l-wire {a,a+1}: rows run
// {3,4}, {2,3}, {1,2}.  T-wire-free diagrams have rows {{1,2},{3,4}} and
// {{1,4},{2,3}}.
int side_coordinate(const JonesElement& x, Side side) {
  std::vector<std::pair<int, int>> wires;
  for (const auto& [p, q] : x.diagram().pairs()) {
    if (p.side == side && q.side == side) {
      wires.emplace_back(p.index, q.index);
    }
  }
  if (wires.size() == 1) {
    return 4 - wires[0].first;
  }
  return wires[0].second == 2 ? 1 : 2;
}

}  // namespace

const std::vector<std::pair<std::string, JonesElement>>& j4_named_elements() {
  return j4_tables().named;
}

std::string j4_name(const JonesElement& x) {
  auto it = j4_tables().names.find(x);
  if (it == j4_tables().names.end()) {
    throw InvalidArgument("element does not belong to J_4");
  }
  return it->second;
}

JonesElement j4_by_name(std::string_view name) {
  for (const auto& [n, x] : j4_tables().named) {
    if (n == name) {
      return x;
    }
  }
  throw InvalidArgument("unknown J_4 element name: " + std::string(name));
}

std::optional<std::pair<int, int>> j4_two_wire_position(const JonesElement& x) {
  if (x.rank() != 4) {
    throw BadRank("grid positions are defined for rank 4");
  }
  if (x.t_wire_count() != 2) {
    return std::nullopt;
  }
  return std::make_pair(side_coordinate(x, Side::Left), side_coordinate(x, Side::Right));
}

std::optional<std::pair<int, int>> j4_zero_wire_position(const JonesElement& x) {
  if (x.rank() != 4) {
    throw BadRank("grid positions are defined for rank 4");
  }
  if (x.t_wire_count() != 0) {
    return std::nullopt;
  }
  return std::make_pair(side_coordinate(x, Side::Left), side_coordinate(x, Side::Right));
}

}  // namespace kauffman
