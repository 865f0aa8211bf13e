#ifndef KAUFFMAN_JONES_HPP
#define KAUFFMAN_JONES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kauffman/diagram.hpp"

namespace kauffman {

// A planar, circle-free wire diagram.
class JonesElement {
 public:
  explicit JonesElement(WireDiagram d);
  static JonesElement identity(int rank);
  static JonesElement hook(int rank, int i);

  const WireDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int t_wire_count() const { return diagram_.t_wire_count(); }

  bool operator==(const JonesElement&) const = default;
  bool operator<(const JonesElement& other) const { return diagram_ < other.diagram_; }
  std::size_t hash() const { return diagram_.hash(); }

 private:
  WireDiagram diagram_;
};

struct JonesElementHash {
  std::size_t operator()(const JonesElement& x) const { return x.hash(); }
};

struct JonesProduct {
  JonesElement result;
  long long removed;  // circles erased by the product
};

JonesProduct jmultiply(const JonesElement& a, const JonesElement& b);

// The cutting map: defined for even rank >= 4 and at most two t-wires.
// Fixes diagrams without t-wires; with two t-wires, joins their left ends
// by an l-wire and their right ends by an r-wire.
JonesElement cut(const JonesElement& x);

// Whether every r-wire {i',j'} of g occurs as an l-wire {i,j} of d.
bool matches(const JonesElement& g, const JonesElement& d);

// All elements of J_n (closure of the hooks plus identity), sorted
// canonically.  Supported for 2 <= n <= 8.
std::vector<JonesElement> enumerate_jones(int rank);

// n-th Catalan number, n <= 30.
unsigned long long catalan(int n);

// Finite multiplication table for J_n, 2 <= n <= 8.
class JonesMonoid {
 public:
  explicit JonesMonoid(int rank);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const JonesElement& element(int idx) const { return elements_[idx]; }
  const std::vector<JonesElement>& elements() const { return elements_; }
  int index_of(const JonesElement& x) const;
  int identity_index() const { return identity_; }
  int product(int a, int b) const { return table_[a * size() + b].first; }
  long long removed(int a, int b) const { return table_[a * size() + b].second; }

 private:
  int rank_;
  int identity_;
  std::vector<JonesElement> elements_;
  std::vector<std::pair<int, long long>> table_;
};

// The 14 elements of J_4 carry the conventional hook-word names ("id",
// "h1", "h3h2h1", ...).  Two-t-wire elements sit on a 3x3 grid and
// t-wire-free elements on a 2x2 grid; rows are determined by l-wires and
// columns by r-wires.
const std::vector<std::pair<std::string, JonesElement>>& j4_named_elements();
std::string j4_name(const JonesElement& x);
JonesElement j4_by_name(std::string_view name);
std::optional<std::pair<int, int>> j4_two_wire_position(const JonesElement& x);
std::optional<std::pair<int, int>> j4_zero_wire_position(const JonesElement& x);

}  // namespace kauffman

#endif
