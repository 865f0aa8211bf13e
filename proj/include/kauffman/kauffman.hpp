#ifndef KAUFFMAN_KAUFFMAN_HPP
#define KAUFFMAN_KAUFFMAN_HPP

#include <map>
#include <string_view>
#include <vector>

#include "kauffman/jones.hpp"
#include "kauffman/words.hpp"

namespace kauffman {

// An element of the extended Kauffman monoid in coordinates: a Jones
// diagram together with an integer circle count.  Products compose the
// diagrams and add the circle counts plus the circles the composition
// erases.
class ExtKauffmanElement {
 public:
  ExtKauffmanElement(JonesElement jones, long long circles)
      : jones_(std::move(jones)), circles_(circles) {}
  static ExtKauffmanElement identity(int rank);
  // name is one of "c", "d", "h1".."h9"
  static ExtKauffmanElement generator(int rank, std::string_view name);

  const JonesElement& jones() const { return jones_; }
  long long circles() const { return circles_; }
  int rank() const { return jones_.rank(); }

  friend ExtKauffmanElement operator*(const ExtKauffmanElement& a, const ExtKauffmanElement& b);

  bool operator==(const ExtKauffmanElement&) const = default;
  bool operator<(const ExtKauffmanElement& other) const {
    return jones_ < other.jones_ || (jones_ == other.jones_ && circles_ < other.circles_);
  }

 private:
  JonesElement jones_;
  long long circles_;
};

// Same coordinates with the circle count restricted to be nonnegative
// (no generator d).
class KauffmanElement {
 public:
  KauffmanElement(JonesElement jones, long long circles);
  static KauffmanElement identity(int rank);

  const JonesElement& jones() const { return jones_; }
  long long circles() const { return circles_; }
  int rank() const { return jones_.rank(); }
  ExtKauffmanElement ext() const { return {jones_, circles_}; }

  friend KauffmanElement operator*(const KauffmanElement& a, const KauffmanElement& b);

  bool operator==(const KauffmanElement&) const = default;
  bool operator<(const KauffmanElement& other) const {
    return ext() < other.ext();
  }

 private:
  JonesElement jones_;
  long long circles_;
};

ExtKauffmanElement kmultiply(const ExtKauffmanElement& a, const ExtKauffmanElement& b);
KauffmanElement kmultiply(const KauffmanElement& a, const KauffmanElement& b);

// A word in the generators c, d, h1..h9.
struct GeneratorSymbol {
  char kind;  // 'c', 'd' or 'h'
  int index;  // hook index when kind == 'h', else 0
  bool operator==(const GeneratorSymbol&) const = default;
};
using GeneratorWord = std::vector<GeneratorSymbol>;

ExtKauffmanElement evaluate(const GeneratorWord& w, int rank);

// Letters to monoid elements; all values must share one rank.
using GeneratorAssignment = std::map<Letter, ExtKauffmanElement>;

ExtKauffmanElement evaluate(const Word& w, const GeneratorAssignment& phi);

// The cutting map on rank-4 coordinates: a two-t-wire element loses one
// circle and its diagram is cut; others are fixed.
ExtKauffmanElement cut(const ExtKauffmanElement& x);

// Evaluates a word in {c, h1, h2} over the rank-4 generators.
KauffmanElement embed_k3_in_k4(const GeneratorWord& w);

}  // namespace kauffman

#endif
