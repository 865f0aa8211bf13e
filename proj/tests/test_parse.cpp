#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "kauffman/jones.hpp"
#include "kauffman/parse.hpp"

using namespace kauffman;

namespace {

std::vector<std::string> letter_names(const Word& w) {
  std::vector<std::string> out;
  for (Letter x : w.letters()) {
    out.emplace_back(x.name());
  }
  return out;
}

std::size_t position_of(std::string_view text, auto parse) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at offset") != std::string::npos);
    return e.position;
  }
  FAIL("expected a parse error for ", text);
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("word grammar") {
  CHECK(letter_names(parse_word("xyx")) == std::vector<std::string>{"x", "y", "x"});
  CHECK(letter_names(parse_word("ab1ab1")) == std::vector<std::string>{"a", "b1", "a", "b1"});
  CHECK(letter_names(parse_word("x10y02")) == std::vector<std::string>{"x10", "y02"});
  CHECK(letter_names(parse_word("x^3y2x")) ==
        std::vector<std::string>{"x", "x", "x", "y2", "x"});
  CHECK(letter_names(parse_word(" x \t y ")) == std::vector<std::string>{"x", "y"});
  CHECK(parse_word("x^2y") == parse_word("xxy"));
}

TEST_CASE("identity grammar accepts both separators") {
  Identity plain = parse_identity("x^2yx = xyx^2");
  Identity dotted = parse_identity("x^2yx ≐ xyx^2");
  CHECK(plain == dotted);
  CHECK(plain.lhs == parse_word("xxyx"));
  CHECK(print_identity(plain) == "xxyx = xyxx");
}

TEST_CASE("printing is canonical and parse round-trips") {
  CHECK(print_word(parse_word("x^3y2x")) == "xxxy2x");
  CHECK(print_word(parse_word("h1h2")) == "h1h2");

  std::mt19937 rng(55);
  std::uniform_int_distribution<int> len(1, 14);
  std::uniform_int_distribution<int> base(0, 3);
  std::uniform_int_distribution<int> suffix(-1, 20);
  auto random_word = [&] {
    std::vector<Letter> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      std::string name(1, "wxyz"[base(rng)]);
      int s = suffix(rng);
      if (s >= 0) {
        name += std::to_string(s);
      }
      v.push_back(Letter::of(name));
    }
    return Word(v);
  };
  for (int trial = 0; trial < 10000; ++trial) {
    Identity id{random_word(), random_word()};
    CHECK(parse_identity(print_identity(id)) == id);
  }
}

TEST_CASE("parse errors carry the offending position") {
  auto word = [](std::string_view t) { return parse_word(t); };
  auto identity = [](std::string_view t) { return parse_identity(t); };
  CHECK(position_of("", word) == 0);
  CHECK(position_of("X", word) == 0);
  CHECK(position_of("3x", word) == 0);
  CHECK(position_of("x^", word) == 2);
  CHECK(position_of("x^y", word) == 2);
  CHECK(position_of("x=y", word) == 1);
  CHECK(position_of("x^0", word) == 3);  // the repetition leaves nothing behind
  CHECK(position_of("xy", identity) == 2);
  CHECK(position_of("x == y", identity) == 3);
  CHECK(position_of("x = ", identity) == 4);
  CHECK(position_of("x ^2", identity) == 2);
}

TEST_CASE("generator words") {
  GeneratorWord w = parse_generator_word("h1h2^2ch3d");
  CHECK(print_generator_word(w) == "h1h2h2ch3d");
  CHECK(w.size() == 6);
  CHECK(parse_generator_word("c^3d") == parse_generator_word("cccd"));

  auto gen = [](std::string_view t) { return parse_generator_word(t); };
  CHECK(position_of("h0", gen) == 1);
  CHECK(position_of("h", gen) == 1);
  CHECK(position_of("x", gen) == 0);
  CHECK(position_of("ch^2", gen) == 2);
  CHECK(position_of("", gen) == 0);
}

TEST_CASE("diagram literals round-trip") {
  WireDiagram hook = JonesElement::hook(4, 1).diagram();
  std::string text = to_literal(hook);
  CHECK(text == "{n: 4, pairs: [[1,2],[3,\"3'\"],[4,\"4'\"],[\"1'\",\"2'\"]], circles: 0}");
  CHECK(parse_diagram_literal(text) == hook);

  // key order and pair order are free on input, fixed on output
  WireDiagram same = parse_diagram_literal(
      "{circles: 0, pairs: [[\"1'\",\"2'\"],[4,\"4'\"],[2,1],[\"3'\",3]], n: 4}");
  CHECK(same == hook);
  CHECK(to_literal(same) == text);

  WireDiagram circles = parse_diagram_literal("{n: 2, pairs: [[1,2],[\"1'\",\"2'\"]], circles: 3}");
  CHECK(circles.circles() == 3);
  CHECK(to_literal(circles) == "{n: 2, pairs: [[1,2],[\"1'\",\"2'\"]], circles: 3}");

  // circles may be omitted
  CHECK(parse_diagram_literal("{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]]}") ==
        WireDiagram::identity(2));
}

TEST_CASE("coordinate literals") {
  KauffmanElement k(JonesElement::hook(3, 2), 2);
  std::string text = to_literal(k);
  CHECK(text.find("circles: 2") != std::string::npos);
  CHECK(parse_diagram_literal(text).circles() == 2);

  ExtKauffmanElement down(JonesElement::identity(2), -2);
  CHECK(to_literal(down) == "{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]], circles: -2}");
}

TEST_CASE("diagram literal errors") {
  auto lit = [](std::string_view t) { return parse_diagram_literal(t); };
  CHECK(position_of("{n: 2}", lit) == 6);
  CHECK(position_of("{pairs: [[1,2],[\"1'\",\"2'\"]]}", lit) == 28);
  CHECK(position_of("{n: 2, pairs: [[1,2],[\"1'\",\"2'\"]], circles: -1}", lit) == 44);
  CHECK(position_of("[1,2]", lit) == 0);
  CHECK(position_of("{n: 2, pairs: [[1,2,3],[\"1'\",\"2'\"]]}", lit) == 19);

  CHECK_THROWS_AS(parse_diagram_literal("{n: 2, pairs: [[1,2]]}"), NotPerfectMatching);
  CHECK_THROWS_AS(parse_diagram_literal("{n: 2, pairs: [[1,2],[1,\"2'\"]]}"),
                  NotPerfectMatching);
  CHECK_THROWS_AS(parse_diagram_literal("{n: 2, pairs: [[1,3],[\"1'\",\"2'\"]]}"), Error);
  CHECK_THROWS_AS(parse_diagram_literal("{n: 0, pairs: []}"), Error);
}
