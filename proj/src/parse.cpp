#include "kauffman/parse.hpp"

#include <optional>
#include <vector>

namespace kauffman {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return text[pos++]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) {
      ++pos;
    }
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }

  bool try_take(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_uint(const char* what) {
    if (peek() < '0' || peek() > '9') {
      throw ParseError(std::string("expected ") + what, pos);
    }
    long long value = 0;
    while (peek() >= '0' && peek() <= '9') {
      value = value * 10 + (take() - '0');
      if (value > 1000000000LL) {
        throw ParseError("number too large", pos);
      }
    }
    return value;
  }

  // Matches the dotted equality sign U+2250 (0xE2 0x89 0x90).
  bool try_take_doteq() {
    if (text.substr(pos, 3) == "\xe2\x89\x90") {
      pos += 3;
      return true;
    }
    return false;
  }
};

// One grammar letter with optional '^' repetition appended to out.
void parse_letter(Cursor& cur, std::vector<Letter>& out) {
  std::size_t start = cur.pos;
  char c = cur.peek();
  if (c < 'a' || c > 'z') {
    throw ParseError("expected a letter [a-z]", cur.pos);
  }
  cur.take();
  while (cur.peek() >= '0' && cur.peek() <= '9') {
    cur.take();
  }
  std::string name(cur.text.substr(start, cur.pos - start));
  long long reps = 1;
  if (cur.try_take('^')) {
    reps = cur.parse_uint("a repetition count after '^'");
    if (reps > 1000000LL) {
      throw ParseError("repetition count too large", cur.pos);
    }
  }
  Letter letter = Letter::of(name);
  for (long long i = 0; i < reps; ++i) {
    out.push_back(letter);
  }
}

std::vector<Letter> parse_word_letters(Cursor& cur) {
  std::vector<Letter> out;
  cur.skip_ws();
  while (true) {
    char c = cur.peek();
    if (c < 'a' || c > 'z') {
      break;
    }
    parse_letter(cur, out);
    cur.skip_ws();
  }
  if (out.empty()) {
    throw ParseError("expected a word", cur.pos);
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) {
  Cursor cur{text};
  Word w(parse_word_letters(cur));
  cur.skip_ws();
  if (!cur.done()) {
    throw ParseError("unexpected trailing input", cur.pos);
  }
  return w;
}

Identity parse_identity(std::string_view text) {
  Cursor cur{text};
  Word lhs(parse_word_letters(cur));
  cur.skip_ws();
  if (!cur.try_take('=') && !cur.try_take_doteq()) {
    throw ParseError("expected '=' between the two words", cur.pos);
  }
  Word rhs(parse_word_letters(cur));
  cur.skip_ws();
  if (!cur.done()) {
    throw ParseError("unexpected trailing input", cur.pos);
  }
  return Identity{std::move(lhs), std::move(rhs)};
}

std::string print_word(const Word& w) {
  std::string out;
  for (Letter x : w.letters()) {
    out += x.name();
  }
  return out;
}

std::string print_identity(const Identity& id) {
  return print_word(id.lhs) + " = " + print_word(id.rhs);
}

GeneratorWord parse_generator_word(std::string_view text) {
  Cursor cur{text};
  GeneratorWord out;
  cur.skip_ws();
  while (!cur.done()) {
    char c = cur.peek();
    GeneratorSymbol sym{};
    if (c == 'c' || c == 'd') {
      cur.take();
      sym = GeneratorSymbol{c, 0};
    } else if (c == 'h') {
      cur.take();
      char digit = cur.peek();
      if (digit < '1' || digit > '9') {
        throw ParseError("expected a hook index 1..9 after 'h'", cur.pos);
      }
      cur.take();
      sym = GeneratorSymbol{'h', digit - '0'};
    } else {
      throw ParseError("expected a generator c, d or h<i>", cur.pos);
    }
    long long reps = 1;
    if (cur.try_take('^')) {
      reps = cur.parse_uint("a repetition count after '^'");
      if (reps > 1000000LL) {
        throw ParseError("repetition count too large", cur.pos);
      }
    }
    for (long long i = 0; i < reps; ++i) {
      out.push_back(sym);
    }
    cur.skip_ws();
  }
  if (out.empty()) {
    throw ParseError("expected a generator word", cur.pos);
  }
  return out;
}

std::string print_generator_word(const GeneratorWord& w) {
  std::string out;
  for (const GeneratorSymbol& s : w) {
    out += s.kind;
    if (s.kind == 'h') {
      out += std::to_string(s.index);
    }
  }
  return out;
}

namespace {

Point parse_literal_point(Cursor& cur) {
  cur.skip_ws();
  if (cur.try_take('"')) {
    long long index = cur.parse_uint("a point index");
    cur.expect('\'');
    cur.expect('"');
    return Point{Side::Right, static_cast<int>(index)};
  }
  long long index = cur.parse_uint("a point index");
  return Point{Side::Left, static_cast<int>(index)};
}

std::string literal_point(const Point& p) {
  if (p.side == Side::Left) {
    return std::to_string(p.index);
  }
  return "\"" + std::to_string(p.index) + "'\"";
}

std::string literal_text(int rank, const std::vector<std::pair<Point, Point>>& pairs,
                         long long circles) {
  std::string out = "{n: " + std::to_string(rank) + ", pairs: [";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += '[' + literal_point(pairs[i].first) + ',' + literal_point(pairs[i].second) + ']';
  }
  out += "], circles: " + std::to_string(circles) + "}";
  return out;
}

}  // namespace

WireDiagram parse_diagram_literal(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('{');
  std::optional<long long> rank;
  std::optional<long long> circles;
  std::optional<std::vector<std::pair<Point, Point>>> pairs;
  while (true) {
    cur.skip_ws();
    std::size_t key_pos = cur.pos;
    std::string key;
    while (cur.peek() >= 'a' && cur.peek() <= 'z') {
      key += cur.take();
    }
    cur.skip_ws();
    cur.expect(':');
    cur.skip_ws();
    if (key == "n") {
      rank = cur.parse_uint("a rank");
    } else if (key == "circles") {
      circles = cur.parse_uint("a circle count");
    } else if (key == "pairs") {
      std::vector<std::pair<Point, Point>> ps;
      cur.expect('[');
      cur.skip_ws();
      if (!cur.try_take(']')) {
        while (true) {
          cur.skip_ws();
          cur.expect('[');
          Point a = parse_literal_point(cur);
          cur.skip_ws();
          cur.expect(',');
          Point b = parse_literal_point(cur);
          cur.skip_ws();
          cur.expect(']');
          ps.emplace_back(a, b);
          cur.skip_ws();
          if (!cur.try_take(',')) {
            break;
          }
        }
        cur.skip_ws();
        cur.expect(']');
      }
      pairs = std::move(ps);
    } else {
      throw ParseError("unknown key '" + key + "' (expected n, pairs or circles)", key_pos);
    }
    cur.skip_ws();
    if (!cur.try_take(',')) {
      break;
    }
  }
  cur.skip_ws();
  cur.expect('}');
  cur.skip_ws();
  if (!cur.done()) {
    throw ParseError("unexpected trailing input", cur.pos);
  }
  if (!rank.has_value() || !pairs.has_value()) {
    throw ParseError("a diagram literal needs both n and pairs", cur.pos);
  }
  return WireDiagram::make(static_cast<int>(*rank), *pairs, circles.value_or(0));
}

std::string to_literal(const WireDiagram& d) {
  return literal_text(d.rank(), d.pairs(), d.circles());
}

std::string to_literal(const KauffmanElement& x) {
  return literal_text(x.rank(), x.jones().diagram().pairs(), x.circles());
}

std::string to_literal(const ExtKauffmanElement& x) {
  return literal_text(x.rank(), x.jones().diagram().pairs(), x.circles());
}

}  // namespace kauffman
