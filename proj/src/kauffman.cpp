#include "kauffman/kauffman.hpp"

namespace kauffman {

ExtKauffmanElement ExtKauffmanElement::identity(int rank) {
  return {JonesElement::identity(rank), 0};
}

ExtKauffmanElement ExtKauffmanElement::generator(int rank, std::string_view name) {
  if (name == "c") {
    return {JonesElement::identity(rank), 1};
  }
  if (name == "d") {
    return {JonesElement::identity(rank), -1};
  }
  if (name.size() >= 2 && name[0] == 'h') {
    int i = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') {
        i = -1;
        break;
      }
      i = i * 10 + (ch - '0');
    }
    if (i > 0) {
      return {JonesElement::hook(rank, i), 0};
    }
  }
  throw InvalidArgument("unknown generator name: " + std::string(name));
}

ExtKauffmanElement operator*(const ExtKauffmanElement& a, const ExtKauffmanElement& b) {
  JonesProduct p = jmultiply(a.jones_, b.jones_);
  return {std::move(p.result), a.circles_ + b.circles_ + p.removed};
}

ExtKauffmanElement kmultiply(const ExtKauffmanElement& a, const ExtKauffmanElement& b) {
  return a * b;
}

KauffmanElement::KauffmanElement(JonesElement jones, long long circles)
    : jones_(std::move(jones)), circles_(circles) {
  if (circles_ < 0) {
    throw InvalidArgument("Kauffman elements have nonnegative circle count, got " +
                          std::to_string(circles_));
  }
}

KauffmanElement KauffmanElement::identity(int rank) {
  return {JonesElement::identity(rank), 0};
}

KauffmanElement operator*(const KauffmanElement& a, const KauffmanElement& b) {
  ExtKauffmanElement p = a.ext() * b.ext();
  return {p.jones(), p.circles()};
}

KauffmanElement kmultiply(const KauffmanElement& a, const KauffmanElement& b) {
  return a * b;
}

ExtKauffmanElement evaluate(const GeneratorWord& w, int rank) {
  ExtKauffmanElement x = ExtKauffmanElement::identity(rank);
  for (const GeneratorSymbol& s : w) {
    if (s.kind == 'c') {
      x = x * ExtKauffmanElement::generator(rank, "c");
    } else if (s.kind == 'd') {
      x = x * ExtKauffmanElement::generator(rank, "d");
    } else if (s.kind == 'h') {
      x = x * ExtKauffmanElement{JonesElement::hook(rank, s.index), 0};
    } else {
      throw InvalidArgument(std::string("unknown generator kind: ") + s.kind);
    }
  }
  return x;
}

ExtKauffmanElement evaluate(const Word& w, const GeneratorAssignment& phi) {
  auto first = phi.find(w[0]);
  if (first == phi.end()) {
    throw UnassignedLetter("letter " + std::string(w[0].name()) + " has no assigned value");
  }
  ExtKauffmanElement result = first->second;
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto it = phi.find(w[i]);
    if (it == phi.end()) {
      throw UnassignedLetter("letter " + std::string(w[i].name()) + " has no assigned value");
    }
    if (it->second.rank() != result.rank()) {
      throw RankMismatch("assigned values must share one rank");
    }
    result = result * it->second;
  }
  return result;
}

ExtKauffmanElement cut(const ExtKauffmanElement& x) {
  if (x.rank() != 4) {
    throw BadRank("the coordinate cutting map is defined for rank 4, got " +
                  std::to_string(x.rank()));
  }
  const int t = x.jones().t_wire_count();
  if (t > 2) {
    throw TooManyTWires("the cutting map allows at most two t-wires, got " +
                        std::to_string(t));
  }
  if (t == 0) {
    return x;
  }
  return {cut(x.jones()), x.circles() - 1};
}

KauffmanElement embed_k3_in_k4(const GeneratorWord& w) {
  for (const GeneratorSymbol& s : w) {
    bool ok = s.kind == 'c' || (s.kind == 'h' && (s.index == 1 || s.index == 2));
    if (!ok) {
      throw InvalidArgument("the embedding takes words over {c, h1, h2} only");
    }
  }
  ExtKauffmanElement x = evaluate(w, 4);
  return {x.jones(), x.circles()};
}

}  // namespace kauffman
