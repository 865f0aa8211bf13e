#include "kauffman/verify.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "kauffman/errors.hpp"
#include "kauffman/jones.hpp"
#include "kauffman/kauffman.hpp"
#include "kauffman/rees.hpp"

namespace kauffman {

namespace {

std::vector<JonesElement> j4_flat_elements() {
  std::vector<JonesElement> out;
  for (const JonesElement& x : enumerate_jones(4)) {
    if (x.t_wire_count() <= 2) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

Report verify_relations(int max_rank) {
  Report report;
  for (int n = 2; n <= max_rank; ++n) {
    const std::string suffix = " n=" + std::to_string(n);

    WireDiagram c = WireDiagram::circle(n);
    std::vector<WireDiagram> h;
    for (int i = 1; i < n; ++i) {
      h.push_back(WireDiagram::hook(n, i));
    }
    ExtKauffmanElement ec = ExtKauffmanElement::generator(n, "c");
    ExtKauffmanElement ed = ExtKauffmanElement::generator(n, "d");
    std::vector<ExtKauffmanElement> eh;
    for (int i = 1; i < n; ++i) {
      eh.push_back(ExtKauffmanElement::generator(n, "h" + std::to_string(i)));
    }

    int pairs = 0;
    bool commute = true;
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = 0; j + 1 < n; ++j) {
        if (std::abs(i - j) < 2) {
          continue;
        }
        ++pairs;
        commute = commute && h[i] * h[j] == h[j] * h[i] && eh[i] * eh[j] == eh[j] * eh[i];
      }
    }
    report.add("commuting-hooks" + suffix, commute, std::to_string(pairs) + " pairs");

    int triples = 0;
    bool absorb = true;
    for (int i = 0; i + 1 < n; ++i) {
      for (int j : {i - 1, i + 1}) {
        if (j < 0 || j + 1 >= n) {
          continue;
        }
        ++triples;
        absorb = absorb && h[i] * h[j] * h[i] == h[i] && eh[i] * eh[j] * eh[i] == eh[i];
      }
    }
    report.add("adjacent-hooks" + suffix, absorb, std::to_string(triples) + " triples");

    bool square = true;
    for (int i = 0; i + 1 < n; ++i) {
      square = square && h[i] * h[i] == c * h[i] && h[i] * h[i] == h[i] * c &&
               eh[i] * eh[i] == ec * eh[i] && eh[i] * eh[i] == eh[i] * ec;
    }
    report.add("hook-squares" + suffix, square, std::to_string(n - 1) + " hooks");

    bool inverse = ec * ed == ExtKauffmanElement::identity(n) &&
                   ed * ec == ExtKauffmanElement::identity(n);
    for (int i = 0; i + 1 < n; ++i) {
      inverse = inverse && ed * eh[i] == eh[i] * ed;
    }
    report.add("circle-inverse" + suffix, inverse, "cd = dc = 1, d central on hooks");
  }
  return report;
}

Report verify_cutting_j4() {
  Report report;
  std::vector<JonesElement> flat = j4_flat_elements();

  bool fixed = true;
  for (const JonesElement& x : flat) {
    JonesElement cx = cut(x);
    fixed = fixed && cx.t_wire_count() == 0 && cut(cx) == cx &&
            (x.t_wire_count() != 0 || cx == x);
  }
  report.add("cut-j4-idempotent-retraction", fixed,
             std::to_string(flat.size()) + " elements onto the t-wire-free part");

  int pairs = 0;
  bool multiplicative = true;
  for (const JonesElement& x : flat) {
    for (const JonesElement& y : flat) {
      ++pairs;
      multiplicative =
          multiplicative && cut(jmultiply(x, y).result) == jmultiply(cut(x), cut(y)).result;
    }
  }
  report.add("cut-j4-multiplicative", multiplicative, std::to_string(pairs) + " pairs checked");
  return report;
}

Report verify_cutting_k4(long long circle_min, long long circle_max) {
  Report report;
  std::vector<JonesElement> flat = j4_flat_elements();

  long long pairs = 0;
  bool multiplicative = true;
  for (const JonesElement& xj : flat) {
    for (const JonesElement& yj : flat) {
      for (long long a = circle_min; a <= circle_max; ++a) {
        for (long long b = circle_min; b <= circle_max; ++b) {
          ++pairs;
          ExtKauffmanElement x{xj, a}, y{yj, b};
          multiplicative = multiplicative && cut(x * y) == cut(x) * cut(y);
        }
      }
    }
  }
  report.add("cut-k4-multiplicative", multiplicative,
             std::to_string(flat.size() * flat.size()) + " diagram pairs x " +
                 std::to_string((circle_max - circle_min + 1) * (circle_max - circle_min + 1)) +
                 " circle pairs = " + std::to_string(pairs));

  bool decrement = true;
  for (const JonesElement& xj : flat) {
    ExtKauffmanElement x{xj, 0};
    ExtKauffmanElement cx = cut(x);
    if (xj.t_wire_count() == 2) {
      decrement = decrement && cx.circles() == -1 && cx.jones() == cut(xj);
    } else {
      decrement = decrement && cx == x;
    }
  }
  report.add("cut-k4-circle-decrement", decrement,
             "two-t-wire diagrams lose one circle, others fixed");
  return report;
}

Report verify_k5_counterexample() {
  Report report;

  WireDiagram h1 = WireDiagram::hook(5, 1);
  WireDiagram h2 = WireDiagram::hook(5, 2);
  WireDiagram h3 = WireDiagram::hook(5, 3);
  WireDiagram h4 = WireDiagram::hook(5, 4);
  WireDiagram x = h1 * h2 * h3;
  WireDiagram y = h4;

  WireDiagram lhs = x * x * y * x;
  WireDiagram rhs = x * y * x * x;

  WireDiagram expected_lhs = WireDiagram::make(
      5,
      std::vector<std::pair<Point, Point>>{
          {{Side::Left, 1}, {Side::Left, 2}},
          {{Side::Left, 3}, {Side::Left, 4}},
          {{Side::Right, 2}, {Side::Right, 5}},
          {{Side::Right, 3}, {Side::Right, 4}},
          {{Side::Left, 5}, {Side::Right, 1}},
      },
      1);
  WireDiagram expected_rhs = WireDiagram::make(
      5,
      std::vector<std::pair<Point, Point>>{
          {{Side::Left, 1}, {Side::Left, 2}},
          {{Side::Left, 3}, {Side::Left, 4}},
          {{Side::Right, 1}, {Side::Right, 2}},
          {{Side::Right, 3}, {Side::Right, 4}},
          {{Side::Left, 5}, {Side::Right, 5}},
      },
      0);

  report.add("k5-sides-differ", lhs != rhs, "xxyx vs xyxx under x=h1h2h3, y=h4");
  report.add("k5-lhs-value", lhs == expected_lhs, "xxyx has one circle and t-wire {5,1'}");
  report.add("k5-rhs-value", rhs == expected_rhs, "xyxx = xx, no circles");

  GeneratorWord wx = {{'h', 1}, {'h', 2}, {'h', 3}};
  GeneratorWord wy = {{'h', 4}};
  auto concat = [](std::initializer_list<const GeneratorWord*> parts) {
    GeneratorWord out;
    for (const GeneratorWord* p : parts) {
      out.insert(out.end(), p->begin(), p->end());
    }
    return out;
  };
  ExtKauffmanElement clhs = evaluate(concat({&wx, &wx, &wy, &wx}), 5);
  ExtKauffmanElement crhs = evaluate(concat({&wx, &wy, &wx, &wx}), 5);

  bool coords_agree = clhs.jones().diagram() ==
                          WireDiagram::make(5, lhs.pairs(), 0) &&
                      clhs.circles() == lhs.circles() &&
                      crhs.jones().diagram() == WireDiagram::make(5, rhs.pairs(), 0) &&
                      crhs.circles() == rhs.circles();
  report.add("k5-coordinates-agree", coords_agree,
             "coordinate evaluation matches the rank-5 diagram product");
  report.add("k5-differing-components", !(clhs.jones() == crhs.jones()) &&
                                            clhs.circles() != crhs.circles(),
             "Jones parts differ and circle counts differ (1 vs 0)");
  return report;
}

Report verify_catalan(int max_rank) {
  Report report;
  if (max_rank < 2 || max_rank > 8) {
    throw InvalidArgument("catalan suite supports ranks 2..8, got " + std::to_string(max_rank));
  }
  std::string counts;
  bool ok = true;
  for (int n = 2; n <= max_rank; ++n) {
    std::size_t size = enumerate_jones(n).size();
    ok = ok && size == catalan(n);
    if (!counts.empty()) {
      counts += ',';
    }
    counts += std::to_string(size);
  }
  report.add("jones-sizes-are-catalan", ok,
             "n=2.." + std::to_string(max_rank) + ": " + counts);
  return report;
}

std::vector<std::string> verify_suite_names() {
  return {"relations",  "cutting-j4",   "cutting-k4", "k5-counterexample",
          "catalan",    "structure-j4", "structure-k4"};
}

Report run_verify_suite(const std::string& name, int max_rank) {
  if (name == "relations") {
    return verify_relations(max_rank > 0 ? max_rank : 6);
  }
  if (name == "cutting-j4") {
    return verify_cutting_j4();
  }
  if (name == "cutting-k4") {
    return verify_cutting_k4();
  }
  if (name == "k5-counterexample") {
    return verify_k5_counterexample();
  }
  if (name == "catalan") {
    return verify_catalan(max_rank > 0 ? max_rank : 7);
  }
  if (name == "structure-j4") {
    return verify_structure_j4();
  }
  if (name == "structure-k4") {
    return verify_structure_ext_k4();
  }
  throw InvalidArgument("unknown verify suite: " + name);
}

}  // namespace kauffman
