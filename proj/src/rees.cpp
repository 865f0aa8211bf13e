#include "kauffman/rees.hpp"

#include <algorithm>

#include "kauffman/kauffman.hpp"

namespace kauffman {

RmsSemigroup::RmsSemigroup(std::string name, CyclicGroup group, int i_size, int lambda_size,
                           SandwichMatrix sandwich, bool with_zero)
    : name_(std::move(name)),
      group_(group),
      i_size_(i_size),
      lambda_size_(lambda_size),
      sandwich_(std::move(sandwich)),
      with_zero_(with_zero) {
  if (i_size_ < 1 || lambda_size_ < 1) {
    throw InvalidArgument("index sets must be nonempty");
  }
  if (sandwich_.rows != lambda_size_ || sandwich_.cols != i_size_ ||
      sandwich_.entries.size() != static_cast<std::size_t>(lambda_size_) * i_size_) {
    throw InvalidArgument("sandwich matrix must be |Lambda| x |I|");
  }
  for (const auto& e : sandwich_.entries) {
    if (!e.has_value() && !with_zero_) {
      throw InvalidArgument("a zero sandwich entry needs a semigroup with zero");
    }
  }
}

void RmsSemigroup::validate(const RmsElement& x) const {
  if (x.is_zero) {
    if (!with_zero_) {
      throw InvalidArgument(name_ + " has no zero element");
    }
    return;
  }
  if (x.i < 1 || x.i > i_size_ || x.lambda < 1 || x.lambda > lambda_size_) {
    throw InvalidArgument("triple indices out of range for " + name_);
  }
}

RmsElement RmsSemigroup::multiply(const RmsElement& a, const RmsElement& b) const {
  validate(a);
  validate(b);
  if (a.is_zero || b.is_zero) {
    return RmsElement::zero();
  }
  const std::optional<long long>& p = sandwich_.at(a.lambda, b.i);
  if (!p.has_value()) {
    return RmsElement::zero();
  }
  return RmsElement::triple(a.i, group_.reduce(a.g + *p + b.g), b.lambda);
}

RmsElement RmsSemigroup::evaluate(const Word& w, const std::map<Letter, RmsElement>& phi) const {
  auto value = [&](Letter x) {
    auto it = phi.find(x);
    if (it == phi.end()) {
      throw UnassignedLetter("letter " + std::string(x.name()) + " has no assigned value");
    }
    return it->second;
  };
  RmsElement acc = value(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = multiply(acc, value(w[i]));
  }
  return acc;
}

std::vector<RmsElement> RmsSemigroup::elements(long long min_exp, long long max_exp) const {
  long long lo = 0, hi = 0;
  if (group_.modulus == 0) {
    lo = min_exp;
    hi = max_exp;
    if (lo > hi) {
      throw InvalidArgument("empty exponent range");
    }
  } else {
    lo = 0;
    hi = group_.modulus - 1;
  }
  std::vector<RmsElement> out;
  if (with_zero_) {
    out.push_back(RmsElement::zero());
  }
  for (int i = 1; i <= i_size_; ++i) {
    for (long long g = lo; g <= hi; ++g) {
      for (int lambda = 1; lambda <= lambda_size_; ++lambda) {
        out.push_back(RmsElement::triple(i, g, lambda));
      }
    }
  }
  return out;
}

std::string RmsSemigroup::print(const RmsElement& x) const {
  if (x.is_zero) {
    return "0";
  }
  std::string g;
  if (x.g == 0) {
    g = "e";
  } else if (x.g == 1) {
    g = "c";
  } else {
    g = "c^" + std::to_string(x.g);
  }
  return "(" + std::to_string(x.i) + "," + g + "," + std::to_string(x.lambda) + ")";
}

namespace {

SandwichMatrix matrix(int rows, int cols, std::vector<std::optional<long long>> entries) {
  return SandwichMatrix{rows, cols, std::move(entries)};
}

constexpr std::optional<long long> kZero = std::nullopt;

}  // namespace

const RmsSemigroup& RmsSemigroup::builtin(std::string_view name) {
  static const RmsSemigroup m3("M3", CyclicGroup{1}, 3, 3,
                               matrix(3, 3,
                                      {0LL, 0LL, kZero,
                                       0LL, 0LL, 0LL,
                                       kZero, 0LL, 0LL}),
                               true);
  static const RmsSemigroup rc2("RC2", CyclicGroup{0}, 2, 2,
                                matrix(2, 2, {2LL, 1LL, 1LL, 2LL}), false);
  static const RmsSemigroup mc3("MC3", CyclicGroup{0}, 3, 3,
                                matrix(3, 3,
                                       {1LL, 0LL, kZero,
                                        0LL, 1LL, 0LL,
                                        kZero, 0LL, 1LL}),
                                true);
  static const RmsSemigroup rb22("RB2x2", CyclicGroup{1}, 2, 2,
                                 matrix(2, 2, {0LL, 0LL, 0LL, 0LL}), false);
  if (name == "M3") return m3;
  if (name == "RC2") return rc2;
  if (name == "MC3") return mc3;
  if (name == "RB2x2") return rb22;
  throw InvalidArgument("unknown built-in Rees matrix semigroup: " + std::string(name));
}

std::vector<std::string> RmsSemigroup::builtin_names() {
  return {"M3", "RC2", "MC3", "RB2x2"};
}

const RmsSemigroup& RmsSemigroup::witness_semigroup() {
  static const RmsSemigroup s("S", CyclicGroup{0}, 2, 2,
                              matrix(2, 2, {0LL, 1LL, 0LL, 0LL}), false);
  return s;
}

namespace {

// All length-2 factor counts of w, keyed by the letter pair.
std::map<std::pair<Letter, Letter>, std::size_t> factor_counts(const Word& w) {
  std::map<std::pair<Letter, Letter>, std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    ++out[{w[i], w[i + 1]}];
  }
  return out;
}

std::vector<Letter> joint_content(const Identity& id) {
  std::vector<Letter> letters = content(id.lhs);
  for (Letter x : content(id.rhs)) {
    letters.push_back(x);
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

std::map<Letter, RmsElement> assign(const Identity& id, Letter special,
                                    const RmsElement& special_value,
                                    const RmsElement& other_value) {
  std::map<Letter, RmsElement> phi;
  for (Letter x : joint_content(id)) {
    phi.emplace(x, x == special ? special_value : other_value);
  }
  return phi;
}

}  // namespace

bool check_identity_rms_abelian(const Identity& id) {
  if (id.lhs.first() != id.rhs.first()) {
    return false;
  }
  if (id.lhs.last() != id.rhs.last()) {
    return false;
  }
  return factor_counts(id.lhs) == factor_counts(id.rhs);
}

std::map<Letter, RmsElement> substitution_first_letter(const Identity& id, Letter x) {
  return assign(id, x, RmsElement::triple(1, 0, 1), RmsElement::triple(2, 0, 2));
}

std::map<Letter, RmsElement> substitution_last_letter(const Identity& id, Letter x) {
  return assign(id, x, RmsElement::triple(1, 0, 1), RmsElement::triple(2, 0, 2));
}

std::map<Letter, RmsElement> substitution_factor_distinct(const Identity& id, Letter y, Letter z) {
  std::map<Letter, RmsElement> phi;
  for (Letter x : joint_content(id)) {
    if (x == y) {
      phi.emplace(x, RmsElement::triple(1, 0, 1));
    } else if (x == z) {
      phi.emplace(x, RmsElement::triple(2, 0, 2));
    } else {
      phi.emplace(x, RmsElement::triple(1, 0, 2));
    }
  }
  return phi;
}

std::map<Letter, RmsElement> substitution_factor_square(const Identity& id, Letter y) {
  return assign(id, y, RmsElement::triple(2, 0, 1), RmsElement::triple(1, 0, 2));
}

std::optional<RmsWitness> witness_rms(const Identity& id) {
  const RmsSemigroup& s = RmsSemigroup::witness_semigroup();
  auto finish = [&](std::map<Letter, RmsElement> phi) -> std::optional<RmsWitness> {
    RmsElement lhs = s.evaluate(id.lhs, phi);
    RmsElement rhs = s.evaluate(id.rhs, phi);
    if (lhs == rhs) {
      return std::nullopt;  // not separating; callers treat this as a bug
    }
    return RmsWitness{std::move(phi), lhs, rhs};
  };
  if (id.lhs.first() != id.rhs.first()) {
    return finish(substitution_first_letter(id, id.lhs.first()));
  }
  if (id.lhs.last() != id.rhs.last()) {
    return finish(substitution_last_letter(id, id.lhs.last()));
  }
  auto lhs_counts = factor_counts(id.lhs);
  auto rhs_counts = factor_counts(id.rhs);
  std::vector<Letter> letters = joint_content(id);
  for (Letter y : letters) {
    for (Letter z : letters) {
      std::size_t lc = 0, rc = 0;
      if (auto it = lhs_counts.find({y, z}); it != lhs_counts.end()) lc = it->second;
      if (auto it = rhs_counts.find({y, z}); it != rhs_counts.end()) rc = it->second;
      if (lc == rc) {
        continue;
      }
      if (y == z) {
        return finish(substitution_factor_square(id, y));
      }
      return finish(substitution_factor_distinct(id, y, z));
    }
  }
  return std::nullopt;
}

namespace {

// The 13 elements of J_4 with at most two t-wires, as named table entries.
std::vector<JonesElement> j4_flat() {
  std::vector<JonesElement> out;
  for (const auto& [name, x] : j4_named_elements()) {
    if (name != "id") {
      out.push_back(x);
    }
  }
  return out;
}

RmsElement m3_image(const JonesElement& x) {
  if (auto pos = j4_two_wire_position(x)) {
    return RmsElement::triple(pos->first, 0, pos->second);
  }
  return RmsElement::zero();
}

RmsElement rb_image(const JonesElement& x) {
  auto pos = j4_zero_wire_position(cut(x));
  return RmsElement::triple(pos->first, 0, pos->second);
}

}  // namespace

Report verify_structure_j4() {
  Report report;
  const RmsSemigroup& m3 = RmsSemigroup::builtin("M3");
  const RmsSemigroup& rb = RmsSemigroup::builtin("RB2x2");
  std::vector<JonesElement> flat = j4_flat();

  bool cut_hom = true;
  bool m3_hom = true;
  std::string cut_detail, m3_detail;
  for (const JonesElement& x : flat) {
    for (const JonesElement& y : flat) {
      JonesElement xy = jmultiply(x, y).result;
      if (!(cut(xy) == jmultiply(cut(x), cut(y)).result)) {
        cut_hom = false;
        cut_detail = "witness " + j4_name(x) + "," + j4_name(y);
      }
      if (!(rb_image(xy) == rb.multiply(rb_image(x), rb_image(y)))) {
        cut_hom = false;
        cut_detail = "witness " + j4_name(x) + "," + j4_name(y);
      }
      if (!(m3_image(xy) == m3.multiply(m3_image(x), m3_image(y)))) {
        m3_hom = false;
        m3_detail = "witness " + j4_name(x) + "," + j4_name(y);
      }
    }
  }
  report.add("retraction-homomorphism", cut_hom,
             cut_hom ? std::to_string(flat.size() * flat.size()) + " pairs" : cut_detail);
  report.add("m3-homomorphism", m3_hom,
             m3_hom ? std::to_string(flat.size() * flat.size()) + " pairs" : m3_detail);

  std::vector<std::pair<RmsElement, RmsElement>> images;
  for (const JonesElement& x : flat) {
    images.emplace_back(rb_image(x), m3_image(x));
  }
  std::sort(images.begin(), images.end());
  bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  report.add("combined-map-injective", injective, std::to_string(flat.size()) + " elements");

  std::vector<RmsElement> rb_images, m3_images;
  for (const auto& [a, b] : images) {
    rb_images.push_back(a);
    m3_images.push_back(b);
  }
  auto count_distinct = [](std::vector<RmsElement> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.size();
  };
  std::size_t rb_hit = count_distinct(rb_images);
  std::size_t m3_hit = count_distinct(m3_images);
  report.add("projection-onto-band", rb_hit == 4, std::to_string(rb_hit) + " of 4 elements hit");
  report.add("projection-onto-m3", m3_hit == 10, std::to_string(m3_hit) + " of 10 elements hit");
  return report;
}

Report verify_structure_ext_k4(long long circle_min, long long circle_max) {
  Report report;
  const RmsSemigroup& rc2 = RmsSemigroup::builtin("RC2");
  const RmsSemigroup& mc3 = RmsSemigroup::builtin("MC3");
  std::vector<JonesElement> flat = j4_flat();

  auto rc2_image = [&](const ExtKauffmanElement& x) {
    ExtKauffmanElement r = cut(x);
    auto pos = j4_zero_wire_position(r.jones());
    return RmsElement::triple(pos->first, r.circles(), pos->second);
  };
  auto mc3_image = [&](const ExtKauffmanElement& x) {
    if (auto pos = j4_two_wire_position(x.jones())) {
      return RmsElement::triple(pos->first, x.circles(), pos->second);
    }
    return RmsElement::zero();
  };

  bool rc2_hom = true, mc3_hom = true, zero_layer = true;
  std::string rc2_detail, mc3_detail, zero_detail;
  long long pairs = 0;
  for (const JonesElement& xj : flat) {
    for (const JonesElement& yj : flat) {
      for (long long cx = circle_min; cx <= circle_max; ++cx) {
        for (long long cy = circle_min; cy <= circle_max; ++cy) {
          ++pairs;
          ExtKauffmanElement x(xj, cx), y(yj, cy);
          ExtKauffmanElement xy = x * y;
          if (!(rc2_image(xy) == rc2.multiply(rc2_image(x), rc2_image(y)))) {
            rc2_hom = false;
            rc2_detail = "witness " + j4_name(xj) + "," + j4_name(yj);
          }
          RmsElement mxy = mc3_image(xy);
          if (!(mxy == mc3.multiply(mc3_image(x), mc3_image(y)))) {
            mc3_hom = false;
            mc3_detail = "witness " + j4_name(xj) + "," + j4_name(yj);
          }
          // leaving the two-t-wire layer must land on the zero of MC3
          if (xj.t_wire_count() == 2 && yj.t_wire_count() == 2 &&
              xy.jones().t_wire_count() == 0 && !mxy.is_zero) {
            zero_layer = false;
            zero_detail = "witness " + j4_name(xj) + "," + j4_name(yj);
          }
        }
      }
    }
  }
  report.add("rc2-homomorphism", rc2_hom,
             rc2_hom ? std::to_string(pairs) + " pairs" : rc2_detail);
  report.add("mc3-homomorphism", mc3_hom,
             mc3_hom ? std::to_string(pairs) + " pairs" : mc3_detail);
  report.add("zero-image-off-layer", zero_layer, zero_layer ? "" : zero_detail);

  std::vector<std::pair<RmsElement, RmsElement>> images;
  for (const JonesElement& xj : flat) {
    for (long long cx = circle_min; cx <= circle_max; ++cx) {
      ExtKauffmanElement x(xj, cx);
      images.emplace_back(rc2_image(x), mc3_image(x));
    }
  }
  std::sort(images.begin(), images.end());
  bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  report.add("combined-map-injective", injective,
             std::to_string(images.size()) + " sampled elements");
  return report;
}

}  // namespace kauffman
