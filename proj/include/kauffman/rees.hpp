#ifndef KAUFFMAN_REES_HPP
#define KAUFFMAN_REES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kauffman/report.hpp"
#include "kauffman/words.hpp"

namespace kauffman {

// A cyclic group written multiplicatively with generator c: modulus 0 is
// the infinite cyclic group, modulus 1 the trivial group E, modulus m the
// order-m group.
struct CyclicGroup {
  unsigned modulus = 0;

  long long reduce(long long exponent) const {
    if (modulus == 0) {
      return exponent;
    }
    long long m = static_cast<long long>(modulus);
    return ((exponent % m) + m) % m;
  }
  bool operator==(const CyclicGroup&) const = default;
};

// Zero or a triple (i, c^g, lambda); indices are 1-based.
struct RmsElement {
  bool is_zero = false;
  int i = 0;
  long long g = 0;  // exponent of c
  int lambda = 0;

  static RmsElement zero() { return {true, 0, 0, 0}; }
  static RmsElement triple(int i, long long g, int lambda) { return {false, i, g, lambda}; }

  bool operator==(const RmsElement&) const = default;
  bool operator<(const RmsElement& other) const {
    return std::tie(is_zero, i, g, lambda) <
           std::tie(other.is_zero, other.i, other.g, other.lambda);
  }
};

// Sandwich matrix over the group plus zero; rows are indexed by lambda,
// columns by i.  std::nullopt is the zero entry.
struct SandwichMatrix {
  int rows = 0;  // |Lambda|
  int cols = 0;  // |I|
  std::vector<std::optional<long long>> entries;  // row-major exponents

  const std::optional<long long>& at(int lambda, int i) const {
    return entries[static_cast<std::size_t>(lambda - 1) * cols + (i - 1)];
  }
};

// A Rees matrix semigroup over a cyclic group, with or without zero.
class RmsSemigroup {
 public:
  RmsSemigroup(std::string name, CyclicGroup group, int i_size, int lambda_size,
               SandwichMatrix sandwich, bool with_zero);

  // Built-in instances: M3, RC2, MC3, RB2x2.
  static const RmsSemigroup& builtin(std::string_view name);
  static std::vector<std::string> builtin_names();
  // The two-by-two instance over the infinite cyclic group used to build
  // separating substitutions.
  static const RmsSemigroup& witness_semigroup();

  const std::string& name() const { return name_; }
  const CyclicGroup& group() const { return group_; }
  int i_size() const { return i_size_; }
  int lambda_size() const { return lambda_size_; }
  const SandwichMatrix& sandwich() const { return sandwich_; }
  bool with_zero() const { return with_zero_; }

  RmsElement multiply(const RmsElement& a, const RmsElement& b) const;
  RmsElement evaluate(const Word& w, const std::map<Letter, RmsElement>& phi) const;

  // All elements; for an infinite group the exponents are truncated to
  // [min_exp, max_exp] (evaluation itself is always exact).
  std::vector<RmsElement> elements(long long min_exp = 0, long long max_exp = 0) const;

  std::string print(const RmsElement& x) const;

 private:
  void validate(const RmsElement& x) const;

  std::string name_;
  CyclicGroup group_;
  int i_size_;
  int lambda_size_;
  SandwichMatrix sandwich_;
  bool with_zero_;
};

// Whether lhs and rhs start with the same letter, end with the same
// letter, and contain every length-2 word equally often.  Exactly the
// identities with this property hold in every Rees matrix semigroup over
// an abelian group.
bool check_identity_rms_abelian(const Identity& id);

struct RmsWitness {
  std::map<Letter, RmsElement> substitution;
  RmsElement lhs;
  RmsElement rhs;
};

// A substitution into witness_semigroup() separating the two sides, when
// check_identity_rms_abelian fails.
std::optional<RmsWitness> witness_rms(const Identity& id);

// The substitution templates behind witness_rms: per-letter values in
// witness_semigroup() keyed on the first letter / last letter / a length-2
// factor with distinct letters / a squared letter.
std::map<Letter, RmsElement> substitution_first_letter(const Identity& id, Letter x);
std::map<Letter, RmsElement> substitution_last_letter(const Identity& id, Letter x);
std::map<Letter, RmsElement> substitution_factor_distinct(const Identity& id, Letter y, Letter z);
std::map<Letter, RmsElement> substitution_factor_square(const Identity& id, Letter y);

// Structural checks: J_4 restricted to at most two t-wires decomposes
// through the cutting retraction and the M3 quotient; the rank-4 extended
// coordinates decompose through RC2 and MC3.
Report verify_structure_j4();
Report verify_structure_ext_k4(long long circle_min = -3, long long circle_max = 3);

}  // namespace kauffman

#endif
