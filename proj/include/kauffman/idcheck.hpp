#ifndef KAUFFMAN_IDCHECK_HPP
#define KAUFFMAN_IDCHECK_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kauffman/kauffman.hpp"
#include "kauffman/words.hpp"

namespace kauffman {

class ProfileBuilder;
namespace detail {
struct ProfileAccess;
}

// A position pair i < j of w contributes a cut pair (w[i], w[j], B) when
// neither w[i] nor w[j] occurs strictly between positions i and j; B is the
// set of distinct letters that do.  Deleting a letter set Y from w turns
// exactly the cut pairs with B inside Y into adjacent factors, so the cut
// pairs of a word carry its length-2 factor counts for every deletion at
// once.
struct CutPair {
  Letter x;
  Letter y;
  std::vector<Letter> between;  // sorted by name

  bool operator==(const CutPair&) const = default;
};

// The multiset of cut pairs, stored compactly: letters as indices into the
// sorted content, between-sets as bitmasks over it.
class CutPairProfile {
 public:
  const std::vector<Letter>& content() const { return content_; }
  std::size_t size() const { return xs_.size(); }
  int mask_words() const { return words_; }

  CutPair pair(std::size_t idx) const;
  std::vector<CutPair> pairs() const;

  // multiset equality (profiles are kept canonically sorted)
  bool operator==(const CutPairProfile& other) const = default;

 private:
  friend class ProfileBuilder;
  friend struct detail::ProfileAccess;

  std::vector<Letter> content_;           // sorted by name
  int words_ = 0;                         // 64-bit words per mask
  std::vector<std::uint32_t> xs_, ys_;    // letter indices, one row per cut pair
  std::vector<std::uint64_t> masks_;      // size() * words_, row-major
};

struct OccurrenceOrders {
  std::vector<Letter> first_order;  // letters by first occurrence
  std::vector<Letter> last_order;   // letters by last occurrence

  bool operator==(const OccurrenceOrders&) const = default;
};

struct WordProfile {
  OccurrenceOrders orders;
  CutPairProfile cut_pairs;
};

// Quasilinear for fixed alphabet size: per start position the candidate
// partners are the first occurrence of each distinct letter, truncated at
// the first recurrence of the start letter.
WordProfile profile(const Word& w);
// Simple quadratic scan; must agree with profile() everywhere.
WordProfile profile_reference(const Word& w);

enum class FailCondition {
  Content,      // the two sides use different letter sets
  FirstLetter,  // residues start differently
  LastLetter,   // residues end differently
  FactorCount,  // a length-2 factor occurs a different number of times
  FactorSet,    // a length-2 factor occurs on one side only
};

std::string fail_condition_name(FailCondition c);

struct ConditionWitness {
  std::vector<Letter> deleted;  // the failing deletion set Y, sorted by name
  FailCondition condition;
  std::optional<std::pair<Letter, Letter>> factor;

  bool operator==(const ConditionWitness&) const = default;
};

struct SubstitutionWitness {
  std::string semigroup;
  std::vector<std::pair<Letter, std::string>> assignment;  // printable values
  std::string lhs_value;
  std::string rhs_value;
};

struct Verdict {
  bool holds;
  std::string monoid;
  std::optional<std::variant<ConditionWitness, SubstitutionWitness>> witness;

  std::string to_line() const;       // "HOLDS" or "FAILS <monoid> ..."
  std::string to_json_text() const;  // structured dump for harnesses
};

// Decides an identity of the rank-3/rank-4 Kauffman monoids (they satisfy
// the same identities): equal contents, equal first- and last-occurrence
// orders, and equal cut pair multisets.
Verdict check_k3_k4(const Identity& id);

// Decides an identity of the 14-element rank-4 Jones monoid: as above, but
// per ordered letter pair only the inclusion-minimal between-sets matter.
Verdict check_j4(const Identity& id);

enum class FactorMode { Counts, Sets };

// Exponential reference: tests every proper deletion set Y directly,
// smallest (then lexicographically first) failing Y wins.
Verdict oracle_all_Y(const Identity& id, FactorMode mode, int max_alphabet = 16);

// lhs/rhs of id after deleting the witness letters.
Identity residual_identity(const Identity& id, const ConditionWitness& w);

// Exhaustive substitution search over a finite semigroup given by its
// element list and multiplication.
template <typename Elem, typename Mul, typename Print>
Verdict oracle_finite_monoid(const Identity& id, const std::string& monoid_name,
                             const std::vector<Elem>& elements, Mul mul, Print print,
                             std::uint64_t budget = 20000000) {
  std::vector<Letter> letters = [&] {
    std::vector<Letter> ls = content(id.lhs);
    for (Letter x : content(id.rhs)) {
      ls.push_back(x);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
  }();
  if (elements.empty()) {
    throw InvalidArgument("element list must be nonempty");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (total > budget / elements.size()) {
      throw BudgetExceeded("substitution search needs more than " + std::to_string(budget) +
                           " evaluations");
    }
    total *= elements.size();
  }
  std::vector<std::size_t> pick(letters.size(), 0);
  auto value_at = [&](Letter x) -> const Elem& {
    auto it = std::lower_bound(letters.begin(), letters.end(), x);
    return elements[pick[static_cast<std::size_t>(it - letters.begin())]];
  };
  auto eval = [&](const Word& w) {
    Elem acc = value_at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = mul(acc, value_at(w[i]));
    }
    return acc;
  };
  while (true) {
    Elem lhs = eval(id.lhs);
    Elem rhs = eval(id.rhs);
    if (!(lhs == rhs)) {
      SubstitutionWitness w;
      w.semigroup = monoid_name;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        w.assignment.emplace_back(letters[i], print(elements[pick[i]]));
      }
      w.lhs_value = print(lhs);
      w.rhs_value = print(rhs);
      return Verdict{false, monoid_name, std::move(w)};
    }
    std::size_t d = letters.size();
    while (d > 0 && ++pick[d - 1] == elements.size()) {
      pick[d - 1] = 0;
      --d;
    }
    if (d == 0) {
      break;
    }
  }
  return Verdict{true, monoid_name, std::nullopt};
}

// Random (plus a deterministic seed set) substitution search for a
// counterexample in rank-n coordinates.  Never proves an identity; absence
// of a witness only means none was found within the budget.
std::optional<SubstitutionWitness> falsify_kn(const Identity& id, int rank,
                                              std::uint64_t budget, std::uint64_t seed = 0);

}  // namespace kauffman

#endif
