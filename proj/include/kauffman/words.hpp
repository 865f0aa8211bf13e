#ifndef KAUFFMAN_WORDS_HPP
#define KAUFFMAN_WORDS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kauffman/errors.hpp"

namespace kauffman {

// An interned letter: cheap to copy, compare and hash.  Letters with the
// same name are the same letter, process-wide.  Comparison for ordering is
// by name, so sorted output is stable across runs.
class Letter {
 public:
  static Letter of(std::string_view name);

  std::string_view name() const;
  std::uint32_t id() const { return id_; }

  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& other) const { return name() < other.name(); }

 private:
  explicit Letter(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

struct LetterHash {
  std::size_t operator()(const Letter& x) const {
    return std::hash<std::uint32_t>{}(x.id());
  }
};

// The residue of deleting letters from a word; unlike Word it may be empty.
class MaybeEmptyWord {
 public:
  MaybeEmptyWord() = default;
  explicit MaybeEmptyWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const MaybeEmptyWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// A nonempty sequence of letters.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);
  explicit Word(const MaybeEmptyWord& residue);  // throws InvalidArgument if empty

  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter first() const { return letters_.front(); }
  Letter last() const { return letters_.back(); }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct Identity {
  Word lhs;
  Word rhs;
  bool operator==(const Identity&) const = default;
};

// Distinct letters of w, sorted by name.
std::vector<Letter> content(const Word& w);
std::vector<Letter> content(const MaybeEmptyWord& w);

// Number of occurrences of v as a factor (contiguous subword) of w.
// Only |v| in {1, 2} is accepted.
std::size_t occ_factor(const Word& v, const Word& w);
std::size_t occ_factor(const Word& v, const MaybeEmptyWord& w);

// w with every occurrence of a letter in ys removed.
MaybeEmptyWord delete_letters(const Word& w, const std::vector<Letter>& ys);
MaybeEmptyWord delete_letters(const MaybeEmptyWord& w, const std::vector<Letter>& ys);

// Whether lhs and rhs use every letter equally often.
bool is_balanced(const Identity& id);

// (first letter, last letter) of w.
std::pair<Letter, Letter> first_last(const Word& w);

}  // namespace kauffman

#endif
