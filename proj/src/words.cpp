#include "kauffman/words.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace kauffman {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // deque: stable references on growth
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

Registry& registry() {
  static Registry reg;
  return reg;
}

}  // namespace

Letter Letter::of(std::string_view name) {
  if (name.empty()) {
    throw InvalidArgument("letter name must be nonempty");
  }
  Registry& reg = registry();
  {
    std::shared_lock lock(reg.mutex);
    auto it = reg.ids.find(name);
    if (it != reg.ids.end()) {
      return Letter(it->second);
    }
  }
  std::unique_lock lock(reg.mutex);
  auto it = reg.ids.find(name);
  if (it != reg.ids.end()) {
    return Letter(it->second);
  }
  auto id = static_cast<std::uint32_t>(reg.names.size());
  reg.names.emplace_back(name);
  reg.ids.emplace(reg.names.back(), id);
  return Letter(id);
}

std::string_view Letter::name() const {
  Registry& reg = registry();
  std::shared_lock lock(reg.mutex);
  return reg.names[id_];
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw InvalidArgument("a word must contain at least one letter");
  }
}

Word::Word(const MaybeEmptyWord& residue) : Word(residue.letters()) {}

namespace {

std::vector<Letter> content_of(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_factor(const std::vector<Letter>& v, const std::vector<Letter>& w) {
  if (v.empty() || v.size() > 2) {
    throw InvalidArgument("occ_factor only counts factors of length 1 or 2");
  }
  std::size_t count = 0;
  if (v.size() == 1) {
    for (Letter x : w) {
      count += (x == v[0]);
    }
  } else {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      count += (w[i] == v[0] && w[i + 1] == v[1]);
    }
  }
  return count;
}

std::vector<Letter> erase_letters(const std::vector<Letter>& w, const std::vector<Letter>& ys) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (std::find(ys.begin(), ys.end(), x) == ys.end()) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

std::vector<Letter> content(const Word& w) { return content_of(w.letters()); }
std::vector<Letter> content(const MaybeEmptyWord& w) { return content_of(w.letters()); }

std::size_t occ_factor(const Word& v, const Word& w) {
  return count_factor(v.letters(), w.letters());
}

std::size_t occ_factor(const Word& v, const MaybeEmptyWord& w) {
  return count_factor(v.letters(), w.letters());
}

MaybeEmptyWord delete_letters(const Word& w, const std::vector<Letter>& ys) {
  return MaybeEmptyWord(erase_letters(w.letters(), ys));
}

MaybeEmptyWord delete_letters(const MaybeEmptyWord& w, const std::vector<Letter>& ys) {
  return MaybeEmptyWord(erase_letters(w.letters(), ys));
}

bool is_balanced(const Identity& id) {
  auto counts = [](const Word& w) {
    std::unordered_map<std::uint32_t, std::size_t> m;
    for (Letter x : w.letters()) {
      ++m[x.id()];
    }
    return m;
  };
  return counts(id.lhs) == counts(id.rhs);
}

std::pair<Letter, Letter> first_last(const Word& w) {
  return {w.first(), w.last()};
}

}  // namespace kauffman
