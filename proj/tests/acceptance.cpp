// Acceptance suite: ten checks, one PASS/FAIL line each, exit 0 only if all
// pass.  Time limits and corpus sizes are pinned here on purpose.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "kauffman/idcheck.hpp"
#include "kauffman/jones.hpp"
#include "kauffman/kauffman.hpp"
#include "kauffman/parse.hpp"
#include "kauffman/rees.hpp"
#include "kauffman/verify.hpp"

using namespace kauffman;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool emit(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion-%02d %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " ", detail.c_str());
  std::fflush(stdout);
  return pass;
}

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

Word random_word(std::mt19937& rng, const std::string& alphabet, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<Letter> v;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    v.push_back(Letter::of(std::string(1, alphabet[pick(rng)])));
  }
  return Word(v);
}

bool criterion_cardinalities() {
  auto start = Clock::now();
  const std::vector<std::size_t> expected{2, 5, 14, 42, 132, 429};
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    ok = ok && enumerate_jones(n).size() == expected[static_cast<std::size_t>(n - 2)];
  }
  double t = seconds_since(start);
  ok = ok && t < 10.0;
  return emit(1, "jones-cardinalities", ok, "2,5,14,42,132,429 t=" + fmt(t) + "s<10s");
}

bool criterion_relations() {
  auto start = Clock::now();
  Report report = verify_relations(6);
  double t = seconds_since(start);
  bool ok = report.all_pass() && t < 1.0;
  return emit(2, "generator-relations-rank2..6", ok,
              std::to_string(report.checks.size()) + " checks t=" + fmt(t) + "s<1s");
}

bool criterion_cutting() {
  auto start = Clock::now();
  Report j4 = verify_cutting_j4();
  Report k4 = verify_cutting_k4(-3, 3);
  double t = seconds_since(start);
  bool ok = j4.all_pass() && k4.all_pass() && t < 1.0;
  return emit(3, "cutting-endomorphisms", ok,
              "169 flat pairs + 169x49 circle pairs t=" + fmt(t) + "s<1s");
}

bool criterion_structure() {
  auto start = Clock::now();
  Report j4 = verify_structure_j4();
  Report k4 = verify_structure_ext_k4(-3, 3);
  double t = seconds_since(start);
  bool ok = j4.all_pass() && k4.all_pass() && t < 1.0;
  return emit(4, "subdirect-decompositions", ok, "t=" + fmt(t) + "s<1s");
}

bool criterion_rank5_counterexample() {
  Report report = verify_k5_counterexample();
  return emit(5, "rank5-counterexample", report.all_pass(),
              "x->h1h2h3 y->h4 splits xxyx from xyxx");
}

struct Corpus {
  std::vector<Identity> accepted;
  std::vector<Identity> rejected;
};

bool criterion_checker_oracle(Corpus& corpus) {
  auto start = Clock::now();
  std::vector<Word> exhaustive;
  const std::vector<Letter> ab{Letter::of("x"), Letter::of("y")};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& stem : frontier) {
      for (Letter a : ab) {
        auto v = stem;
        v.push_back(a);
        exhaustive.emplace_back(v);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }

  long long disagreements = 0;
  long long tested = 0;
  auto compare = [&](const Identity& id) {
    Verdict counts = check_k3_k4(id);
    Verdict sets = check_j4(id);
    ++tested;
    if (counts.holds != oracle_all_Y(id, FactorMode::Counts).holds ||
        sets.holds != oracle_all_Y(id, FactorMode::Sets).holds) {
      ++disagreements;
      return;
    }
    (counts.holds ? corpus.accepted : corpus.rejected).push_back(id);
  };

  for (const Word& lhs : exhaustive) {
    for (const Word& rhs : exhaustive) {
      compare(Identity{lhs, rhs});
    }
  }
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 10000; ++trial) {
    compare(Identity{random_word(rng, "wxyz", 1, 12), random_word(rng, "wxyz", 1, 12)});
  }
  double t = seconds_since(start);
  bool ok = disagreements == 0 && t < 60.0;
  return emit(6, "checker-equals-deletion-oracle", ok,
              std::to_string(tested) + " identities, " + std::to_string(disagreements) +
                  " disagreements t=" + fmt(t) + "s<60s");
}

bool criterion_j4_ground_truth() {
  auto start = Clock::now();
  JonesMonoid j4(4);
  std::vector<int> indices;
  for (int i = 0; i < j4.size(); ++i) {
    indices.push_back(i);
  }
  auto mul = [&](int a, int b) { return j4.product(a, b); };
  auto print = [&](int i) { return to_literal(j4.element(i).diagram()); };

  std::mt19937 rng(8140826);
  long long disagreements = 0;
  const int trials = 1000;
  for (int trial = 0; trial < trials; ++trial) {
    Identity id{random_word(rng, "xyz", 1, 10), random_word(rng, "xyz", 1, 10)};
    bool brute = oracle_finite_monoid(id, "J4", indices, mul, print).holds;
    if (check_j4(id).holds != brute) {
      ++disagreements;
    }
  }
  double t = seconds_since(start);
  bool ok = disagreements == 0 && t < 60.0;
  return emit(7, "j4-checker-equals-brute-force", ok,
              std::to_string(trials) + " identities, " + std::to_string(disagreements) +
                  " disagreements t=" + fmt(t) + "s<60s");
}

bool criterion_rejections_witnessed(const Corpus& corpus) {
  const RmsSemigroup& s = RmsSemigroup::witness_semigroup();
  long long witnessed = 0;
  for (const Identity& id : corpus.rejected) {
    Verdict v = check_k3_k4(id);
    if (v.holds || !v.witness.has_value()) {
      continue;
    }
    const auto* cw = std::get_if<ConditionWitness>(&*v.witness);
    if (cw == nullptr) {
      continue;
    }
    Identity residual = residual_identity(id, *cw);
    auto w = witness_rms(residual);
    if (w.has_value() && !(s.evaluate(residual.lhs, w->substitution) ==
                           s.evaluate(residual.rhs, w->substitution))) {
      ++witnessed;
    }
  }
  bool ok = witnessed == static_cast<long long>(corpus.rejected.size());
  return emit(8, "every-rejection-rms-witnessed", ok,
              std::to_string(witnessed) + "/" + std::to_string(corpus.rejected.size()));
}

bool criterion_accepted_unfalsified(const Corpus& corpus) {
  long long falsified = 0;
  for (const Identity& id : corpus.accepted) {
    if (falsify_kn(id, 4, 10000).has_value()) {
      ++falsified;
    }
  }
  bool ok = falsified == 0;
  return emit(9, "no-accepted-identity-falsified-at-rank4", ok,
              std::to_string(corpus.accepted.size()) + " identities, budget 10000 each, " +
                  std::to_string(falsified) + " falsified");
}

bool criterion_performance() {
  std::mt19937 rng(424242);
  auto sample = [&](std::size_t side_len) {
    std::vector<Letter> lhs, rhs;
    std::uniform_int_distribution<int> pick(0, 9);
    for (std::size_t i = 0; i < side_len; ++i) {
      lhs.push_back(Letter::of(std::string(1, "abcdefghij"[pick(rng)])));
      rhs.push_back(Letter::of(std::string(1, "abcdefghij"[pick(rng)])));
    }
    // align the ends so the comparison has to look at whole profiles
    rhs.front() = lhs.front();
    rhs.back() = lhs.back();
    return Identity{Word(lhs), Word(rhs)};
  };
  auto timed = [&](const Identity& id) {
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = Clock::now();
      profile(id.lhs);
      profile(id.rhs);
      check_k3_k4(id);
      best = std::min(best, seconds_since(start));
    }
    return best;
  };
  Identity base = sample(100000);
  Identity doubled = sample(200000);
  double t_base = timed(base);
  double t_doubled = timed(doubled);
  double ratio = t_doubled / t_base;
  bool ok = t_base < 5.0 && ratio < 3.0;
  return emit(10, "profile-scales-subquadratically", ok,
              "k=10 |ww'|=2e5 t=" + fmt(t_base) + "s<5s, doubled ratio=" + fmt(ratio) + "<3");
}

}  // namespace

int main() {
  Corpus corpus;
  bool ok = true;
  ok &= criterion_cardinalities();
  ok &= criterion_relations();
  ok &= criterion_cutting();
  ok &= criterion_structure();
  ok &= criterion_rank5_counterexample();
  ok &= criterion_checker_oracle(corpus);
  ok &= criterion_j4_ground_truth();
  ok &= criterion_rejections_witnessed(corpus);
  ok &= criterion_accepted_unfalsified(corpus);
  ok &= criterion_performance();
  return ok ? 0 : 1;
}
