#include "thompson/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "thompson/rng.hpp"

namespace thompson::oracle {

namespace {

enum class Rule { None, Cancel, Swap };

struct Step {
  Rule rule = Rule::None;
  Letter first{0, 1};
  Letter second{0, 1};
};

// Rewrite step for the adjacent pair (a, b), if any rule matches.
Step step_at(const Letter& a, const Letter& b) {
  if (a.sign() > 0 && b.sign() > 0) {
    if (a.index() > b.index()) {
      return {Rule::Swap, b, Letter(a.index() + 1, +1)};
    }
  } else if (a.sign() < 0 && b.sign() > 0) {
    if (a.index() == b.index()) {
      return {Rule::Cancel, a, b};
    }
    if (a.index() > b.index()) {
      return {Rule::Swap, b, Letter(a.index() + 1, -1)};
    }
    return {Rule::Swap, Letter(b.index() + 1, +1), a};
  } else if (a.sign() < 0 && b.sign() < 0) {
    if (a.index() < b.index()) {
      return {Rule::Swap, Letter(b.index() + 1, -1), a};
    }
  }
  // positive before negative: no rule
  return {};
}

void apply_step(Word& w, std::size_t at, const Step& step) {
  if (step.rule == Rule::Cancel) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at),
            w.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  } else {
    w[at] = step.first;
    w[at + 1] = step.second;
  }
}

SeminormalWord split_reduced(const Word& w) {
  SeminormalWord out;
  std::size_t i = 0;
  while (i < w.size() && w[i].sign() > 0) {
    out.pos.push_back(w[i].index());
    ++i;
  }
  for (std::size_t j = w.size(); j > i; --j) {
    assert(w[j - 1].sign() < 0);
    out.neg.push_back(w[j - 1].index());
  }
  assert(has_sorted_parts(out));
  return out;
}

}  // namespace

SeminormalWord oracle_seminormal(const Word& input) {
  Word w = input;
  // A rewrite at position i can only enable a new rule at i-1 or i, so the
  // scan resumes there; the sequence of applied rules is still exactly the
  // leftmost-first one.
  std::size_t i = 0;
  while (w.size() >= 2 && i + 1 < w.size()) {
    const Step step = step_at(w[i], w[i + 1]);
    if (step.rule == Rule::None) {
      ++i;
    } else {
      apply_step(w, i, step);
      i = (i == 0) ? 0 : i - 1;
    }
  }
  return split_reduced(w);
}

SeminormalWord oracle_seminormal_randomized(const Word& input,
                                            std::uint64_t seed) {
  Word w = input;
  SplitMix64 rng(seed);
  std::vector<std::size_t> applicable;
  for (;;) {
    applicable.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (step_at(w[i], w[i + 1]).rule != Rule::None) {
        applicable.push_back(i);
      }
    }
    if (applicable.empty()) {
      break;
    }
    const std::size_t at =
        applicable[rng.next_below(applicable.size())];
    apply_step(w, at, step_at(w[at], w[at + 1]));
  }
  return split_reduced(w);
}

NormalWord oracle_normal(const Word& input) {
  SeminormalWord w = oracle_seminormal(input);
  for (;;) {
    // Innermost violating pair: the largest index occurring with both signs
    // and not followed by index+1, at its last occurrence in each part.
    bool changed = false;
    for (std::size_t a = w.pos.size(); a > 0 && !changed; --a) {
      const Index v = w.pos[a - 1];
      if (a < w.pos.size() && w.pos[a] == v) {
        continue;  // not the last occurrence
      }
      if (!std::binary_search(w.neg.begin(), w.neg.end(), v)) {
        continue;
      }
      if (std::binary_search(w.pos.begin(), w.pos.end(), v + 1) ||
          std::binary_search(w.neg.begin(), w.neg.end(), v + 1)) {
        continue;  // next index occurs, pair is fine
      }
      const std::size_t b =
          static_cast<std::size_t>(
              std::upper_bound(w.neg.begin(), w.neg.end(), v) -
              w.neg.begin()) - 1;
      // drop both letters and shift the enclosed segment down by one
      w.pos.erase(w.pos.begin() + static_cast<std::ptrdiff_t>(a - 1));
      w.neg.erase(w.neg.begin() + static_cast<std::ptrdiff_t>(b));
      for (std::size_t k = a - 1; k < w.pos.size(); ++k) {
        --w.pos[k];
      }
      for (std::size_t k = b; k < w.neg.size(); ++k) {
        --w.neg[k];
      }
      assert(has_sorted_parts(w));
      changed = true;
    }
    if (!changed) {
      break;
    }
  }
  return NormalWord::from_parts(std::move(w.pos), std::move(w.neg));
}

}  // namespace thompson::oracle
