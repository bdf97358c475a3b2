#include "thompson/normal_word.hpp"

#include <algorithm>

namespace thompson {

bool has_sorted_parts(const SeminormalWord& w) {
  return std::is_sorted(w.pos.begin(), w.pos.end()) &&
         std::is_sorted(w.neg.begin(), w.neg.end());
}

SeminormalWord inverse(const SeminormalWord& w) {
  // (p n)^{-1} = n^{-1} p^{-1}: the parts swap roles and stay sorted.
  return SeminormalWord{w.neg, w.pos};
}

SeminormalWord shifted(const SeminormalWord& w, std::int64_t offset) {
  auto shift_run = [offset](const std::vector<Index>& run) {
    std::vector<Index> out;
    out.reserve(run.size());
    for (Index i : run) {
      const auto moved = static_cast<std::int64_t>(i) + offset;
      if (moved < 0) {
        throw NegativeIndexError("shift by " + std::to_string(offset) +
                                 " takes x" + std::to_string(i) + " below x0");
      }
      out.push_back(static_cast<Index>(moved));
    }
    return out;
  };
  return SeminormalWord{shift_run(w.pos), shift_run(w.neg)};
}

Word as_word(const SeminormalWord& w) {
  Word out;
  out.reserve(w.length());
  for (Index i : w.pos) {
    out.emplace_back(i, +1);
  }
  for (auto it = w.neg.rbegin(); it != w.neg.rend(); ++it) {
    out.emplace_back(*it, -1);
  }
  return out;
}

std::string normal_form_violation(const std::vector<Index>& pos,
                                  const std::vector<Index>& neg) {
  if (!std::is_sorted(pos.begin(), pos.end()) ||
      !std::is_sorted(neg.begin(), neg.end())) {
    return "index runs are not sorted";
  }
  for (const std::vector<Index>* run : {&pos, &neg}) {
    for (Index i : *run) {
      if (i > kIndexCap) {
        return "index " + std::to_string(i) + " exceeds the index cap";
      }
    }
  }
  // every index occurring with both signs must be followed by index+1
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < pos.size() && b < neg.size()) {
    if (pos[a] < neg[b]) {
      ++a;
    } else if (neg[b] < pos[a]) {
      ++b;
    } else {
      const Index i = pos[a];
      if (!std::binary_search(pos.begin(), pos.end(), i + 1) &&
          !std::binary_search(neg.begin(), neg.end(), i + 1)) {
        return "x" + std::to_string(i) +
               " occurs with both signs but x" + std::to_string(i + 1) +
               " does not occur";
      }
      while (a < pos.size() && pos[a] == i) ++a;
      while (b < neg.size() && neg[b] == i) ++b;
    }
  }
  return {};
}

NormalWord NormalWord::from_parts(std::vector<Index> pos,
                                  std::vector<Index> neg) {
  if (auto why = normal_form_violation(pos, neg); !why.empty()) {
    throw NotNormalError("not a normal form: " + why);
  }
  NormalWord out;
  out.body_.pos = std::move(pos);
  out.body_.neg = std::move(neg);
  return out;
}

NormalWord inverse(const NormalWord& w) {
  return NormalWord::from_parts(w.neg(), w.pos());
}

Word as_word(const NormalWord& w) { return as_word(w.body()); }

}  // namespace thompson
