#include "thompson/normal_form.hpp"

#include <cassert>

namespace thompson {

namespace {

thread_local std::uint64_t g_letter_visits = 0;

Index materialize(Index base, std::int64_t offset) {
  const auto moved = static_cast<std::int64_t>(base) + offset;
  if (moved < 0) {
    throw NegativeIndexError("shift by " + std::to_string(offset) +
                             " takes x" + std::to_string(base) + " below x0");
  }
  return static_cast<Index>(moved);
}

}  // namespace

namespace stats {
std::uint64_t letter_visits() { return g_letter_visits; }
void reset_letter_visits() { g_letter_visits = 0; }
}  // namespace stats

Index ShiftedView::head() const { return materialize(base.front(), offset); }

SeminormalWord merge_neg_pos(ShiftedView n, ShiftedView p) {
  SeminormalWord out;
  out.neg.reserve(n.base.size());
  out.pos.reserve(p.base.size());
  std::uint64_t visited = 0;
  while (!n.empty() && !p.empty()) {
    const Index jh = n.head();
    const Index ih = p.head();
    if (jh == ih) {
      // adjacent x_j^{-1} x_i with equal indices cancel
      n.pop_front();
      p.pop_front();
      visited += 2;
    } else if (jh < ih) {
      // smallest index: x_jh^{-1} moves to the far right, bumping every
      // positive letter it crosses
      out.neg.push_back(jh);
      n.pop_front();
      ++p.offset;
      ++visited;
    } else {
      out.pos.push_back(ih);
      p.pop_front();
      ++n.offset;
      ++visited;
    }
  }
  for (; !n.empty(); n.pop_front()) {
    out.neg.push_back(n.head());
    ++visited;
  }
  for (; !p.empty(); p.pop_front()) {
    out.pos.push_back(p.head());
    ++visited;
  }
  g_letter_visits += visited;
  return out;
}

std::vector<Index> merge_pos_pos(ShiftedView left, ShiftedView right) {
  std::vector<Index> out;
  out.reserve(left.base.size() + right.base.size());
  std::uint64_t visited = 0;
  while (!left.empty() && !right.empty()) {
    const Index lh = left.head();
    const Index rh = right.head();
    if (lh <= rh) {
      out.push_back(lh);
      left.pop_front();
    } else {
      // a right letter crossing the remaining left suffix bumps all of it
      out.push_back(rh);
      right.pop_front();
      ++left.offset;
    }
    ++visited;
  }
  for (; !left.empty(); left.pop_front()) {
    out.push_back(left.head());
    ++visited;
  }
  for (; !right.empty(); right.pop_front()) {
    out.push_back(right.head());
    ++visited;
  }
  g_letter_visits += visited;
  return out;
}

std::vector<Index> merge_neg_neg(ShiftedView left, ShiftedView right) {
  std::vector<Index> out;
  out.reserve(left.base.size() + right.base.size());
  std::uint64_t visited = 0;
  while (!left.empty() && !right.empty()) {
    const Index lh = left.head();
    const Index rh = right.head();
    if (lh < rh) {
      // a left letter moving right past the remaining right suffix bumps it
      out.push_back(lh);
      left.pop_front();
      ++right.offset;
    } else {
      out.push_back(rh);
      right.pop_front();
    }
    ++visited;
  }
  for (; !left.empty(); left.pop_front()) {
    out.push_back(left.head());
    ++visited;
  }
  for (; !right.empty(); right.pop_front()) {
    out.push_back(right.head());
    ++visited;
  }
  g_letter_visits += visited;
  return out;
}

SeminormalWord merge(const SeminormalWord& w1, const SeminormalWord& w2) {
  // sort out the middle n_1 p_2 first, then fold the leftover parts in
  SeminormalWord mid = merge_neg_pos({w1.neg}, {w2.pos});
  SeminormalWord out;
  out.pos = merge_pos_pos({w1.pos}, {mid.pos});
  out.neg = merge_neg_neg({mid.neg}, {w2.neg});
  return out;
}

namespace {

SeminormalWord seminormal_of_span(std::span<const Letter> w) {
  if (w.empty()) {
    return {};
  }
  if (w.size() == 1) {
    SeminormalWord out;
    if (w.front().sign() > 0) {
      out.pos.push_back(w.front().index());
    } else {
      out.neg.push_back(w.front().index());
    }
    ++g_letter_visits;
    return out;
  }
  const std::size_t half = (w.size() + 1) / 2;
  SeminormalWord left = seminormal_of_span(w.first(half));
  SeminormalWord right = seminormal_of_span(w.subspan(half));
  return merge(left, right);
}

}  // namespace

SeminormalWord seminormal_form(const Word& w) {
  return seminormal_of_span({w.data(), w.size()});
}

NormalWord erase_bad_pairs(const SeminormalWord& u) {
  return detail::erase_bad_pairs_traced(u, nullptr);
}

namespace detail {

std::vector<Index> DeltaStack::replay() const {
  std::vector<Index> out;
  out.reserve(letters_.size());
  std::uint64_t shift = 0;
  for (std::size_t i = letters_.size(); i > 0; --i) {
    shift += pending_[i - 1];
    assert(letters_[i - 1] >= shift);
    out.push_back(letters_[i - 1] - shift);
  }
  g_letter_visits += letters_.size();
  return out;
}

NormalWord erase_bad_pairs_traced(const SeminormalWord& u,
                                  ErasureTrace* trace) {
  assert(has_sorted_parts(u));
  std::size_t s = u.pos.size();
  std::size_t t = u.neg.size();
  DeltaStack kept_pos;
  DeltaStack kept_neg;
  std::uint64_t visited = 0;

  // consume both parts from the middle of the word outward
  while (s > 0 || t > 0) {
    if (s > 0 && (t == 0 || u.pos[s - 1] > u.neg[t - 1])) {
      kept_pos.push(u.pos[s - 1]);
      --s;
      ++visited;
      continue;
    }
    if (t > 0 && (s == 0 || u.neg[t - 1] > u.pos[s - 1])) {
      kept_neg.push(u.neg[t - 1]);
      --t;
      ++visited;
      continue;
    }
    // equal head indices: the pair stays only if some already-kept letter
    // will end up at this index or the next one; effective indices are the
    // stored letters minus their pending shifts
    const Index v = u.pos[s - 1];
    bool anchored = false;
    if (!kept_pos.empty()) {
      const Index effective = kept_pos.top_letter() - kept_pos.top_pending();
      anchored = (effective == v || effective == v + 1);
    }
    if (!anchored && !kept_neg.empty()) {
      const Index effective = kept_neg.top_letter() - kept_neg.top_pending();
      anchored = (effective == v || effective == v + 1);
    }
    if (anchored) {
      kept_pos.push(v);
      kept_neg.push(v);
    } else {
      // drop the pair; everything kept so far sits inside it and owes one
      // more downward shift
      kept_pos.bump_top();
      kept_neg.bump_top();
      if (trace != nullptr) {
        trace->dropped.emplace_back(s, t);
      }
    }
    --s;
    --t;
    visited += 2;
  }
  g_letter_visits += visited;
  return NormalWord::from_parts(kept_pos.replay(), kept_neg.replay());
}

}  // namespace detail

NormalWord normal_form(const Word& w) {
  return erase_bad_pairs(seminormal_form(w));
}

NormalWord normal_product(
    std::initializer_list<const SeminormalWord*> factors) {
  SeminormalWord acc;
  for (const SeminormalWord* f : factors) {
    acc = merge(acc, *f);
  }
  return erase_bad_pairs(acc);
}

}  // namespace thompson
