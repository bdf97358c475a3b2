#ifndef THOMPSON_NORMAL_FORM_HPP
#define THOMPSON_NORMAL_FORM_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

#include "thompson/normal_word.hpp"

namespace thompson {

// Merge-based normal forms. Products of seminormal words are sorted by
// two-pointer merges in which a letter crossing the other word bumps the
// pending shift of everything it crosses; the shifts are kept as lazy
// offsets so each letter is touched once.

/// Sorted index run with a lazily applied shift.
struct ShiftedView {
  std::span<const Index> base;
  std::int64_t offset = 0;

  bool empty() const { return base.empty(); }
  /// Materialized head index; throws NegativeIndexError below x0.
  Index head() const;
  void pop_front() { base = base.subspan(1); }
};

/// Seminormal form of shifted(n, neg_shift) * shifted(p, pos_shift), where n
/// is a negative part and p a positive part (both ascending index runs).
SeminormalWord merge_neg_pos(ShiftedView n, ShiftedView p);

/// Sorted positive run equal to shifted(left, ...) * shifted(right, ...).
/// Equal materialized heads keep the left word's letter first.
std::vector<Index> merge_pos_pos(ShiftedView left, ShiftedView right);

/// Mirror image of merge_pos_pos for two negative parts.
std::vector<Index> merge_neg_neg(ShiftedView left, ShiftedView right);

/// Seminormal form of the product of two seminormal words, in linear time.
SeminormalWord merge(const SeminormalWord& w1, const SeminormalWord& w2);

/// Seminormal form of an arbitrary word by halving and merging.
SeminormalWord seminormal_form(const Word& w);

/// The unique normal form of a seminormal word: one middle-out pass that
/// drops index pairs violating the normal-form condition, with the deferred
/// downward shifts replayed from two stacks.
NormalWord erase_bad_pairs(const SeminormalWord& u);

NormalWord normal_form(const Word& w);

/// Normal form of a product of seminormal factors (single erasure at the end).
NormalWord normal_product(std::initializer_list<const SeminormalWord*> factors);

namespace stats {
/// Letters touched by merges and erasure on this thread since the last reset.
std::uint64_t letter_visits();
void reset_letter_visits();
}  // namespace stats

namespace detail {
/// Pending downward shifts for one accumulator run of the erasure pass; one
/// entry per kept letter, replayed as a running sum from the most recent.
class DeltaStack {
public:
  void push(Index letter) {
    letters_.push_back(letter);
    pending_.push_back(0);
  }
  void bump_top() {
    if (!pending_.empty()) {
      ++pending_.back();
    }
  }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Index top_letter() const { return letters_.back(); }
  std::uint64_t top_pending() const { return pending_.back(); }

  /// Letters newest-first with accumulated shifts applied (ascending output).
  std::vector<Index> replay() const;

private:
  std::vector<Index> letters_;
  std::vector<std::uint64_t> pending_;
};

struct ErasureTrace {
  // 1-based positions (positive, negative) of each dropped pair, in order.
  std::vector<std::pair<std::size_t, std::size_t>> dropped;
};

NormalWord erase_bad_pairs_traced(const SeminormalWord& u, ErasureTrace* trace);
}  // namespace detail

}  // namespace thompson

#endif
