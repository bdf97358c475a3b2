#ifndef THOMPSON_NORMAL_WORD_HPP
#define THOMPSON_NORMAL_WORD_HPP

#include <cstddef>
#include <vector>

#include "thompson/word.hpp"

namespace thompson {

struct NotNormalError : Error {
  using Error::Error;
};

/// Positive-then-negative word with both index runs stored ascending.
/// (pos, neg) denotes x_{pos[0]} ... x_{pos[s-1]} x_{neg[t-1]}^{-1} ... x_{neg[0]}^{-1};
/// note the negative part is written in reversed index order.
struct SeminormalWord {
  std::vector<Index> pos;
  std::vector<Index> neg;

  std::size_t length() const { return pos.size() + neg.size(); }
  bool empty() const { return pos.empty() && neg.empty(); }

  bool operator==(const SeminormalWord&) const = default;
};

/// True iff both parts are sorted ascending.
bool has_sorted_parts(const SeminormalWord& w);

SeminormalWord inverse(const SeminormalWord& w);
SeminormalWord shifted(const SeminormalWord& w, std::int64_t offset);
Word as_word(const SeminormalWord& w);

/// Canonical representative of a group element: a seminormal word where every
/// index occurring with both signs is followed by an occurrence of the next
/// index (with either sign). Two NormalWords are equal in the group iff they
/// compare equal componentwise.
class NormalWord {
public:
  NormalWord() = default;  // identity

  /// Validates the normal-form conditions; throws NotNormalError otherwise.
  static NormalWord from_parts(std::vector<Index> pos, std::vector<Index> neg);

  const std::vector<Index>& pos() const { return body_.pos; }
  const std::vector<Index>& neg() const { return body_.neg; }
  const SeminormalWord& body() const { return body_; }

  std::size_t length() const { return body_.length(); }
  bool empty() const { return body_.empty(); }

  bool operator==(const NormalWord&) const = default;

private:
  SeminormalWord body_;
};

NormalWord inverse(const NormalWord& w);
Word as_word(const NormalWord& w);

/// Reason a (pos, neg) pair fails the normal-form check, or empty if it holds.
std::string normal_form_violation(const std::vector<Index>& pos,
                                  const std::vector<Index>& neg);

}  // namespace thompson

#endif
