#ifndef THOMPSON_WORD_HPP
#define THOMPSON_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

using Index = std::uint64_t;

// Indices live in [0, kIndexCap]. Rewriting raises an index by at most one
// per crossed letter, so any input that fits in memory stays far below the
// cap; the constructor check turns an impossible wraparound into an error.
inline constexpr Index kIndexCap = Index{1} << 62;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeIndexError : Error {
  using Error::Error;
};

struct IndexCapError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// One signed generator occurrence x_i or x_i^{-1}.
class Letter {
public:
  Letter(Index index, int sign);

  Index index() const { return index_; }
  int sign() const { return sign_; }

  Letter inverse() const { return Letter(index_, -sign_); }

  bool operator==(const Letter&) const = default;

private:
  Index index_;
  int sign_;  // +1 or -1
};

/// An arbitrary, not necessarily reduced, string in the generators.
using Word = std::vector<Letter>;

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word shifted(const Word& w, std::int64_t offset);

// Text syntax: whitespace-separated tokens `x<k>` and `x<k>^-1`.
// The empty word may be written `1`.
Word parse_word(std::string_view text);
std::string to_text(const Letter& letter);
std::string to_text(const Word& w);

}  // namespace thompson

#endif
