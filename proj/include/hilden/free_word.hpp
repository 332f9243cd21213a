#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hilden {

// A letter is a nonzero signed generator index: +i is x_i, -i is x_i^-1.
using Letter = std::int32_t;

// Freely reduced word in a free group of fixed rank.
//
// Invariants: no adjacent pair x x^-1, every |letter| lies in 1..rank.
// Values are immutable after construction; all operations return new words.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  FreeWord(int rank, std::vector<Letter> letters);

  static FreeWord generator(int rank, int index, int sign = +1);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  FreeWord inverse() const;

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  // Decomposes w = conjugator * core * conjugator^-1 with core cyclically
  // reduced; returns (core, conjugator).
  std::pair<FreeWord, FreeWord> cyclic_reduce() const;

  bool operator==(const FreeWord&) const = default;

  // "x1 x3'" with ' marking inverses; the identity prints as "1".
  std::string str() const;

private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Freely reduces a raw letter sequence. Idempotent and length-nonincreasing.
// Throws std::invalid_argument if a letter index is zero or exceeds rank.
FreeWord free_reduce(int rank, std::span<const Letter> raw);

// Appends one letter to a reduced buffer, cancelling against the back.
inline void push_reduced(std::vector<Letter>& buf, Letter l) {
  if (!buf.empty() && buf.back() == -l) {
    buf.pop_back();
  } else {
    buf.push_back(l);
  }
}

}  // namespace hilden
