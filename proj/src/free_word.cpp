#include "hilden/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hilden {

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("FreeWord: negative rank");
}

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : FreeWord(rank) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || l > rank || l < -rank)
      throw std::invalid_argument("FreeWord: letter index out of range");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank)
    throw std::invalid_argument("FreeWord::generator: index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("FreeWord::generator: sign must be +-1");
  FreeWord w(rank);
  w.letters_.push_back(sign > 0 ? Letter(index) : Letter(-index));
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  if (rank_ != rhs.rank_)
    throw std::invalid_argument("FreeWord: rank mismatch in product");
  for (Letter l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

std::pair<FreeWord, FreeWord> FreeWord::cyclic_reduce() const {
  std::size_t lo = 0, hi = letters_.size();
  FreeWord conj(rank_);
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    conj.letters_.push_back(letters_[lo]);
    ++lo;
    --hi;
  }
  FreeWord core(rank_);
  core.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return {core, conj};
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(letters_[i]));
    if (letters_[i] < 0) out += '\'';
  }
  return out;
}

FreeWord free_reduce(int rank, std::span<const Letter> raw) {
  return FreeWord(rank, std::vector<Letter>(raw.begin(), raw.end()));
}

}  // namespace hilden
