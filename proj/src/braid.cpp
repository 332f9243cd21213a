#include "hilden/braid.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace hilden {

namespace {

void check_strands(int strands) {
  if (strands < 2) throw std::invalid_argument("BraidWord: need >= 2 strands");
}

std::atomic<Convention> g_convention{Convention::RightmostFirst};

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (Letter l : letters_)
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw std::invalid_argument("BraidWord: letter index out of range");
}

BraidWord BraidWord::sigma(int strands, int index, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("BraidWord::sigma: sign must be +-1");
  return BraidWord(strands, {sign > 0 ? Letter(index) : Letter(-index)});
}

BraidWord BraidWord::full_twist(int strands) {
  check_strands(strands);
  BraidWord half(strands);
  for (int i = 1; i < strands; ++i) half *= sigma(strands, i);
  return half.power(strands);
}

BraidWord BraidWord::spherical_relator(int strands) {
  check_strands(strands);
  BraidWord b(strands);
  for (int i = 1; i < strands; ++i) b *= sigma(strands, i);
  for (int i = strands - 1; i >= 1; --i) b *= sigma(strands, i);
  return b;
}

BraidWord BraidWord::inverse() const {
  BraidWord b(strands_);
  b.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    b.letters_.push_back(-*it);
  return b;
}

BraidWord BraidWord::power(int exponent) const {
  const BraidWord base = exponent >= 0 ? *this : inverse();
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (strands_ != rhs.strands_)
    throw std::invalid_argument("BraidWord: strand count mismatch");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

BraidWord syntactic_cancel(const BraidWord& b) {
  std::vector<Letter> buf;
  buf.reserve(b.size());
  for (Letter l : b.letters()) push_reduced(buf, l);
  return BraidWord(b.strands(), std::move(buf));
}

Convention active_convention() { return g_convention.load(); }

void set_convention(Convention c) { g_convention.store(c); }

std::string convention_name(Convention c) {
  return c == Convention::RightmostFirst ? "rightmost-first" : "leftmost-first";
}

Perm perm_of(const BraidWord& b) {
  const int m = b.strands();
  Perm acc(m);
  for (Letter l : b.letters()) {
    const int i = std::abs(l);
    const Perm t = Perm::transposition(m, i, i + 1);
    acc = active_convention() == Convention::RightmostFirst ? compose(acc, t)
                                                            : compose(t, acc);
  }
  return acc;
}

FreeAut artin_action(int strands, int index, int sign) {
  check_strands(strands);
  const int rank = strands - 1;
  if (index < 1 || index > rank)
    throw std::invalid_argument("artin_action: index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("artin_action: sign must be +-1");

  std::vector<FreeWord> fwd, bwd;
  for (int i = 1; i <= rank; ++i) {
    fwd.push_back(FreeWord::generator(rank, i));
    bwd.push_back(FreeWord::generator(rank, i));
  }
  const auto x = [rank](int i) { return FreeWord::generator(rank, i); };

  if (index < rank) {
    fwd[index - 1] = x(index) * x(index + 1) * x(index).inverse();
    fwd[index] = x(index);
    bwd[index - 1] = x(index + 1);
    bwd[index] = x(index + 1).inverse() * x(index) * x(index + 1);
  } else {
    // Last generator: the loop around the final puncture is
    // x_m = (x_1 ... x_{m-1})^-1, and sigma_{m-1} swaps punctures m-1 and m.
    FreeWord prod(rank);
    for (int i = 1; i <= rank; ++i) prod *= x(i);
    fwd[rank - 1] = x(rank) * prod.inverse() * x(rank).inverse();
    bwd[rank - 1] = prod.inverse();
  }

  return sign > 0 ? FreeAut::from_images(std::move(fwd), std::move(bwd))
                  : FreeAut::from_images(std::move(bwd), std::move(fwd));
}

FreeAut gamma(const BraidWord& b) {
  const int rank = b.strands() - 1;
  FreeAut acc = FreeAut::identity(rank);
  for (Letter l : b.letters()) {
    const FreeAut e = artin_action(b.strands(), std::abs(l), l > 0 ? +1 : -1);
    acc = active_convention() == Convention::RightmostFirst ? compose(acc, e)
                                                            : compose(e, acc);
  }
  return acc;
}

std::string NamedElement::str() const {
  switch (tag) {
    case Tag::Sigma:
      return "s" + std::to_string(index);
    case Tag::S:
      return "SS" + std::to_string(index);
    case Tag::R:
      return "RR" + std::to_string(index);
    case Tag::T:
      return "T" + std::to_string(index);
    case Tag::BigR:
      return "R";
    case Tag::BigS:
      return "S";
    case Tag::FullTwist:
      return "FULLTWIST";
  }
  return "?";
}

BraidWord named_word(const NamedElement& e, int n) {
  if (n < 1) throw std::invalid_argument("named_word: need n >= 1");
  const int m = 2 * n + 2;
  const auto sig = [m](int i, int sign = +1) {
    return BraidWord::sigma(m, i, sign);
  };
  switch (e.tag) {
    case NamedElement::Tag::Sigma:
      if (e.index < 1 || e.index > 2 * n + 1)
        throw std::invalid_argument("named_word: sigma index out of range");
      return sig(e.index);
    case NamedElement::Tag::S: {
      const int i = e.index;
      if (i < 1 || i > n)
        throw std::invalid_argument("named_word: s index out of range");
      return sig(2 * i) * sig(2 * i + 1) * sig(2 * i - 1) * sig(2 * i);
    }
    case NamedElement::Tag::R: {
      const int i = e.index;
      if (i < 1 || i > n)
        throw std::invalid_argument("named_word: r index out of range");
      return sig(2 * i, -1) * sig(2 * i + 1, -1) * sig(2 * i - 1) * sig(2 * i);
    }
    case NamedElement::Tag::T: {
      const int j = e.index;
      if (j < 1 || j > n + 1)
        throw std::invalid_argument("named_word: t index out of range");
      return sig(2 * j - 1) * sig(2 * j - 1);
    }
    case NamedElement::Tag::BigR: {
      BraidWord b(m);
      for (int i = 1; i <= 2 * n + 1; i += 2) b *= sig(i);
      return b;
    }
    case NamedElement::Tag::BigS: {
      BraidWord b(m);
      for (int i = n; i >= 1; --i) b *= named_word(NamedElement::s(i), n);
      return b;
    }
    case NamedElement::Tag::FullTwist:
      return BraidWord::full_twist(m);
  }
  throw std::invalid_argument("named_word: unknown tag");
}

BraidWord expand_named(const NamedWord& word, int n) {
  BraidWord out(2 * n + 2);
  for (const auto& [elem, sign] : word) {
    const BraidWord b = named_word(elem, n);
    out *= (sign >= 0 ? b : b.inverse());
  }
  return out;
}

NamedWord inverse_named(const NamedWord& word) {
  NamedWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.emplace_back(it->first, -it->second);
  return out;
}

std::string named_word_str(const NamedWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i].first.str();
    if (word[i].second < 0) out += '\'';
  }
  return out;
}

}  // namespace hilden
