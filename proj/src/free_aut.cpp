#include "hilden/free_aut.hpp"

#include <cstdlib>

namespace hilden {

namespace {

void append_image(std::vector<Letter>& buf, const FreeWord& im, bool inverted) {
  const auto& ls = im.letters();
  if (!inverted) {
    for (Letter l : ls) push_reduced(buf, l);
  } else {
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push_reduced(buf, -*it);
  }
}

FreeWord power_of_generator(int rank, int index, int exponent) {
  FreeWord w(rank);
  FreeWord g = FreeWord::generator(rank, index, exponent >= 0 ? +1 : -1);
  for (int i = 0; i < std::abs(exponent); ++i) w *= g;
  return w;
}

}  // namespace

FreeWord apply_table(const std::vector<FreeWord>& table, const FreeWord& w) {
  std::vector<Letter> buf;
  for (Letter l : w.letters()) {
    const int idx = std::abs(l);
    if (idx > static_cast<int>(table.size()))
      throw std::invalid_argument("apply_table: rank mismatch");
    append_image(buf, table[idx - 1], l < 0);
  }
  return FreeWord(w.rank(), std::move(buf));
}

FreeAut FreeAut::identity(int rank) {
  FreeAut a;
  a.rank_ = rank;
  a.images_.reserve(rank);
  a.inv_images_.reserve(rank);
  for (int i = 1; i <= rank; ++i) {
    a.images_.push_back(FreeWord::generator(rank, i));
    a.inv_images_.push_back(FreeWord::generator(rank, i));
  }
  return a;
}

FreeAut FreeAut::inner(const FreeWord& w) {
  const int rank = w.rank();
  FreeAut a;
  a.rank_ = rank;
  const FreeWord winv = w.inverse();
  for (int i = 1; i <= rank; ++i) {
    const FreeWord x = FreeWord::generator(rank, i);
    a.images_.push_back(w * x * winv);
    a.inv_images_.push_back(winv * x * w);
  }
  return a;
}

FreeAut FreeAut::from_images(std::vector<FreeWord> images,
                             std::vector<FreeWord> inverse_images) {
  if (images.size() != inverse_images.size() || images.empty())
    throw std::invalid_argument("FreeAut: image table sizes disagree");
  const int rank = static_cast<int>(images.size());
  for (const auto& w : images)
    if (w.rank() != rank)
      throw std::invalid_argument("FreeAut: image rank mismatch");
  for (const auto& w : inverse_images)
    if (w.rank() != rank)
      throw std::invalid_argument("FreeAut: inverse image rank mismatch");
  for (int i = 1; i <= rank; ++i) {
    const FreeWord x = FreeWord::generator(rank, i);
    if (apply_table(inverse_images, images[i - 1]) != x ||
        apply_table(images, inverse_images[i - 1]) != x)
      throw std::invalid_argument("FreeAut: tables are not mutually inverse");
  }
  FreeAut a;
  a.rank_ = rank;
  a.images_ = std::move(images);
  a.inv_images_ = std::move(inverse_images);
  return a;
}

FreeAut FreeAut::inverse() const {
  FreeAut a;
  a.rank_ = rank_;
  a.images_ = inv_images_;
  a.inv_images_ = images_;
  return a;
}

FreeWord FreeAut::apply(const FreeWord& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("FreeAut::apply: rank mismatch");
  return apply_table(images_, w);
}

FreeWord FreeAut::puncture_loop_image(int i) const {
  if (i < 1 || i > rank_ + 1)
    throw std::invalid_argument("puncture_loop_image: index out of range");
  if (i <= rank_) return images_[i - 1];
  FreeWord prod(rank_);
  for (const auto& im : images_) prod *= im;
  return prod.inverse();
}

namespace {

// A puncture loop is conjugate either to a generator x_g (loop around
// puncture g) or to (x_1 ... x_rank)^-1 (loop around the last puncture,
// whose cyclic word is the descending run of inverse letters).
int classify_loop(const FreeWord& w, int rank) {
  auto [core, conj] = w.cyclic_reduce();
  const auto& ls = core.letters();
  if (ls.size() == 1 && ls[0] > 0) return ls[0];
  if (static_cast<int>(ls.size()) == rank) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < ls.size(); ++j) {
      if (ls[j] >= 0) ok = false;
    }
    for (std::size_t j = 0; ok && j < ls.size(); ++j) {
      const int d = -ls[j];
      const int next = -ls[(j + 1) % ls.size()];
      if (next != (d == 1 ? rank : d - 1)) ok = false;
    }
    if (ok) return rank + 1;
  }
  return 0;
}

}  // namespace

bool FreeAut::is_puncture_shaped() const {
  for (int i = 1; i <= rank_ + 1; ++i)
    if (classify_loop(puncture_loop_image(i), rank_) == 0) return false;
  return true;
}

Perm FreeAut::puncture_perm() const {
  std::vector<int> images(rank_ + 1);
  for (int i = 1; i <= rank_ + 1; ++i) {
    const int g = classify_loop(puncture_loop_image(i), rank_);
    if (g == 0)
      throw NotPunctureShaped("puncture loop " + std::to_string(i) +
                              " is not sent to a puncture loop");
    images[i - 1] = g;
  }
  try {
    return Perm::from_images(std::move(images));
  } catch (const std::invalid_argument&) {
    throw NotPunctureShaped("puncture images are not a permutation");
  }
}

std::optional<FreeWord> FreeAut::common_conjugator() const {
  if (rank_ == 0) return FreeWord(0);

  // Peel image(x_1) = u x_1 u^-1; otherwise no conjugator exists.
  auto [core, u] = images_[0].cyclic_reduce();
  if (core.letters() != std::vector<Letter>{1}) return std::nullopt;
  if (rank_ == 1) return u;

  // Composing with conjugation by u^-1 fixes x_1, so the remaining freedom
  // is a power x_1^a. The exponent is visible as the leading x_1-run of the
  // residual image of x_2 (its length is bounded by half the image length).
  const FreeWord residual = u.inverse() * images_[1] * u;
  int a = 0;
  for (Letter l : residual.letters()) {
    if (l == 1 && a >= 0)
      ++a;
    else if (l == -1 && a <= 0)
      --a;
    else
      break;
  }

  const FreeWord w = u * power_of_generator(rank_, 1, a);
  const FreeWord winv = w.inverse();
  for (int i = 1; i <= rank_; ++i) {
    if (images_[i - 1] != w * FreeWord::generator(rank_, i) * winv)
      return std::nullopt;
  }
  return w;
}

FreeAut compose(const FreeAut& f, const FreeAut& g) {
  if (f.rank_ != g.rank_)
    throw std::invalid_argument("compose: rank mismatch");
  FreeAut a;
  a.rank_ = f.rank_;
  a.images_.reserve(f.rank_);
  a.inv_images_.reserve(f.rank_);
  for (int i = 0; i < f.rank_; ++i)
    a.images_.push_back(apply_table(f.images_, g.images_[i]));
  for (int i = 0; i < f.rank_; ++i)
    a.inv_images_.push_back(apply_table(g.inv_images_, f.inv_images_[i]));
  return a;
}

bool out_equal(const FreeAut& f, const FreeAut& g) {
  if (f.rank() != g.rank())
    throw std::invalid_argument("out_equal: rank mismatch");
  return compose(f, g.inverse()).common_conjugator().has_value();
}

}  // namespace hilden
