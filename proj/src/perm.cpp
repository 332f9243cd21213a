#include "hilden/perm.hpp"

#include <stdexcept>

namespace hilden {

Perm::Perm(int m) {
  if (m < 0) throw std::invalid_argument("Perm: negative size");
  images_.resize(m);
  for (int i = 0; i < m; ++i) images_[i] = i + 1;
}

Perm Perm::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(m, false);
  for (int v : images) {
    if (v < 1 || v > m || seen[v - 1])
      throw std::invalid_argument("Perm: image list is not a bijection");
    seen[v - 1] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::transposition(int m, int a, int b) {
  if (a < 1 || b < 1 || a > m || b > m || a == b)
    throw std::invalid_argument("Perm::transposition: bad points");
  Perm p(m);
  p.images_[a - 1] = b;
  p.images_[b - 1] = a;
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return from_images(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int i = 1; i <= size(); ++i) {
    if (done[i - 1] || images_[i - 1] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!done[j - 1]) {
      if (!first) out += ' ';
      out += std::to_string(j);
      done[j - 1] = true;
      j = images_[j - 1];
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("Perm: size mismatch in product");
  std::vector<int> images(f.size());
  for (int i = 1; i <= f.size(); ++i) images[i - 1] = f(g(i));
  return Perm::from_images(std::move(images));
}

}  // namespace hilden
