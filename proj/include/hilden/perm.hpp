#pragma once

#include <string>
#include <vector>

namespace hilden {

// Permutation of {1..m}, stored as the image list. All indices 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(int m);  // identity
  static Perm from_images(std::vector<int> images);
  static Perm transposition(int m, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;

  // Disjoint cycle notation, e.g. "(1 3)(2 4)"; identity prints "()".
  std::string cycles() const;

private:
  std::vector<int> images_;
};

// Product under the convention that g acts first: compose(f, g)(i) = f(g(i)).
Perm compose(const Perm& f, const Perm& g);

}  // namespace hilden
