#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hilden/free_word.hpp"
#include "hilden/perm.hpp"

namespace hilden {

// Raised when an automorphism does not act like a mapping class of the
// marked sphere (some puncture loop is not sent to a puncture loop).
struct NotPunctureShaped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Automorphism of the free group F_rank, given by the images of the
// generators. The inverse images travel with the value so that inversion is
// exact and O(1); every constructor knows the inverse of what it builds.
//
// Mapping classes of the sphere with rank+1 marked points are represented by
// such automorphisms up to inner automorphism, with the loop around the last
// puncture being x_{rank+1} := (x_1 ... x_rank)^-1.
class FreeAut {
public:
  static FreeAut identity(int rank);
  // Conjugation x |-> w x w^-1.
  static FreeAut inner(const FreeWord& w);
  // Validates that the two tables are mutually inverse.
  static FreeAut from_images(std::vector<FreeWord> images,
                             std::vector<FreeWord> inverse_images);

  int rank() const { return rank_; }
  const FreeWord& image(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<FreeWord>& images() const { return images_; }

  FreeAut inverse() const;

  // Substitutes each letter of w by its image and freely reduces.
  FreeWord apply(const FreeWord& w) const;

  // Image of the loop around puncture i in 1..rank+1.
  FreeWord puncture_loop_image(int i) const;

  // The induced permutation of the rank+1 punctures.
  // Throws NotPunctureShaped if some image is not conjugate to a puncture loop.
  Perm puncture_perm() const;
  bool is_puncture_shaped() const;

  // A word w with image(x_i) = w x_i w^-1 for every i (hence also for the
  // last puncture loop), or nullopt when the automorphism is not inner.
  // The returned conjugator is the shortest one.
  std::optional<FreeWord> common_conjugator() const;

  bool operator==(const FreeAut&) const = default;

private:
  FreeAut() = default;
  int rank_ = 0;
  std::vector<FreeWord> images_;
  std::vector<FreeWord> inv_images_;

  friend FreeAut compose(const FreeAut&, const FreeAut&);
};

// Substitution by a bare image table (no inverse tracking).
FreeWord apply_table(const std::vector<FreeWord>& table, const FreeWord& w);

// Product under "g acts first": compose(f, g).apply(w) = f.apply(g.apply(w)).
FreeAut compose(const FreeAut& f, const FreeAut& g);

// True iff f and g differ by an inner automorphism, i.e. represent the same
// mapping class. Decided via common_conjugator(compose(f, g.inverse())).
bool out_equal(const FreeAut& f, const FreeAut& g);

}  // namespace hilden
