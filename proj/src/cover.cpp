#include "hilden/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilden {

CoverConfig::CoverConfig(int n_, int k_) : n(n_), k(k_) {
  if (n < 1) throw std::invalid_argument("CoverConfig: need n >= 1");
  if (k < 2) throw std::invalid_argument("CoverConfig: need k >= 2");
}

std::string parity_name(ParityClass c) {
  switch (c) {
    case ParityClass::Preserving:
      return "preserving";
    case ParityClass::Reversing:
      return "reversing";
    case ParityClass::Neither:
      return "neither";
  }
  return "?";
}

ParityClass parity_class(const Perm& p, const CoverConfig& cfg) {
  if (p.size() != cfg.strands())
    throw std::invalid_argument("parity_class: permutation size mismatch");
  bool all_odd = true, all_even = true;
  for (int i = 1; i <= p.size(); i += 2) {
    if (p(i) % 2 == 0) all_odd = false;
    if (p(i) % 2 == 1) all_even = false;
  }
  if (all_odd) return ParityClass::Preserving;
  if (all_even) return ParityClass::Reversing;
  return ParityClass::Neither;
}

bool is_liftable(const BraidWord& b, const CoverConfig& cfg) {
  if (b.strands() != cfg.strands())
    throw std::invalid_argument("is_liftable: strand count mismatch");
  if (cfg.k == 2) return true;
  return parity_class(perm_of(b), cfg) != ParityClass::Neither;
}

std::vector<Perm> enumerate_parity_subgroup(const CoverConfig& cfg) {
  if (cfg.n > 4)
    throw std::invalid_argument(
        "enumerate_parity_subgroup: n > 4 exceeds the enumeration guard");
  const int m = cfg.strands();
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    const Perm p = Perm::from_images(images);
    if (parity_class(p, cfg) != ParityClass::Neither) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hilden
