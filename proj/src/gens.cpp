#include "hilden/gens.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hilden {

std::string group_name(GroupId g) {
  switch (g) {
    case GroupId::Hilden:
      return "hilden";
    case GroupId::LiftableHilden:
      return "liftable-hilden";
    case GroupId::SphereMapping:
      return "sphere-mapping";
  }
  return "?";
}

std::string kmode_name(KMode k) { return k == KMode::K2 ? "k2" : "k3plus"; }

KMode kmode_of(int k) {
  if (k < 2) throw std::invalid_argument("kmode_of: need k >= 2");
  return k == 2 ? KMode::K2 : KMode::KGe3;
}

namespace {

GenEntry entry(const NamedElement& e) { return GenEntry{e.str(), {{e, +1}}}; }

}  // namespace

GenSet standard_gens(GroupId group, int n) {
  if (n < 1) throw std::invalid_argument("standard_gens: need n >= 1");
  GenSet set;
  set.group = group;
  set.n = n;
  set.kmode = group == GroupId::LiftableHilden ? KMode::KGe3 : KMode::K2;
  switch (group) {
    case GroupId::Hilden:
      for (int i = 1; i <= n; ++i) set.members.push_back(entry(NamedElement::s(i)));
      for (int i = 1; i <= n; ++i) set.members.push_back(entry(NamedElement::r(i)));
      for (int j = 1; j <= n + 1; ++j)
        set.members.push_back(entry(NamedElement::sigma(2 * j - 1)));
      break;
    case GroupId::LiftableHilden:
      for (int i = 1; i <= n; ++i) set.members.push_back(entry(NamedElement::s(i)));
      for (int i = 1; i <= n; ++i) set.members.push_back(entry(NamedElement::r(i)));
      for (int j = 1; j <= n + 1; ++j) set.members.push_back(entry(NamedElement::t(j)));
      set.members.push_back(entry(NamedElement::big_r()));
      break;
    case GroupId::SphereMapping:
      for (int i = 1; i <= 2 * n + 1; ++i)
        set.members.push_back(entry(NamedElement::sigma(i)));
      break;
  }
  return set;
}

GenSet three_gens(int n, KMode kmode) {
  if (n < 1) throw std::invalid_argument("three_gens: need n >= 1");
  GenSet set;
  set.group = kmode == KMode::K2 ? GroupId::Hilden : GroupId::LiftableHilden;
  set.n = n;
  set.kmode = kmode;
  NamedWord a;
  a.emplace_back(NamedElement::big_s(), +1);
  if (kmode == KMode::K2) {
    a.emplace_back(NamedElement::sigma(1), +1);
    set.members.push_back(GenEntry{"S s1", a});
  } else {
    a.emplace_back(NamedElement::big_r(), +1);
    set.members.push_back(GenEntry{"S R", a});
  }
  set.members.push_back(entry(NamedElement::s(1)));
  set.members.push_back(entry(NamedElement::r(1)));
  return set;
}

std::string letter3_name(Letter3 l) {
  switch (l) {
    case Letter3::A:
      return "A";
    case Letter3::S1:
      return "SS1";
    case Letter3::R1:
      return "RR1";
  }
  return "?";
}

GenWord genword_concat(GenWord a, const GenWord& b) {
  for (const auto& [l, e] : b) {
    if (!a.empty() && a.back().first == l) {
      a.back().second += e;
      if (a.back().second == 0) a.pop_back();
    } else if (e != 0) {
      a.emplace_back(l, e);
    }
  }
  return a;
}

GenWord genword_inverse(const GenWord& w) {
  GenWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.emplace_back(it->first, -it->second);
  return out;
}

GenWord genword_power(const GenWord& w, int exponent) {
  const GenWord base = exponent >= 0 ? w : genword_inverse(w);
  GenWord out;
  for (int i = 0; i < std::abs(exponent); ++i) out = genword_concat(out, base);
  return out;
}

std::size_t genword_length(const GenWord& w) {
  std::size_t total = 0;
  for (const auto& [l, e] : w) total += static_cast<std::size_t>(std::abs(e));
  return total;
}

std::string genword_str(const GenWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter3_name(w[i].first);
    if (w[i].second != 1) out += "^" + std::to_string(w[i].second);
  }
  return out;
}

namespace {

GenWord gw_letter(Letter3 l, int e = 1) {
  if (e == 0) return {};
  return {{l, e}};
}

GenWord gw_s_i(int i) {
  // s_i = A^{-(i-1)} s_1 A^{i-1}
  GenWord w = gw_letter(Letter3::A, -(i - 1));
  w = genword_concat(std::move(w), gw_letter(Letter3::S1));
  return genword_concat(std::move(w), gw_letter(Letter3::A, i - 1));
}

GenWord gw_big_s(int n) {
  GenWord w;
  for (int i = n; i >= 1; --i) w = genword_concat(std::move(w), gw_s_i(i));
  return w;
}

GenWord gw_r_i(int i, const GenWord& s) {
  GenWord w = genword_power(s, -(i - 1));
  w = genword_concat(std::move(w), gw_letter(Letter3::R1));
  return genword_concat(std::move(w), genword_power(s, i - 1));
}

GenWord gw_from_a(const GenWord& s) {
  // sigma_1 = s^-1 A (k = 2) and r = s^-1 A (k >= 3)
  return genword_concat(genword_inverse(s), gw_letter(Letter3::A));
}

GenWord gw_t_1(int n, const GenWord& s) {
  GenWord w;
  for (int i = 1; i <= n; ++i)
    w = genword_concat(std::move(w), genword_inverse(gw_s_i(i)));
  for (int i = n; i >= 1; --i)
    w = genword_concat(std::move(w), genword_inverse(gw_r_i(i, s)));
  return w;
}

}  // namespace

GenWord rewrite(const NamedElement& target, int n, KMode kmode) {
  if (n < 1) throw std::invalid_argument("rewrite: need n >= 1");
  const GenWord s = gw_big_s(n);
  using Tag = NamedElement::Tag;
  switch (target.tag) {
    case Tag::S:
      if (target.index < 1 || target.index > n)
        throw std::invalid_argument("rewrite: s index out of range");
      return gw_s_i(target.index);
    case Tag::R:
      if (target.index < 1 || target.index > n)
        throw std::invalid_argument("rewrite: r index out of range");
      return gw_r_i(target.index, s);
    case Tag::BigS:
      return s;
    case Tag::Sigma: {
      if (kmode != KMode::K2)
        throw std::invalid_argument(
            "rewrite: sigma targets exist in the k=2 catalog only");
      if (target.index < 1 || target.index > 2 * n + 1 || target.index % 2 == 0)
        throw std::invalid_argument("rewrite: sigma target must be odd-indexed");
      const int j = (target.index + 1) / 2;
      GenWord w = genword_power(s, -(j - 1));
      w = genword_concat(std::move(w), gw_from_a(s));
      return genword_concat(std::move(w), genword_power(s, j - 1));
    }
    case Tag::BigR:
      if (kmode != KMode::KGe3)
        throw std::invalid_argument("rewrite: r is a k>=3 catalog target");
      return gw_from_a(s);
    case Tag::T: {
      if (kmode != KMode::KGe3)
        throw std::invalid_argument("rewrite: t targets exist in the k>=3 catalog only");
      if (target.index < 1 || target.index > n + 1)
        throw std::invalid_argument("rewrite: t index out of range");
      const int j = target.index;
      GenWord w = genword_power(s, -(j - 1));
      w = genword_concat(std::move(w), gw_t_1(n, s));
      return genword_concat(std::move(w), genword_power(s, j - 1));
    }
    case Tag::FullTwist:
      throw std::invalid_argument("rewrite: full twist is not a catalog target");
  }
  throw std::invalid_argument("rewrite: unknown target");
}

BraidWord expand_letter3(Letter3 l, int n, KMode kmode) {
  switch (l) {
    case Letter3::A: {
      BraidWord b = named_word(NamedElement::big_s(), n);
      b *= kmode == KMode::K2 ? named_word(NamedElement::sigma(1), n)
                              : named_word(NamedElement::big_r(), n);
      return b;
    }
    case Letter3::S1:
      return named_word(NamedElement::s(1), n);
    case Letter3::R1:
      return named_word(NamedElement::r(1), n);
  }
  throw std::invalid_argument("expand_letter3: unknown letter");
}

BraidWord expand_genword(const GenWord& w, int n, KMode kmode) {
  BraidWord out(2 * n + 2);
  for (const auto& [l, e] : w) out *= expand_letter3(l, n, kmode).power(e);
  return out;
}

}  // namespace hilden
