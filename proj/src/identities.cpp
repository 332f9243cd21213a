#include "hilden/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace hilden {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

NamedWord one(const NamedElement& e, int sign = +1) { return {{e, sign}}; }

NamedWord cat(NamedWord a, const NamedWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

NamedWord repeat(const NamedWord& w, int count) {
  NamedWord out;
  const NamedWord base = count >= 0 ? w : inverse_named(w);
  for (int i = 0; i < std::abs(count); ++i) out = cat(std::move(out), base);
  return out;
}

// Displayed factor order reversed, each factor kept as written.
NamedWord flipped(const NamedWord& w) { return NamedWord(w.rbegin(), w.rend()); }

// A = s sigma_1 (k = 2) or s r (k >= 3), as a named word.
NamedWord word_a(KMode kmode) {
  NamedWord a = one(NamedElement::big_s());
  a.emplace_back(kmode == KMode::K2 ? NamedElement::sigma(1) : NamedElement::big_r(),
                 +1);
  return a;
}

Identity plain_identity(std::string label, std::string category, int n,
                        NamedWord lhs, NamedWord rhs) {
  Identity id;
  id.label = std::move(label);
  id.category = std::move(category);
  id.n = n;
  id.lhs_mirror = flipped(lhs);
  id.rhs_mirror = flipped(rhs);
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  return id;
}

// g^{-e} h g^{e} = rhs, mirrored as g^{e} h g^{-e} = rhs.
Identity conj_identity(std::string label, std::string category, int n,
                       const NamedWord& g, int e, const NamedWord& h,
                       NamedWord rhs) {
  Identity id;
  id.label = std::move(label);
  id.category = std::move(category);
  id.n = n;
  id.lhs = cat(cat(repeat(g, -e), h), repeat(g, e));
  id.lhs_mirror = cat(cat(repeat(g, e), h), repeat(g, -e));
  id.rhs_mirror = rhs;
  id.rhs = std::move(rhs);
  return id;
}

}  // namespace

std::vector<Identity> identity_catalog(int n, KMode kmode) {
  if (n < 1) throw std::invalid_argument("identity_catalog: need n >= 1");
  std::vector<Identity> out;
  const int top = 2 * n + 1;  // largest sigma index

  // Braid relations sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}.
  for (int i = 1; i + 1 <= top; ++i) {
    out.push_back(plain_identity(
        "artin(" + std::to_string(i) + ")", "artin", n,
        {{NamedElement::sigma(i), +1},
         {NamedElement::sigma(i + 1), +1},
         {NamedElement::sigma(i), +1}},
        {{NamedElement::sigma(i + 1), +1},
         {NamedElement::sigma(i), +1},
         {NamedElement::sigma(i + 1), +1}}));
  }

  // Commutation for distant indices.
  for (int i = 1; i <= top; ++i) {
    for (int j = i + 2; j <= top; ++j) {
      out.push_back(plain_identity(
          "commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
          "commute", n,
          {{NamedElement::sigma(i), +1}, {NamedElement::sigma(j), +1}},
          {{NamedElement::sigma(j), +1}, {NamedElement::sigma(i), +1}}));
    }
  }

  // Defining words for the wicket generators.
  for (int i = 1; i <= n; ++i) {
    out.push_back(plain_identity("s_def(" + std::to_string(i) + ")", "s_def", n,
                                 one(NamedElement::s(i)),
                                 {{NamedElement::sigma(2 * i), +1},
                                  {NamedElement::sigma(2 * i + 1), +1},
                                  {NamedElement::sigma(2 * i - 1), +1},
                                  {NamedElement::sigma(2 * i), +1}}));
  }
  for (int i = 1; i <= n; ++i) {
    out.push_back(plain_identity("r_def(" + std::to_string(i) + ")", "r_def", n,
                                 one(NamedElement::r(i)),
                                 {{NamedElement::sigma(2 * i), -1},
                                  {NamedElement::sigma(2 * i + 1), -1},
                                  {NamedElement::sigma(2 * i - 1), +1},
                                  {NamedElement::sigma(2 * i), +1}}));
  }

  // Relations of the spherical braid group that gamma must kill.
  {
    NamedWord lhs;
    for (int i = 1; i <= top; ++i) lhs.emplace_back(NamedElement::sigma(i), +1);
    for (int i = top; i >= 1; --i) lhs.emplace_back(NamedElement::sigma(i), +1);
    out.push_back(plain_identity("spherical", "spherical", n, std::move(lhs), {}));
  }
  out.push_back(plain_identity("full_twist", "full_twist", n,
                               one(NamedElement::full_twist()), {}));

  // The wicket relation r_1...r_n s_n...s_1 t_1 = 1.
  {
    NamedWord lhs;
    for (int i = 1; i <= n; ++i) lhs.emplace_back(NamedElement::r(i), +1);
    for (int i = n; i >= 1; --i) lhs.emplace_back(NamedElement::s(i), +1);
    lhs.emplace_back(NamedElement::t(1), +1);
    out.push_back(plain_identity("rel4", "rel4", n, std::move(lhs), {}));
  }

  // Conjugation identities behind the 3-element generating set.
  const NamedWord a = word_a(kmode);
  const NamedWord s = one(NamedElement::big_s());
  for (int i = 2; i <= n; ++i) {
    out.push_back(conj_identity("conj_s(" + std::to_string(i) + ")", "conj_s", n,
                                a, i - 1, one(NamedElement::s(1)),
                                one(NamedElement::s(i))));
  }
  {
    // sigma_1 = s^-1 (s sigma_1), resp. r = s^-1 (s r).
    const bool k2 = kmode == KMode::K2;
    out.push_back(plain_identity(
        k2 ? "sigma1_from_a" : "r_from_a", "from_a", n,
        cat(one(NamedElement::big_s(), -1), a),
        one(k2 ? NamedElement::sigma(1) : NamedElement::big_r())));
  }
  for (int i = 2; i <= n; ++i) {
    out.push_back(conj_identity("conj_r(" + std::to_string(i) + ")", "conj_r", n,
                                s, i - 1, one(NamedElement::r(1)),
                                one(NamedElement::r(i))));
  }
  if (kmode == KMode::K2) {
    for (int j = 2; j <= n + 1; ++j) {
      out.push_back(conj_identity("conj_sigma(" + std::to_string(2 * j - 1) + ")",
                                  "conj_sigma", n, s, j - 1,
                                  one(NamedElement::sigma(1)),
                                  one(NamedElement::sigma(2 * j - 1))));
    }
  } else {
    NamedWord t1lhs;
    for (int i = 1; i <= n; ++i) t1lhs.emplace_back(NamedElement::s(i), -1);
    for (int i = n; i >= 1; --i) t1lhs.emplace_back(NamedElement::r(i), -1);
    out.push_back(plain_identity("t1_def", "t1_def", n, std::move(t1lhs),
                                 one(NamedElement::t(1))));
    for (int j = 2; j <= n + 1; ++j) {
      out.push_back(conj_identity("conj_t(" + std::to_string(j) + ")", "conj_t",
                                  n, s, j - 1, one(NamedElement::t(1)),
                                  one(NamedElement::t(j))));
    }
  }

  return out;
}

std::string verify_result_name(VerifyResult r) {
  switch (r) {
    case VerifyResult::Pass:
      return "PASS";
    case VerifyResult::Fail:
      return "FAIL";
    case VerifyResult::FailMirrorPasses:
      return "FAIL_MIRROR_PASSES";
  }
  return "?";
}

VerifyResult verify_identity(const Identity& id, int n) {
  if (out_equal(gamma(expand_named(id.lhs, n)), gamma(expand_named(id.rhs, n))))
    return VerifyResult::Pass;
  NamedWord lm = id.lhs_mirror;
  NamedWord rm = id.rhs_mirror;
  if (lm.empty() && rm.empty()) {
    // Identities built without explicit mirrors fall back to factor reversal.
    lm = flipped(id.lhs);
    rm = flipped(id.rhs);
  }
  if (out_equal(gamma(expand_named(lm, n)), gamma(expand_named(rm, n))))
    return VerifyResult::FailMirrorPasses;
  return VerifyResult::Fail;
}

ConventionReport resolve_convention() {
  // (s sigma_1)^-1 s_1 (s sigma_1) = s_2 at n = 2 is orientation-sensitive:
  // it cannot hold together with its mirror, so it pins the convention.
  const Identity selftest = conj_identity("conj_s(2)", "conj_s", 2,
                                          word_a(KMode::K2), 1,
                                          one(NamedElement::s(1)),
                                          one(NamedElement::s(2)));

  ConventionReport report;
  report.selftest = "conj_s(2) @ n=2, k=2";
  report.adopted = active_convention();

  const VerifyResult first = verify_identity(selftest, selftest.n);
  if (first == VerifyResult::Pass) {
    report.flipped = false;
    report.outcome = "pass";
    return report;
  }
  if (first == VerifyResult::FailMirrorPasses) {
    set_convention(active_convention() == Convention::RightmostFirst
                       ? Convention::LeftmostFirst
                       : Convention::RightmostFirst);
    report.adopted = active_convention();
    if (verify_identity(selftest, selftest.n) != VerifyResult::Pass) {
      throw std::logic_error("convention self-test inconsistent after flip");
    }
    report.flipped = true;
    report.outcome = "flipped";
    return report;
  }
  throw std::logic_error("convention self-test fails under both orders");
}

std::vector<IdentityRecord> verify_catalog(int n, KMode kmode) {
  std::vector<IdentityRecord> out;
  for (const Identity& id : identity_catalog(n, kmode)) {
    IdentityRecord rec;
    rec.label = id.label;
    rec.category = id.category;
    rec.n = n;
    rec.kmode = kmode;
    const auto start = Clock::now();
    rec.result = verify_identity(id, n);
    rec.wall_ms = elapsed_ms(start);
    out.push_back(std::move(rec));
  }
  return out;
}

GenerationReport verify_generation(int n, KMode kmode) {
  GenerationReport report;
  report.n = n;
  report.kmode = kmode;
  for (const GenEntry& e : three_gens(n, kmode).members)
    report.three_gen_labels.push_back(e.label);

  const GroupId group =
      kmode == KMode::K2 ? GroupId::Hilden : GroupId::LiftableHilden;
  report.all_pass = true;
  for (const GenEntry& target : standard_gens(group, n).members) {
    GenerationRecord rec;
    rec.target = target.label;
    const auto start = Clock::now();
    const BraidWord direct = expand_named(target.word, n);
    const GenWord rw = rewrite(target.word.front().first, n, kmode);
    const BraidWord expanded = expand_genword(rw, n, kmode);
    rec.target_sigma_letters = direct.size();
    rec.rewrite_alphabet_letters = genword_length(rw);
    rec.rewrite_sigma_letters = expanded.size();
    rec.pass = out_equal(gamma(direct), gamma(expanded));
    rec.wall_ms = elapsed_ms(start);
    report.records.push_back(std::move(rec));
    if (!report.records.back().pass) {
      report.all_pass = false;
      break;  // abort at the offending pair
    }
  }
  return report;
}

}  // namespace hilden
