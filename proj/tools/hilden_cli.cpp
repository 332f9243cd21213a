// Command-line front end for the Hilden group calculus: identity and
// generation verification, rewriting over the 3-element generating sets,
// liftability checks, the mapping-class word problem, Smith normal forms,
// and braid diagram rendering.
//
// Exit codes: 0 success / all checks pass, 1 a verification answered "no",
// 2 usage or parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hilden/cover.hpp"
#include "hilden/identities.hpp"
#include "hilden/parse.hpp"
#include "hilden/svg.hpp"

using nlohmann::json;
using namespace hilden;

namespace {

constexpr const char* kEqualityNote =
    "equality is decided in the mapping class group of the marked sphere "
    "(inner automorphisms quotiented); braid-level equality is strictly finer";

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text, const json& structured) const {
    const std::string payload =
        format == "text" ? text : structured.dump(2) + "\n";
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file " + path);
      out << payload;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write output to a file instead of stdout");
}

json convention_json(const ConventionReport& rep) {
  return json{{"order", convention_name(rep.adopted)},
              {"selftest", rep.selftest},
              {"outcome", rep.outcome},
              {"flipped", rep.flipped}};
}

int run_verify(int n, int k, const Output& out) {
  const KMode kmode = kmode_of(k);
  const ConventionReport conv = resolve_convention();
  const auto identities = verify_catalog(n, kmode);
  const GenerationReport gen = verify_generation(n, kmode);

  std::size_t id_pass = 0;
  std::string first_fail;
  for (const auto& rec : identities) {
    if (rec.result == VerifyResult::Pass)
      ++id_pass;
    else if (first_fail.empty())
      first_fail = "identity " + rec.label;
  }
  std::size_t gen_pass = 0;
  for (const auto& rec : gen.records) {
    if (rec.pass)
      ++gen_pass;
    else if (first_fail.empty())
      first_fail = "generator " + rec.target;
  }
  const bool all_pass = id_pass == identities.size() && gen.all_pass;

  std::ostringstream text;
  text << "convention: " << convention_name(conv.adopted) << " (self-test "
       << conv.selftest << ": " << conv.outcome << ")\n";
  text << "note: " << kEqualityNote << "\n";
  text << "identities (n=" << n << ", " << kmode_name(kmode) << "):\n";
  for (const auto& rec : identities) {
    text << "  " << verify_result_name(rec.result) << "  " << rec.label << "\n";
  }
  text << "generation over {";
  for (std::size_t i = 0; i < gen.three_gen_labels.size(); ++i)
    text << (i ? ", " : "") << gen.three_gen_labels[i];
  text << "}:\n";
  for (const auto& rec : gen.records) {
    text << "  " << (rec.pass ? "PASS" : "FAIL") << "  " << rec.target << " = "
         << rec.rewrite_alphabet_letters << " alphabet letters, "
         << rec.rewrite_sigma_letters << " sigma letters (direct word has "
         << rec.target_sigma_letters << ")\n";
  }
  text << "adding the deck rotation upstairs: "
       << gen.handlebody_generator_count << " generators\n";
  text << "summary: " << id_pass << "/" << identities.size() << " identities, "
       << gen_pass << "/" << gen.records.size() << " generators "
       << (all_pass ? "PASS" : "FAIL") << "\n";

  json jid = json::array();
  for (const auto& rec : identities) {
    jid.push_back(json{{"label", rec.label},
                       {"category", rec.category},
                       {"n", rec.n},
                       {"kmode", kmode_name(rec.kmode)},
                       {"convention", convention_name(conv.adopted)},
                       {"result", verify_result_name(rec.result)},
                       {"wall_ms", rec.wall_ms}});
  }
  json jgen = json::array();
  for (const auto& rec : gen.records) {
    jgen.push_back(json{{"target", rec.target},
                        {"target_sigma_letters", rec.target_sigma_letters},
                        {"rewrite_alphabet_letters", rec.rewrite_alphabet_letters},
                        {"rewrite_sigma_letters", rec.rewrite_sigma_letters},
                        {"result", rec.pass ? "PASS" : "FAIL"},
                        {"wall_ms", rec.wall_ms}});
  }
  const json structured{
      {"command", "verify"},
      {"n", n},
      {"k", k},
      {"kmode", kmode_name(kmode)},
      {"equality_level", kEqualityNote},
      {"convention", convention_json(conv)},
      {"identities", jid},
      {"generation",
       json{{"three_generators", gen.three_gen_labels},
            {"records", jgen},
            {"handlebody_generator_count", gen.handlebody_generator_count}}},
      {"summary", json{{"identities_total", identities.size()},
                       {"identities_passed", id_pass},
                       {"generation_total", gen.records.size()},
                       {"generation_passed", gen_pass},
                       {"all_pass", all_pass}}}};

  out.emit(text.str(), structured);
  if (!all_pass) std::cerr << "FAILED: " << first_fail << "\n";
  return all_pass ? 0 : 1;
}

int run_rewrite(int n, int k, const std::string& target_token, bool expand,
                const Output& out) {
  const KMode kmode = kmode_of(k);
  const BraidWord target_word = parse_braid_word(target_token, 2 * n + 2);

  // resolve the token to a catalog element
  const GroupId group =
      kmode == KMode::K2 ? GroupId::Hilden : GroupId::LiftableHilden;
  const GenSet catalog = standard_gens(group, n);
  const GenEntry* entry = nullptr;
  for (const GenEntry& e : catalog.members) {
    if (e.label == target_token) entry = &e;
  }
  if (entry == nullptr)
    throw CLI::ValidationError("--target", "'" + target_token +
                                               "' is not a standard generator "
                                               "of the " +
                                               group_name(group) + " catalog");

  const GenWord word = rewrite(entry->word.front().first, n, kmode);
  const BraidWord expanded = expand_genword(word, n, kmode);
  const std::string alphabet_a = kmode == KMode::K2 ? "S s1" : "S R";

  std::ostringstream text;
  text << "target: " << target_token << " (direct word: "
       << print_braid_word(target_word) << ")\n";
  text << "alphabet: A = " << alphabet_a << ", SS1, RR1\n";
  text << "rewrite: " << genword_str(word) << "\n";
  text << "alphabet letters: " << genword_length(word)
       << ", expanded sigma letters: " << expanded.size() << "\n";
  if (expand) text << "expansion: " << print_braid_word(expanded) << "\n";

  json jword = json::array();
  for (const auto& [letter, exp] : word)
    jword.push_back(json{{"letter", letter3_name(letter)}, {"exponent", exp}});
  json structured{{"command", "rewrite"},
                  {"n", n},
                  {"k", k},
                  {"kmode", kmode_name(kmode)},
                  {"target", target_token},
                  {"alphabet_a", alphabet_a},
                  {"word", jword},
                  {"alphabet_letters", genword_length(word)},
                  {"sigma_letters", expanded.size()}};
  if (expand) structured["expansion"] = print_braid_word(expanded);

  out.emit(text.str(), structured);
  return 0;
}

int run_lift(const std::string& word, int n, int k, const Output& out) {
  const CoverConfig cfg(n, k);
  const BraidWord b = parse_braid_word(word, cfg.strands());
  const Perm p = perm_of(b);
  const ParityClass parity = parity_class(p, cfg);
  const bool liftable = is_liftable(b, cfg);

  std::ostringstream text;
  text << "strand permutation: " << p.cycles() << "\n";
  text << "parity: " << parity_name(parity) << "\n";
  text << "liftable through the k=" << k << " cover (genus " << cfg.genus()
       << "): " << (liftable ? "yes" : "no") << "\n";

  const json structured{{"command", "lift"},       {"word", word},
                        {"n", n},                  {"k", k},
                        {"genus", cfg.genus()},    {"permutation", p.cycles()},
                        {"parity", parity_name(parity)}, {"liftable", liftable}};
  out.emit(text.str(), structured);
  return liftable ? 0 : 1;
}

int run_wp(const std::string& word1, const std::string& word2, int m,
           const Output& out) {
  const BraidWord b1 = parse_braid_word(word1, m);
  const BraidWord b2 = parse_braid_word(word2, m);
  const FreeAut f1 = gamma(b1);
  const FreeAut f2 = gamma(b2);
  const auto witness = compose(f1, f2.inverse()).common_conjugator();

  std::ostringstream text;
  json structured{{"command", "wp"}, {"m", m},
                  {"word1", word1},  {"word2", word2},
                  {"equal", witness.has_value()}};
  if (witness.has_value()) {
    text << "equal in the mapping class group\n";
    text << "witness conjugator: " << witness->str() << "\n";
    structured["witness"] = witness->str();
  } else {
    const bool perm_differs = !(perm_of(b1) == perm_of(b2));
    text << "unequal in the mapping class group ("
         << (perm_differs ? "strand permutations differ"
                          : "no inner automorphism matches")
         << ")\n";
    structured["reason"] = perm_differs ? "permutation" : "not-inner";
  }
  out.emit(text.str(), structured);
  return witness.has_value() ? 0 : 1;
}

json invariants_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const BigInt& t : inv.torsion) torsion.push_back(t.str());
  return json{{"betti", inv.betti},
              {"torsion", torsion},
              {"display", inv.str()},
              {"min_generators_lower_bound", min_generators_lower_bound(inv)}};
}

int run_snf(const std::string& matrix_path, const std::string& pres_path,
            const Output& out) {
  std::ostringstream text;
  json structured{{"command", "snf"}};

  if (!matrix_path.empty()) {
    std::ifstream in(matrix_path);
    if (!in) throw std::runtime_error("cannot open " + matrix_path);
    const IntMatrix m = parse_matrix(in);
    const SmithResult snf = smith_normal_form(m);
    const bool ok = multiply(multiply(snf.U, m), snf.V) == snf.S;

    text << "input: " << m.rows() << "x" << m.cols() << " matrix\n";
    text << "smith normal form:\n" << snf.S.str();
    text << "U =\n" << snf.U.str() << "V =\n" << snf.V.str();
    text << "S = U*M*V check: " << (ok ? "ok" : "MISMATCH") << "\n";

    json diag = json::array();
    for (const BigInt& d : invariant_factors(snf.S)) diag.push_back(d.str());
    structured["matrix"] = {{"rows", m.rows()}, {"cols", m.cols()}};
    structured["invariant_factors"] = diag;
    structured["S"] = snf.S.str();
    structured["U"] = snf.U.str();
    structured["V"] = snf.V.str();
    structured["check"] = ok;
    if (!ok) {
      out.emit(text.str(), structured);
      return 1;
    }
  }

  if (!pres_path.empty()) {
    std::ifstream in(pres_path);
    if (!in) throw std::runtime_error("cannot open " + pres_path);
    const Presentation p = parse_presentation(in);
    const AbelianInvariants inv = abelian_invariants(p);
    text << "presentation: " << p.generators.size() << " generators, "
         << p.relators.size() << " relators\n";
    text << "H1 = " << inv.str() << "\n";
    text << "minimal generators of H1 (lower bound for the group): "
         << min_generators_lower_bound(inv) << "\n";
    structured["presentation"] = {{"generators", p.generators},
                                  {"relators", p.relators.size()}};
    structured["abelianization"] = invariants_json(inv);
  }

  out.emit(text.str(), structured);
  return 0;
}

int run_render(const std::string& word, int m, const std::string& out_path) {
  const BraidWord b = parse_braid_word(word, m);
  const std::string svg = render_braid_svg(b);
  if (out_path.empty() || out_path == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << svg;
    std::cout << "wrote " << out_path << " (" << b.size() << " crossings)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the Hilden and liftable Hilden groups"};
  app.require_subcommand(1);

  int n = 1, k = 3, m = 4;
  Output output;
  std::string word, word2, target, matrix_path, pres_path, render_out;
  bool expand = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the identity catalog and the 3-element generation");
  verify->add_option("--n", n, "Number of wickets minus one (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  verify->add_option("--k", k, "Cover degree (2 = everything lifts, >=3 parity)")
      ->required()
      ->check(CLI::Range(2, 1000));
  add_output_flags(verify, output);

  CLI::App* rewrite_cmd = app.add_subcommand(
      "rewrite", "Rewrite a standard generator over the 3-element set");
  rewrite_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  rewrite_cmd->add_option("--k", k)->required()->check(CLI::Range(2, 1000));
  rewrite_cmd->add_option("--target", target, "Generator token, e.g. SS2, T1, R, s3")
      ->required();
  rewrite_cmd->add_flag("--expand", expand, "Also print the sigma-letter expansion");
  add_output_flags(rewrite_cmd, output);

  CLI::App* lift = app.add_subcommand("lift", "Parity class and liftability");
  lift->add_option("word", word, "Braid word on 2n+2 strands")->required();
  lift->add_option("--n", n)->required()->check(CLI::Range(1, 100));
  lift->add_option("--k", k)->required()->check(CLI::Range(2, 1000));
  add_output_flags(lift, output);

  CLI::App* wp = app.add_subcommand(
      "wp", "Decide equality of two braid words as mapping classes");
  wp->add_option("word1", word, "First braid word")->required();
  wp->add_option("word2", word2, "Second braid word")->required();
  wp->add_option("--m", m, "Strand count")->required()->check(CLI::Range(2, 64));
  add_output_flags(wp, output);

  CLI::App* snf = app.add_subcommand(
      "snf", "Smith normal form / abelian invariants from files");
  snf->add_option("--matrix", matrix_path, "Integer matrix file");
  snf->add_option("--presentation", pres_path, "Presentation file");
  add_output_flags(snf, output);

  CLI::App* render = app.add_subcommand("render", "Braid diagram as SVG");
  render->add_option("word", word, "Braid word")->required();
  render->add_option("--m", m, "Strand count")->required()->check(CLI::Range(2, 64));
  render->add_option("--out", render_out, "Output SVG path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(n, k, output);
    if (rewrite_cmd->parsed()) return run_rewrite(n, k, target, expand, output);
    if (lift->parsed()) return run_lift(word, n, k, output);
    if (wp->parsed()) return run_wp(word, word2, m, output);
    if (snf->parsed()) {
      if (matrix_path.empty() && pres_path.empty()) {
        std::cerr << "snf: need --matrix and/or --presentation\n";
        return 2;
      }
      return run_snf(matrix_path, pres_path, output);
    }
    if (render->parsed()) return run_render(word, m, render_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
