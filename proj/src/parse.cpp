#include "hilden/parse.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

namespace hilden {

namespace {

struct Token {
  std::string text;
  std::size_t position;
};

std::vector<Token> split_tokens(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    out.push_back(Token{std::string(text.substr(i, j - i)), i});
    i = j;
  }
  return out;
}

bool parse_index(std::string_view digits, int& value) {
  if (digits.empty()) return false;
  value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > 1000000) return false;
  }
  return true;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 2) throw ParseError("need at least 2 strands", 0);
  const bool named_ok = strands >= 4 && strands % 2 == 0;
  const int n = (strands - 2) / 2;

  BraidWord out(strands);
  for (const Token& tok : split_tokens(text)) {
    std::string_view body = tok.text;
    bool inverted = false;
    if (!body.empty() && body.back() == '\'') {
      inverted = true;
      body.remove_suffix(1);
    }
    if (body.empty()) throw ParseError("empty token", tok.position);

    int index = 0;
    BraidWord piece(strands);
    try {
      if (body[0] == 's' && parse_index(body.substr(1), index)) {
        if (index < 1 || index >= strands)
          throw ParseError("sigma index out of range for " +
                               std::to_string(strands) + " strands",
                           tok.position);
        piece = BraidWord::sigma(strands, index);
      } else if (body.size() >= 2 && body.substr(0, 2) == "SS" &&
                 parse_index(body.substr(2), index)) {
        if (!named_ok)
          throw ParseError("named token needs an even strand count >= 4",
                           tok.position);
        piece = named_word(NamedElement::s(index), n);
      } else if (body.size() >= 2 && body.substr(0, 2) == "RR" &&
                 parse_index(body.substr(2), index)) {
        if (!named_ok)
          throw ParseError("named token needs an even strand count >= 4",
                           tok.position);
        piece = named_word(NamedElement::r(index), n);
      } else if (body[0] == 'T' && parse_index(body.substr(1), index)) {
        if (!named_ok)
          throw ParseError("named token needs an even strand count >= 4",
                           tok.position);
        piece = named_word(NamedElement::t(index), n);
      } else if (body == "S" || body == "R" || body == "FULLTWIST") {
        if (!named_ok)
          throw ParseError("named token needs an even strand count >= 4",
                           tok.position);
        const NamedElement e = body == "S"   ? NamedElement::big_s()
                               : body == "R" ? NamedElement::big_r()
                                             : NamedElement::full_twist();
        piece = named_word(e, n);
      } else {
        throw ParseError("unrecognized token '" + tok.text + "'", tok.position);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " in token '" + tok.text + "'",
                       tok.position);
    }
    out *= inverted ? piece.inverse() : piece;
  }
  return out;
}

std::string print_braid_word(const BraidWord& b) {
  if (b.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < b.letters().size(); ++i) {
    if (i) out += ' ';
    out += 's';
    out += std::to_string(std::abs(b.letters()[i]));
    if (b.letters()[i] < 0) out += '\'';
  }
  return out;
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  bool have_generators = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (!have_generators) {
      for (const std::string& name : tokens) {
        if (name.find('\'') != std::string::npos)
          throw ParseError("generator name may not contain '", lineno);
        if (std::find(p.generators.begin(), p.generators.end(), name) !=
            p.generators.end())
          throw ParseError("duplicate generator name '" + name + "'", lineno);
        p.generators.push_back(name);
      }
      have_generators = true;
      continue;
    }

    std::vector<std::int32_t> relator;
    for (const std::string& tok : tokens) {
      std::string body = tok;
      bool inverted = false;
      if (!body.empty() && body.back() == '\'') {
        inverted = true;
        body.pop_back();
      }
      const auto it = std::find(p.generators.begin(), p.generators.end(), body);
      if (it == p.generators.end())
        throw ParseError("relator letter '" + tok + "' is not a generator",
                         lineno);
      const auto idx =
          static_cast<std::int32_t>(it - p.generators.begin()) + 1;
      relator.push_back(inverted ? -idx : idx);
    }
    p.relators.push_back(std::move(relator));
  }
  if (!have_generators) throw ParseError("missing generator line", lineno);
  return p;
}

IntMatrix parse_matrix(std::istream& in) {
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("matrix header must be 'rows cols'", 0);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::string entry;
      if (!(in >> entry))
        throw ParseError("matrix is missing entries", 0);
      try {
        m.at(r, c) = BigInt(entry);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad matrix entry '" + entry + "'", 0);
      }
    }
  }
  return m;
}

}  // namespace hilden
