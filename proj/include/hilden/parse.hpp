#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hilden/braid.hpp"
#include "hilden/int_matrix.hpp"
#include "hilden/presentation.hpp"

namespace hilden {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) +
                           ")"),
        position(position) {}
  std::size_t position;
};

// Braid word grammar: whitespace-separated tokens, leftmost token is the
// leftmost factor. A trailing ' inverts a token.
//   s<i>   half-twist sigma_i
//   SS<i>  s_i          RR<i>  r_i          T<j>  t_j
//   S      s_n ... s_1  R      sigma_1 sigma_3 ... sigma_{2n+1}
//   FULLTWIST            the full twist
// Named tokens need an even strand count >= 4.
BraidWord parse_braid_word(std::string_view text, int strands);

// Sigma-letter spelling, e.g. "s1 s3'"; the empty word prints "1".
// parse_braid_word(print_braid_word(b), b.strands()) == b.
std::string print_braid_word(const BraidWord& b);

// Presentation file: '#' starts a comment, blank lines are skipped. The
// first content line lists the generator names; each following line is one
// relator in the same token shape (name or name').
Presentation parse_presentation(std::istream& in);

// Matrix file: "rows cols" then row-major decimal entries.
IntMatrix parse_matrix(std::istream& in);

}  // namespace hilden
