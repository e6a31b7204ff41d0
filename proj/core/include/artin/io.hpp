#pragma once

#include "artin/classifier.hpp"
#include "artin/errors.hpp"
#include "artin/presentation.hpp"
#include "artin/twist.hpp"
#include "artin/word.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace artin {

struct ParseLimits {
    // Maximum letters a single parsed word may expand to (exponents count
    // with multiplicity).
    long long max_word_letters = 1'000'000;
};

// Word grammar: whitespace-separated tokens `x<i>` or `x<i>^<int>` with
// `<i>` >= 1 and `<int>` a signed nonzero decimal; the empty string is the
// identity. parse_error carries 1-based line/column.
Word parse_word(std::string_view text, int rank, const ParseLimits& limits = {});
// Reduced form, runs coalesced: `x1 x1` formats as `x1^2`.
std::string format_word(const Word& w);

// Presentation grammar: `n=<N>` line, then N lines `r<i>: <word>` with i
// sequential from 1. Blank lines and lines starting with `#` are skipped.
Presentation parse_presentation(std::string_view text, const ParseLimits& limits = {});
std::string format_presentation(const Presentation& p);

// Tree grammar: root blocks `(block <a>..<b> e=<int> <child>*)` followed by
// a final line `framing: m1 m2 ... mn`; the framing length is the chord
// count. `#` comments run to end of line.
FramedTwistTree parse_framed_tree(std::string_view text, const ParseLimits& limits = {});
std::string format_framed_tree(const FramedTwistTree& ft);

// `admissible: yes|no` and `case: <tag>` lines, then the witness
// presentation block when present.
std::string format_verdict(const Verdict& v);

// `invariant_factors: d1 d2 ... dn` and `free_rank: k` lines.
std::string format_abelian(const AbelianInvariants& a);

} // namespace artin
