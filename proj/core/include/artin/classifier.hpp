#pragma once

#include "artin/presentation.hpp"
#include "artin/twist.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace artin {

enum class Small3Case {
    case1_f1zero,
    case2_e1zero_nonneg,
    case2_f1minus1,
    none,
    not_small_admissible,
};

std::string_view to_string(Small3Case c);

struct Verdict {
    bool admissible = false;
    Small3Case matched_case = Small3Case::none;
    std::optional<Presentation> witness;  // present iff admissible
};

// Decides whether the small 3-braid with data (e1, f1, e) and framing m
// admits a positive Artin presentation, by closed-form inequalities
// equivalent to reduce-then-inspect positivity of relators_small3:
//   gate: e1 = 0 or f1 = 0, else not-small-admissible;
//   f1 = 0:          e >= 0, e1 >= 0, m1 >= e+e1, m2 >= e+e1-[e1>=1],
//                    m3 >= e-[e>=1];
//   e1 = 0, f1 >= 1: e >= 0, m1 >= e, m2 >= e+f1, m3 >= e+f1-1;
//   e1 = 0, f1 = -1: e >= 1, m1 >= e, m2 >= e-1, m3 >= e-1.
// The -[..] terms are the one-unit cancellations of a trailing inverse
// letter into the innermost block ending at that chord.
Verdict classify_small3(int e1, int f1, int e, std::array<int, 3> m);

// Generates relators_from_tree, reduces, and inspects positivity.
Verdict admits_positive(const FramedTwistTree& ft);

struct EnumerateOptions {
    bool prune = true;
    // 0 means the per-n default bound (12 for n=2, 9 for n=3, refusal
    // otherwise); a positive value replaces the bound and unlocks other n.
    int max_len_bound = 0;
};

struct EnumerateStats {
    unsigned long long candidates = 0;  // complete tuples tested
    unsigned long long emitted = 0;
};

// Streams, in lexicographic order (each relator slot running over positive
// words in shortlex order, later slots varying fastest), every tuple of
// positive words of total length <= max_len that satisfies verify_artin.
// Deterministic and single-threaded. Throws resource_limit_error above the
// configured bound.
EnumerateStats enumerate_positive(int n, int max_len,
                                  const std::function<void(const Presentation&)>& sink,
                                  const EnumerateOptions& opts = {});

std::vector<Presentation> enumerate_positive_all(int n, int max_len,
                                                 const EnumerateOptions& opts = {});

// True iff r1 = (x1x2)^m x1^a and r2 = (x1x2)^m x2^b for some m, a, b >= 0.
// Throws std::invalid_argument unless p has exactly two generators.
bool matches_family_n2(const Presentation& p);

} // namespace artin
