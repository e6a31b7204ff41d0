#pragma once

#include "artin/word.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace artin {

// A block of consecutive chords [start, end] (1-based, inclusive) given
// `exponent` full twists; children are nested sub-blocks.
struct Block {
    int start = 1;
    int end = 1;
    int exponent = 0;
    std::vector<Block> children;

    int width() const { return end - start + 1; }
    bool operator==(const Block&) const = default;
};

// A laminar family of blocks over chords 1..n. Chords outside every block
// twist only through their framing.
struct TwistTree {
    int chords = 0;
    std::vector<Block> roots;

    bool operator==(const TwistTree&) const = default;
};

struct FramedTwistTree {
    TwistTree tree;
    std::vector<int> framing;  // m_1..m_n

    bool operator==(const FramedTwistTree&) const = default;
};

// Negative-exponent policy: lax allows any number of legal -1 blocks,
// strict at most one per tree.
enum class NegativePolicy { lax, strict };

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks membership in the braid class: intervals well-formed and laminar,
// exponents >= 0 except exponent -1 on a non-leftmost child (start strictly
// inside the parent) whose parent has exponent >= 1. Violations are returned,
// never thrown.
ValidationReport validate_tree(const TwistTree& t, NegativePolicy policy = NegativePolicy::lax);

struct BraidLetter {
    int index = 1;  // sigma index, 1..strands-1
    int sign = 1;   // +1 or -1

    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;
};

// sigma-word of the tree, outermost blocks first: a block [a,b] of width
// k > 1 with exponent e contributes (sigma_a ... sigma_{b-1})^{k e}, letter
// signs following the sign of e; width-1 blocks contribute nothing.
// Throws std::invalid_argument on an invalid tree.
BraidWord braid_word(const TwistTree& t);

// Underlying permutation: entry j-1 is the final position of strand j.
std::vector<int> permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

// The literal word sigma1^{2 e1} sigma2^{2 f1} (sigma2 sigma1 sigma2)^{2 e}
// on 3 strands.
BraidWord small3(int e1, int f1, int e);

struct SignCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;
};
SignCounts crossing_signs(const BraidWord& b);

// Images of x_1..x_n under the braid's action on the free group:
// sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i; letters act
// left to right. Used to compare braid words as mapping classes.
std::vector<Word> braid_action(const BraidWord& b);

struct TreeGenConfig {
    int min_chords = 1;
    int max_chords = 8;
    int max_depth = 3;
    int min_exponent = -1;  // -1 permitted only where the class rules allow
    int max_exponent = 3;
    int framing_min = -10;
    int framing_max = 10;
};

// Seeded random valid tree; identical seeds give identical trees on every
// platform (no distribution objects involved).
FramedTwistTree random_framed_tree(std::mt19937_64& rng, const TreeGenConfig& cfg = {});

} // namespace artin
