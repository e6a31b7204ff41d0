#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace artin {

// A letter of the free group F_rank: +g encodes x_g, -g encodes x_g^{-1}.
// Generator indices are 1-based; 0 is never a valid letter.
using Letter = std::int32_t;

constexpr int generator_of(Letter l) { return l < 0 ? -l : l; }
constexpr int sign_of(Letter l) { return l < 0 ? -1 : 1; }

// An element of F_rank. The letter sequence is freely reduced at all times:
// no x x^{-1} or x^{-1} x pair survives construction.
class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) {}
    // Reduces the raw letter sequence. Throws std::invalid_argument on a
    // letter outside [1, rank] in absolute value.
    Word(int rank, std::span<const Letter> raw);
    Word(int rank, std::initializer_list<Letter> raw)
        : Word(rank, std::span<const Letter>(raw.begin(), raw.size())) {}

    static Word generator(int rank, int index, int exponent = 1);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const Word&) const = default;

private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

// Free reduction of a raw letter sequence.
Word reduce(int rank, std::span<const Letter> raw);

// Group operations. Binary ops require equal ranks.
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, long long k);
// s^{-1} x s, reduced.
Word conjugate(const Word& x, const Word& s);

// Signed count of occurrences of x_generator in w.
long long exponent_sum(const Word& w, int generator);

// True iff every letter has positive sign; the empty word is positive.
bool is_positive_word(const Word& w);

} // namespace artin
