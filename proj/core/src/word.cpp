#include "artin/word.hpp"

#include <stdexcept>
#include <string>

namespace artin {

namespace {

void check_letter(int rank, Letter l) {
    int g = generator_of(l);
    if (l == 0 || g > rank)
        throw std::invalid_argument("letter x" + std::to_string(g) +
                                    " outside rank " + std::to_string(rank));
}

// Appends one letter to an already-reduced prefix, cancelling if possible.
void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

} // namespace

Word::Word(int rank, std::span<const Letter> raw) : rank_(rank) {
    if (rank < 0)
        throw std::invalid_argument("negative rank");
    letters_.reserve(raw.size());
    for (Letter l : raw) {
        check_letter(rank, l);
        push_reduced(letters_, l);
    }
}

Word Word::generator(int rank, int index, int exponent) {
    if (index < 1 || index > rank)
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " outside rank " + std::to_string(rank));
    Word w(rank);
    Letter l = exponent >= 0 ? Letter(index) : Letter(-index);
    long long n = exponent >= 0 ? exponent : -(long long)exponent;
    w.letters_.assign(static_cast<std::size_t>(n), l);
    return w;
}

Word reduce(int rank, std::span<const Letter> raw) { return Word(rank, raw); }

Word concat(const Word& a, const Word& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch in concat");
    std::vector<Letter> out = a.letters();
    out.reserve(out.size() + b.size());
    for (Letter l : b.letters()) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    // Both inputs are reduced, so cancellation only happens at the seam.
    return Word(a.rank(), out);
}

Word inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(-*it);
    return Word(w.rank(), out);
}

Word power(const Word& w, long long k) {
    Word acc(w.rank());
    Word base = k >= 0 ? w : inverse(w);
    long long n = k >= 0 ? k : -k;
    for (long long i = 0; i < n; ++i)
        acc = concat(acc, base);
    return acc;
}

Word conjugate(const Word& x, const Word& s) {
    return concat(concat(inverse(s), x), s);
}

long long exponent_sum(const Word& w, int generator) {
    long long sum = 0;
    for (Letter l : w.letters())
        if (generator_of(l) == generator)
            sum += sign_of(l);
    return sum;
}

bool is_positive_word(const Word& w) {
    for (Letter l : w.letters())
        if (l < 0)
            return false;
    return true;
}

} // namespace artin
