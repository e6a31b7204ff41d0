#include "artin/presenter.hpp"

#include <stdexcept>

namespace artin {

namespace {

void check(const FramedTwistTree& ft) {
    ValidationReport rep = validate_tree(ft.tree);
    if (!rep.ok())
        throw std::invalid_argument("invalid tree: " + rep.violations.front());
    if (ft.framing.size() != static_cast<std::size_t>(ft.tree.chords))
        throw std::invalid_argument("framing length mismatch");
}

// Chain of blocks containing chord j, outermost first. Siblings are
// disjoint, so the chain is the unique root-to-node path covering j.
std::vector<const Block*> chain_of(const TwistTree& t, int j) {
    std::vector<const Block*> chain;
    const std::vector<Block>* level = &t.roots;
    for (;;) {
        const Block* hit = nullptr;
        for (const Block& b : *level)
            if (b.start <= j && j <= b.end) {
                hit = &b;
                break;
            }
        if (!hit)
            return chain;
        chain.push_back(hit);
        level = &hit->children;
    }
}

void append_run(std::vector<Letter>& raw, int a, int b, long long e) {
    if (e >= 0) {
        for (long long t = 0; t < e; ++t)
            for (int g = a; g <= b; ++g)
                raw.push_back(Letter(g));
    } else {
        for (long long t = 0; t < -e; ++t)
            for (int g = b; g >= a; --g)
                raw.push_back(Letter(-g));
    }
}

} // namespace

Presentation relators_from_tree(const FramedTwistTree& ft) {
    check(ft);
    int n = ft.tree.chords;
    std::vector<Word> rel;
    rel.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        std::vector<Letter> raw;
        long long esum = 0;
        for (const Block* b : chain_of(ft.tree, j)) {
            append_run(raw, b->start, b->end, b->exponent);
            esum += b->exponent;
        }
        append_run(raw, j, j, ft.framing[static_cast<std::size_t>(j - 1)] - esum);
        rel.push_back(Word(n, raw));
    }
    return Presentation(n, std::move(rel));
}

Presentation relators_small3(int e, int e1, int f1, int m1, int m2, int m3) {
    const int n = 3;
    Word x23 = power(Word(n, {2, 3}), f1);
    Word core = concat(concat(Word::generator(n, 1), x23),
                       concat(Word::generator(n, 2), inverse(x23)));
    Word head = power(Word(n, {1, 2, 3}), e);
    Word r1 = concat(concat(head, power(core, e1)),
                     Word::generator(n, 1, m1 - e - e1));
    Word r2 = concat(concat(concat(head, x23), power(core, e1)),
                     Word::generator(n, 2, m2 - e - e1 - f1));
    Word r3 = concat(concat(head, x23), Word::generator(n, 3, m3 - e - f1));
    return Presentation(n, {r1, r2, r3});
}

std::vector<long long> positivity_slack(const FramedTwistTree& ft) {
    check(ft);
    int n = ft.tree.chords;
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        long long esum = 0;
        for (const Block* b : chain_of(ft.tree, j))
            esum += b->exponent;
        out.push_back(ft.framing[static_cast<std::size_t>(j - 1)] - esum);
    }
    return out;
}

std::vector<long long> relator_letter_bounds(const FramedTwistTree& ft) {
    check(ft);
    int n = ft.tree.chords;
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        long long esum = 0;
        long long letters = 0;
        for (const Block* b : chain_of(ft.tree, j)) {
            long long e = b->exponent;
            letters += static_cast<long long>(b->width()) * (e < 0 ? -e : e);
            esum += e;
        }
        long long tail = ft.framing[static_cast<std::size_t>(j - 1)] - esum;
        letters += tail < 0 ? -tail : tail;
        out.push_back(letters);
    }
    return out;
}

} // namespace artin
