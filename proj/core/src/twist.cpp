#include "artin/twist.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace artin {

namespace {

std::string span_str(const Block& b) {
    return std::to_string(b.start) + ".." + std::to_string(b.end);
}

void validate_block(const Block& b, const Block* parent, int chords,
                    std::vector<std::string>& out, int& negatives) {
    if (b.start > b.end)
        out.push_back("non-consecutive block " + span_str(b));
    if (b.start < 1 || b.end > chords)
        out.push_back("block " + span_str(b) + " outside chord range 1.." +
                      std::to_string(chords));
    if (b.exponent < -1)
        out.push_back("negative exponent != -1 on block " + span_str(b));
    else if (b.exponent == -1) {
        ++negatives;
        if (!parent)
            out.push_back("illegal negative exponent on root block " + span_str(b));
        else {
            if (b.start == parent->start)
                out.push_back("leftmost-child negative block " + span_str(b));
            if (parent->exponent < 1)
                out.push_back("parent exponent < 1 for negative block " + span_str(b));
        }
    }
    if (parent && (b.start < parent->start || b.end > parent->end))
        out.push_back("child block " + span_str(b) + " not contained in parent " +
                      span_str(*parent));
    const Block* prev = nullptr;
    for (const Block& c : b.children) {
        if (prev) {
            if (c.start <= prev->end && prev->start <= c.end)
                out.push_back("overlap between sibling blocks " + span_str(*prev) +
                              " and " + span_str(c));
            else if (c.start < prev->start)
                out.push_back("sibling blocks " + span_str(*prev) + " and " + span_str(c) +
                              " not in left-to-right order");
        }
        validate_block(c, &b, chords, out, negatives);
        prev = &c;
    }
}

} // namespace

ValidationReport validate_tree(const TwistTree& t, NegativePolicy policy) {
    ValidationReport rep;
    int negatives = 0;
    const Block* prev = nullptr;
    for (const Block& r : t.roots) {
        if (prev) {
            if (r.start <= prev->end && prev->start <= r.end)
                rep.violations.push_back("overlap between sibling blocks " + span_str(*prev) +
                                         " and " + span_str(r));
            else if (r.start < prev->start)
                rep.violations.push_back("sibling blocks " + span_str(*prev) + " and " +
                                         span_str(r) + " not in left-to-right order");
        }
        validate_block(r, nullptr, t.chords, rep.violations, negatives);
        prev = &r;
    }
    if (policy == NegativePolicy::strict && negatives > 1)
        rep.violations.push_back("more than one negative block (strict mode)");
    return rep;
}

namespace {

void emit_block(const Block& b, BraidWord& out) {
    if (b.width() > 1 && b.exponent != 0) {
        int sign = b.exponent > 0 ? 1 : -1;
        long long reps = static_cast<long long>(b.width()) *
                         (b.exponent > 0 ? b.exponent : -b.exponent);
        for (long long t = 0; t < reps; ++t)
            for (int i = b.start; i < b.end; ++i)
                out.letters.push_back({i, sign});
    }
    for (const Block& c : b.children)
        emit_block(c, out);
}

} // namespace

BraidWord braid_word(const TwistTree& t) {
    ValidationReport rep = validate_tree(t);
    if (!rep.ok())
        throw std::invalid_argument("invalid tree: " + rep.violations.front());
    BraidWord out;
    out.strands = t.chords;
    for (const Block& r : t.roots)
        emit_block(r, out);
    return out;
}

std::vector<int> permutation(const BraidWord& b) {
    int n = b.strands;
    std::vector<int> at(static_cast<std::size_t>(n));  // at[p] = strand in position p+1
    std::iota(at.begin(), at.end(), 1);
    for (const BraidLetter& l : b.letters) {
        if (l.index < 1 || l.index >= n)
            throw std::invalid_argument("sigma index " + std::to_string(l.index) +
                                        " out of range for " + std::to_string(n) + " strands");
        std::swap(at[static_cast<std::size_t>(l.index - 1)],
                  at[static_cast<std::size_t>(l.index)]);
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p)
        image[static_cast<std::size_t>(at[static_cast<std::size_t>(p - 1)] - 1)] = p;
    return image;
}

bool is_pure(const BraidWord& b) {
    std::vector<int> image = permutation(b);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

BraidWord small3(int e1, int f1, int e) {
    BraidWord out;
    out.strands = 3;
    auto rep = [&out](std::initializer_list<int> idx, int count) {
        int sign = count >= 0 ? 1 : -1;
        long long n = count >= 0 ? count : -static_cast<long long>(count);
        for (long long t = 0; t < n; ++t)
            for (int i : idx)
                out.letters.push_back({i, sign});
    };
    rep({1}, 2 * e1);
    rep({2}, 2 * f1);
    rep({2, 1, 2}, 2 * e);
    return out;
}

SignCounts crossing_signs(const BraidWord& b) {
    SignCounts c;
    for (const BraidLetter& l : b.letters)
        (l.sign > 0 ? c.positive : c.negative)++;
    return c;
}

std::vector<Word> braid_action(const BraidWord& b) {
    int n = b.strands;
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        images.push_back(Word::generator(n, j));
    for (const BraidLetter& l : b.letters) {
        if (l.index < 1 || l.index >= n)
            throw std::invalid_argument("sigma index out of range");
        int i = l.index;
        Word xi = Word::generator(n, i);
        Word xi1 = Word::generator(n, i + 1);
        // One-letter substitution rule; all other generators are fixed.
        Word img_i = l.sign > 0 ? concat(concat(xi, xi1), inverse(xi)) : xi1;
        Word img_i1 = l.sign > 0 ? xi : concat(concat(inverse(xi1), xi), xi1);
        std::vector<Word> next;
        next.reserve(images.size());
        for (const Word& w : images) {
            Word acc(n);
            for (Letter letter : w.letters()) {
                int g = generator_of(letter);
                const Word* base = g == i ? &img_i : (g == i + 1 ? &img_i1 : nullptr);
                Word piece = base ? *base : Word::generator(n, g);
                acc = concat(acc, letter > 0 ? piece : inverse(piece));
            }
            next.push_back(std::move(acc));
        }
        images = std::move(next);
    }
    return images;
}

namespace {

// Uniform integer in [lo, hi] from raw 64-bit draws; modulo bias is
// irrelevant here, cross-platform reproducibility is what matters.
int bounded(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<Block> random_children(std::mt19937_64& rng, const TreeGenConfig& cfg, int lo,
                                   int hi, int depth, const Block* parent) {
    std::vector<Block> out;
    if (depth <= 0)
        return out;
    int cur = lo;
    while (cur <= hi) {
        if (rng() % 3 == 0) {  // leave this chord outside any block
            ++cur;
            continue;
        }
        Block b;
        b.start = cur;
        b.end = cur + bounded(rng, 0, hi - cur);
        bool may_negate = cfg.min_exponent <= -1 && parent && parent->exponent >= 1 &&
                          b.start > parent->start;
        int lo_exp = may_negate ? -1 : std::max(0, cfg.min_exponent);
        b.exponent = bounded(rng, lo_exp, cfg.max_exponent);
        b.children = random_children(rng, cfg, b.start, b.end, depth - 1, &b);
        cur = b.end + 1;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace

FramedTwistTree random_framed_tree(std::mt19937_64& rng, const TreeGenConfig& cfg) {
    FramedTwistTree ft;
    int n = bounded(rng, cfg.min_chords, cfg.max_chords);
    ft.tree.chords = n;
    ft.tree.roots = random_children(rng, cfg, 1, n, cfg.max_depth, nullptr);
    ft.framing.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        ft.framing.push_back(bounded(rng, cfg.framing_min, cfg.framing_max));
    return ft;
}

} // namespace artin
