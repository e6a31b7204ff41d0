#include "artin/classifier.hpp"

#include "artin/errors.hpp"
#include "artin/presenter.hpp"

#include <stdexcept>

namespace artin {

std::string_view to_string(Small3Case c) {
    switch (c) {
    case Small3Case::case1_f1zero: return "Case1-f1zero";
    case Small3Case::case2_e1zero_nonneg: return "Case2-e1zero-nonneg";
    case Small3Case::case2_f1minus1: return "Case2-f1minus1";
    case Small3Case::none: return "none";
    case Small3Case::not_small_admissible: return "not-small-admissible";
    }
    return "none";
}

Verdict classify_small3(int e1, int f1, int e, std::array<int, 3> m) {
    Verdict v;
    if (e1 != 0 && f1 != 0) {
        v.matched_case = Small3Case::not_small_admissible;
        return v;
    }
    auto [m1, m2, m3] = m;
    Small3Case hit = Small3Case::none;
    if (f1 == 0) {
        if (e >= 0 && e1 >= 0 && m1 >= e + e1 && m2 >= e + e1 - (e1 >= 1 ? 1 : 0) &&
            m3 >= e - (e >= 1 ? 1 : 0))
            hit = Small3Case::case1_f1zero;
    } else if (f1 >= 1) {
        if (e >= 0 && m1 >= e && m2 >= e + f1 && m3 >= e + f1 - 1)
            hit = Small3Case::case2_e1zero_nonneg;
    } else if (f1 == -1) {
        if (e >= 1 && m1 >= e && m2 >= e - 1 && m3 >= e - 1)
            hit = Small3Case::case2_f1minus1;
    }
    if (hit != Small3Case::none) {
        v.admissible = true;
        v.matched_case = hit;
        v.witness = relators_small3(e, e1, f1, m1, m2, m3);
    }
    return v;
}

Verdict admits_positive(const FramedTwistTree& ft) {
    Presentation p = relators_from_tree(ft);
    Verdict v;
    v.admissible = is_positive_presentation(p);
    if (v.admissible)
        v.witness = std::move(p);
    return v;
}

namespace {

struct Enumerator {
    int n;
    int max_len;
    bool prune;
    const std::function<void(const Presentation&)>& sink;
    EnumerateStats stats;

    std::vector<Word> chosen;
    std::vector<Letter> target;  // x1..xn

    explicit Enumerator(int n_, int max_len_, bool prune_,
                        const std::function<void(const Presentation&)>& sink_)
        : n(n_), max_len(max_len_), prune(prune_), sink(sink_) {
        for (int i = 1; i <= n; ++i)
            target.push_back(Letter(i));
    }

    // Reduced length of Q^{-1} x1..xn; a completion over slots j+1..n with
    // letter budget B can close the gap only if that length <= 2B + (n-j).
    bool feasible(const Word& q, int slots_done, int budget) const {
        Word gap = concat(inverse(q), Word(n, target));
        return static_cast<long long>(gap.size()) <=
               2LL * budget + (n - slots_done);
    }

    void slot(int idx, int budget, const Word& q) {
        if (idx == n) {
            ++stats.candidates;
            if (q.letters() == target) {
                ++stats.emitted;
                sink(Presentation(n, chosen));
            }
            return;
        }
        // Positive words of length 0..budget in shortlex order.
        std::vector<int> digits;
        for (int len = 0; len <= budget; ++len) {
            digits.assign(static_cast<std::size_t>(len), 1);
            for (;;) {
                std::vector<Letter> letters(digits.begin(), digits.end());
                Word u(n, letters);
                Word qi = concat(q, conjugate(Word::generator(n, idx + 1), inverse(u)));
                chosen.push_back(u);
                if (!prune || feasible(qi, idx + 1, budget - len))
                    slot(idx + 1, budget - len, qi);
                else
                    stats.candidates += skipped_tuples(idx + 1, budget - len);
                chosen.pop_back();
                // Odometer step over {1..n}^len.
                int pos = len - 1;
                while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == n) {
                    digits[static_cast<std::size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0)
                    break;
                ++digits[static_cast<std::size_t>(pos)];
            }
            if (len == budget)
                break;
        }
    }

    // Number of complete tuples a pruned subtree would have contained; keeps
    // the candidate counter meaningful in both modes.
    unsigned long long skipped_tuples(int slots_done, int budget) const {
        // tuples over remaining slots r = n - slots_done with total length <= budget
        int r = n - slots_done;
        if (r == 0)
            return 1;
        // count_{r}(B) = sum over words w1 of len l: n^l * count_{r-1}(B-l)
        std::vector<unsigned long long> cur(static_cast<std::size_t>(budget) + 1, 1);  // r=0
        for (int s = 1; s <= r; ++s) {
            std::vector<unsigned long long> next(static_cast<std::size_t>(budget) + 1, 0);
            for (int b = 0; b <= budget; ++b) {
                unsigned long long powl = 1, total = 0;
                for (int l = 0; l <= b; ++l) {
                    total += powl * cur[static_cast<std::size_t>(b - l)];
                    powl *= static_cast<unsigned long long>(n);
                }
                next[static_cast<std::size_t>(b)] = total;
            }
            cur = std::move(next);
        }
        return cur[static_cast<std::size_t>(budget)];
    }
};

} // namespace

EnumerateStats enumerate_positive(int n, int max_len,
                                  const std::function<void(const Presentation&)>& sink,
                                  const EnumerateOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("generator count must be >= 1");
    if (max_len < 0)
        throw std::invalid_argument("negative max_len");
    int bound = opts.max_len_bound;
    if (bound <= 0) {
        if (n == 2)
            bound = 12;
        else if (n == 3)
            bound = 9;
        else
            throw resource_limit_error(
                "enumeration for n=" + std::to_string(n) +
                " is gated off by default; configure an explicit bound");
    }
    if (max_len > bound)
        throw resource_limit_error("max_len " + std::to_string(max_len) +
                                   " exceeds the enumeration bound " + std::to_string(bound) +
                                   " for n=" + std::to_string(n));
    Enumerator en(n, max_len, opts.prune, sink);
    en.slot(0, max_len, Word(n));
    return en.stats;
}

std::vector<Presentation> enumerate_positive_all(int n, int max_len,
                                                 const EnumerateOptions& opts) {
    std::vector<Presentation> out;
    enumerate_positive(n, max_len, [&out](const Presentation& p) { out.push_back(p); }, opts);
    return out;
}

bool matches_family_n2(const Presentation& p) {
    if (p.size() != 2)
        throw std::invalid_argument("matches_family_n2 requires n=2");
    const auto& a = p.relator(1).letters();
    const auto& b = p.relator(2).letters();
    // Longest shared (x1 x2)^k prefix.
    std::size_t k = 0;
    auto has_prefix = [](const std::vector<Letter>& w, std::size_t k1) {
        if (w.size() < 2 * k1)
            return false;
        for (std::size_t t = 0; t < k1; ++t)
            if (w[2 * t] != 1 || w[2 * t + 1] != 2)
                return false;
        return true;
    };
    while (has_prefix(a, k + 1) && has_prefix(b, k + 1))
        ++k;
    for (std::size_t i = 2 * k; i < a.size(); ++i)
        if (a[i] != 1)
            return false;
    for (std::size_t i = 2 * k; i < b.size(); ++i)
        if (b[i] != 2)
            return false;
    return true;
}

} // namespace artin
