#include "artin/presentation.hpp"

#include "artin/smith.hpp"

#include <stdexcept>
#include <string>

namespace artin {

Presentation::Presentation(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("negative presentation size");
    relators_.assign(static_cast<std::size_t>(n), Word(n));
}

Presentation::Presentation(int n, std::vector<Word> relators)
    : n_(n), relators_(std::move(relators)) {
    if (n < 0)
        throw std::invalid_argument("negative presentation size");
    if (relators_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("expected " + std::to_string(n) + " relators, got " +
                                    std::to_string(relators_.size()));
    for (const Word& r : relators_)
        if (r.rank() != n)
            throw std::invalid_argument("relator rank mismatch");
}

const Word& Presentation::relator(int i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("relator index " + std::to_string(i));
    return relators_[static_cast<std::size_t>(i - 1)];
}

bool verify_artin(const Presentation& p) {
    int n = p.size();
    std::vector<Letter> acc;
    for (int i = 1; i <= n; ++i) {
        const auto& r = p.relator(i).letters();
        auto push = [&acc](Letter l) {
            if (!acc.empty() && acc.back() == -l)
                acc.pop_back();
            else
                acc.push_back(l);
        };
        for (Letter l : r)
            push(l);
        push(Letter(i));
        for (auto it = r.rbegin(); it != r.rend(); ++it)
            push(-*it);
    }
    if (acc.size() != static_cast<std::size_t>(n))
        return false;
    for (int i = 1; i <= n; ++i)
        if (acc[static_cast<std::size_t>(i - 1)] != Letter(i))
            return false;
    return true;
}

bool is_positive_presentation(const Presentation& p) {
    for (const Word& r : p.relators())
        if (!is_positive_word(r))
            return false;
    return true;
}

namespace {

void check_tuple(std::span<const Word> r, std::span<const Word> s) {
    if (r.size() != s.size())
        throw std::invalid_argument("relator tuple length mismatch");
    int rank = -1;
    for (std::span<const Word> t : {r, s})
        for (const Word& w : t) {
            if (rank == -1)
                rank = w.rank();
            else if (w.rank() != rank)
                throw std::invalid_argument("relator rank mismatch");
        }
}

} // namespace

std::vector<Letter> substitution_letters(const Word& r, std::span<const Word> s) {
    std::vector<Letter> out;
    for (Letter l : r.letters()) {
        if (generator_of(l) > static_cast<int>(s.size()))
            throw std::invalid_argument("generator x" + std::to_string(generator_of(l)) +
                                        " has no substitute");
        const Word& sj = s[static_cast<std::size_t>(generator_of(l) - 1)];
        for (auto it = sj.letters().rbegin(); it != sj.letters().rend(); ++it)
            out.push_back(-*it);
        out.push_back(l);
        for (Letter m : sj.letters())
            out.push_back(m);
    }
    return out;
}

std::vector<Word> substitute_conjugates(std::span<const Word> r, std::span<const Word> s) {
    check_tuple(r, s);
    std::vector<Word> out;
    out.reserve(r.size());
    for (const Word& ri : r)
        out.push_back(Word(ri.rank(), substitution_letters(ri, s)));
    return out;
}

Presentation compose(const Presentation& s, const Presentation& r) {
    if (s.size() != r.size())
        throw std::invalid_argument("presentation size mismatch in compose");
    int n = r.size();
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        // phi_s(r_i): x_j -> s_j x_j s_j^{-1}, assembled unreduced then reduced.
        std::vector<Letter> raw;
        for (Letter l : r.relator(i).letters()) {
            const Word& sj = s.relator(generator_of(l));
            for (Letter m : sj.letters())
                raw.push_back(m);
            raw.push_back(l);
            for (auto it = sj.letters().rbegin(); it != sj.letters().rend(); ++it)
                raw.push_back(-*it);
        }
        for (Letter m : s.relator(i).letters())
            raw.push_back(m);
        out.push_back(Word(n, raw));
    }
    return Presentation(n, std::move(out));
}

Presentation delta_presentation(int n, int a, int b, int e) {
    if (a < 1 || b > n || a > b)
        throw std::invalid_argument("delta block out of range");
    std::vector<Letter> block;
    for (int j = a; j <= b; ++j)
        block.push_back(Letter(j));
    Word w = power(Word(n, block), e);
    std::vector<Word> rel(static_cast<std::size_t>(n), Word(n));
    for (int i = a; i <= b; ++i)
        rel[static_cast<std::size_t>(i - 1)] = w;
    return Presentation(n, std::move(rel));
}

AbelianInvariants abelianization(const Presentation& p) {
    int n = p.size();
    AbelianInvariants out;
    out.matrix.assign(static_cast<std::size_t>(n),
                      std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i)
        for (Letter l : p.relator(i).letters())
            out.matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(generator_of(l) - 1)] +=
                sign_of(l);
    out.invariant_factors = smith_invariant_factors(out.matrix);
    out.free_rank = n - static_cast<int>(out.invariant_factors.size());
    out.invariant_factors.resize(static_cast<std::size_t>(n), 0);
    return out;
}

} // namespace artin
