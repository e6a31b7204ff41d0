#pragma once

#include "artin/word.hpp"

#include <span>
#include <vector>

namespace artin {

// An n-tuple of relators r_1..r_n over F_n. Relator order is positional
// (relator i belongs to generator i); no re-normalization is applied.
// The Artin property is checkable (verify_artin), not enforced here.
class Presentation {
public:
    Presentation() = default;
    explicit Presentation(int n);  // all relators identity
    Presentation(int n, std::vector<Word> relators);

    int size() const { return n_; }
    const std::vector<Word>& relators() const { return relators_; }
    // 1-based, matching the r1..rn naming.
    const Word& relator(int i) const;

    bool operator==(const Presentation&) const = default;

private:
    int n_ = 0;
    std::vector<Word> relators_;
};

// True iff reduce(prod_i r_i x_i r_i^{-1}) = x1 x2 ... xn.
bool verify_artin(const Presentation& p);

// True iff every relator is a positive word (judged on reduced forms).
bool is_positive_presentation(const Presentation& p);

// The unreduced letter sequence of r with every letter x_j^{s} expanded to
// s_j^{-1} x_j^{s} s_j. Exposed so the expansion can be inspected before
// reduction.
std::vector<Letter> substitution_letters(const Word& r, std::span<const Word> s);

// r^s: each relator of r with every letter x_j^{±1} replaced by
// (s_j^{-1} x_j s_j)^{±1}, reduced.
std::vector<Word> substitute_conjugates(std::span<const Word> r, std::span<const Word> s);

// Composition of Artin presentations: the Artin presentation of the stacked
// braid. Componentwise phi_s(r_i) * s_i where phi_s sends x_j to
// s_j x_j s_j^{-1}. With t_i the result, t_i x_i t_i^{-1} =
// phi_s(r_i x_i r_i^{-1}), so the defining product maps to
// phi_s(x1...xn) = prod_j s_j x_j s_j^{-1} = x1...xn and the Artin property
// is preserved.
Presentation compose(const Presentation& s, const Presentation& r);

// Delta_{[a,b]}^e: relators (x_a ... x_b)^e for i in [a,b], identity
// elsewhere. The building block of the full-twist calculus.
Presentation delta_presentation(int n, int a, int b, int e);

struct AbelianInvariants {
    std::vector<std::vector<long long>> matrix;   // entry (i,j) = exponent_sum(r_i, x_j)
    std::vector<long long> invariant_factors;     // full SNF diagonal, zeros last
    int free_rank = 0;                            // count of zero factors
};

AbelianInvariants abelianization(const Presentation& p);

} // namespace artin
