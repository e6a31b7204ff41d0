#pragma once

#include <vector>

namespace artin {

// Invariant factors of an integer matrix: the nonzero diagonal of its Smith
// normal form, in divisibility order d1 | d2 | ..., each positive, entries
// equal to 1 included. Exact integer arithmetic throughout.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);

} // namespace artin
