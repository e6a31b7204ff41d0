#include <doctest.h>

#include "support.hpp"

#include <artin/presentation.hpp>
#include <artin/presenter.hpp>

using namespace artin;
using testsupport::P;
using testsupport::W;

namespace {

const char* kThreeTorus =
    "n=3\n"
    "r1: x1 x3 x1^-1 x3^-1 x2 x3 x1 x3^-1 x1^-1 x3^-1 x2^-1 x3\n"
    "r2: x1 x3 x1^-1 x3^-1\n"
    "r3: x3^-1 x2^-1 x3 x1^-1 x3^-1 x2 x3 x1\n";

// Worked pair used across composition tests.
Presentation worked_r() {
    return P("n=3\nr1: x1 x2 x3 x1^2\nr2: x1 x2 x3 x2 x3 x2\nr3: x1 x2 x3 x2 x3^2\n");
}
Presentation worked_s() {
    return P("n=3\nr1: x1 x2 x3 x1\nr2: x1 x2 x3 x2^2\nr3: x1 x2 x3^2\n");
}

} // namespace

TEST_CASE("constructors and accessors") {
    Presentation id3(3);
    CHECK(id3.size() == 3);
    for (int i = 1; i <= 3; ++i)
        CHECK(id3.relator(i).empty());
    CHECK_THROWS_AS(id3.relator(0), std::out_of_range);
    CHECK_THROWS_AS(id3.relator(4), std::out_of_range);

    CHECK_THROWS_AS(Presentation(2, {W(2, "x1")}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation(2, {W(2, "x1"), W(3, "x1")}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation(-1), std::invalid_argument);
}

TEST_CASE("verify_artin on pinned presentations") {
    for (int n = 0; n <= 4; ++n)
        CHECK(verify_artin(Presentation(n)));

    // r_i = x_i^{m_i} conjugates each x_i to itself.
    Presentation powers(3, {W(3, "x1^2"), W(3, ""), W(3, "x3^-1")});
    CHECK(verify_artin(powers));

    CHECK(verify_artin(P(kThreeTorus)));

    CHECK_FALSE(verify_artin(Presentation(2, {W(2, "x2"), W(2, "")})));
    CHECK_FALSE(verify_artin(Presentation(2, {W(2, "x2"), W(2, "x1")})));
}

TEST_CASE("verify_artin sees through unreduced input") {
    Presentation raw(2, {Word(2, {1, 2, -2}), Word(2, {-2, 2})});
    Presentation cooked(2, {W(2, "x1"), W(2, "")});
    CHECK(raw == cooked);
    CHECK(verify_artin(raw) == verify_artin(cooked));
}

TEST_CASE("verify_artin holds on random twist-tree presentations") {
    std::mt19937_64 rng(20250301);
    TreeGenConfig cfg;
    cfg.max_chords = 6;
    for (int trial = 0; trial < 100; ++trial)
        CHECK(verify_artin(testsupport::random_tree_presentation(rng, cfg)));
}

TEST_CASE("is_positive_presentation") {
    CHECK(is_positive_presentation(P("n=2\nr1: x1 x2 x1\nr2: x1 x2 x2^2\n")));
    CHECK_FALSE(is_positive_presentation(P(kThreeTorus)));
    CHECK(is_positive_presentation(relators_small3(1, 0, -1, 1, 0, 0)));
    CHECK(is_positive_presentation(Presentation(3)));
}

TEST_CASE("substitute_conjugates conventions") {
    // Identity substitution.
    Presentation r = worked_r();
    std::vector<Word> ids(3, Word(3));
    CHECK(substitute_conjugates(r.relators(), ids) == r.relators());

    // Inverse letters substitute to the inverse of the conjugate.
    std::vector<Word> one_r{W(2, "x1^-1")}, one_s{W(2, "x2")};
    auto out = substitute_conjugates(one_r, one_s);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == W(2, "x2^-1 x1^-1 x2"));

    std::vector<Word> two_r{W(2, "x1"), W(2, "x2")};
    CHECK_THROWS_AS(substitute_conjugates(two_r, one_s), std::invalid_argument);
    std::vector<Word> bad_rank{W(2, "x1"), W(3, "x2")};
    CHECK_THROWS_AS(substitute_conjugates(bad_rank, two_r), std::invalid_argument);
    // x2 appears but only s_1 is supplied.
    std::vector<Word> short_s{W(2, "x1")};
    CHECK_THROWS_AS(substitute_conjugates(std::vector<Word>{W(2, "x2")}, short_s),
                    std::invalid_argument);
}

TEST_CASE("substitution_letters emits the unreduced expansion") {
    Presentation r = worked_r(), s = worked_s();

    auto expansion = [&](const Word& w) {
        std::vector<Letter> exp;
        for (Letter l : w.letters()) {
            const Word& sj = s.relator(generator_of(l));
            Word inv = inverse(sj);
            exp.insert(exp.end(), inv.letters().begin(), inv.letters().end());
            exp.push_back(l);
            exp.insert(exp.end(), sj.letters().begin(), sj.letters().end());
        }
        return exp;
    };

    std::vector<std::size_t> lengths{47, 60, 58};
    for (int i = 1; i <= 3; ++i) {
        auto got = substitution_letters(r.relator(i), s.relators());
        CHECK(got == expansion(r.relator(i)));
        CHECK(got.size() == lengths[static_cast<std::size_t>(i - 1)]);
    }
}

TEST_CASE("substitute_conjugates preserves exponent-sum vectors") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Word> r, s;
        for (int i = 0; i < n; ++i) {
            r.push_back(testsupport::random_word(rng, n, 8));
            s.push_back(testsupport::random_word(rng, n, 8));
        }
        auto out = substitute_conjugates(r, s);
        for (int i = 0; i < n; ++i)
            for (int g = 1; g <= n; ++g)
                CHECK(exponent_sum(out[static_cast<std::size_t>(i)], g) ==
                      exponent_sum(r[static_cast<std::size_t>(i)], g));
    }
}

TEST_CASE("compose identity laws and worked example") {
    Presentation r = worked_r(), s = worked_s();
    Presentation id3(3);
    CHECK(compose(id3, r) == r);
    CHECK(compose(s, id3) == s);

    Presentation t = compose(s, r);
    CHECK(t == P("n=3\n"
                 "r1: x1 x2 x3 x1 x2 x3 x1^3\n"
                 "r2: x1 x2 x3 x1 x2 x3 x2 x3 x2^3\n"
                 "r3: x1 x2 x3 x1 x2 x3 x2 x3^3\n"));
    CHECK(verify_artin(t));

    CHECK_THROWS_AS(compose(Presentation(2), Presentation(3)), std::invalid_argument);
}

TEST_CASE("compose preserves the defining property") {
    std::mt19937_64 rng(777);
    TreeGenConfig cfg;
    cfg.max_chords = 6;
    for (int trial = 0; trial < 50; ++trial) {
        FramedTwistTree a = random_framed_tree(rng, cfg);
        TreeGenConfig same = cfg;
        same.min_chords = same.max_chords = a.tree.chords;
        FramedTwistTree b = random_framed_tree(rng, same);
        Presentation pa = relators_from_tree(a), pb = relators_from_tree(b);
        REQUIRE(verify_artin(pa));
        REQUIRE(verify_artin(pb));
        Presentation c = compose(pa, pb);
        CHECK(verify_artin(c));
        CHECK(c.size() == a.tree.chords);
    }
}

TEST_CASE("delta_presentation") {
    Presentation d = delta_presentation(5, 2, 4, 2);
    CHECK(d.relator(1).empty());
    CHECK(d.relator(5).empty());
    Word block = power(W(5, "x2 x3 x4"), 2);
    for (int i = 2; i <= 4; ++i)
        CHECK(d.relator(i) == block);
    CHECK(verify_artin(d));

    Presentation neg = delta_presentation(3, 1, 3, -2);
    CHECK(neg.relator(2) == power(W(3, "x1 x2 x3"), -2));
    CHECK(verify_artin(neg));

    CHECK_THROWS_AS(delta_presentation(3, 0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_presentation(3, 2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_presentation(3, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("composing disjoint full twists concatenates them") {
    int n = 5, k1 = 2, k2 = 2, e1 = 2, e2 = -1;
    Presentation first = delta_presentation(n, 1, k1, e1);
    Presentation second = delta_presentation(n, k1 + 1, k1 + k2, e2);
    Presentation got = compose(second, first);

    std::vector<Word> expect;
    for (int i = 1; i <= n; ++i) {
        if (i <= k1)
            expect.push_back(power(W(n, "x1 x2"), e1));
        else if (i <= k1 + k2)
            expect.push_back(power(W(n, "x3 x4"), e2));
        else
            expect.push_back(Word(n));
    }
    CHECK(got == Presentation(n, expect));
}

TEST_CASE("abelianization") {
    Presentation gens(3, {W(3, "x1"), W(3, "x2"), W(3, "x3")});
    auto a = abelianization(gens);
    CHECK(a.invariant_factors == std::vector<long long>{1, 1, 1});
    CHECK(a.free_rank == 0);

    auto torus = abelianization(P(kThreeTorus));
    for (const auto& row : torus.matrix)
        for (long long v : row)
            CHECK(v == 0);
    CHECK(torus.invariant_factors == std::vector<long long>{0, 0, 0});
    CHECK(torus.free_rank == 3);

    auto diag = abelianization(P("n=2\nr1: x1^2\nr2: x2^3\n"));
    CHECK(diag.matrix == std::vector<std::vector<long long>>{{2, 0}, {0, 3}});
    CHECK(diag.invariant_factors == std::vector<long long>{1, 6});
    CHECK(diag.free_rank == 0);

    auto boundary = abelianization(P("n=2\nr1: x1 x2\nr2: x1\n"));
    CHECK(boundary.matrix == std::vector<std::vector<long long>>{{1, 1}, {1, 0}});
    CHECK(boundary.invariant_factors == std::vector<long long>{1, 1});
    CHECK(boundary.free_rank == 0);

    auto mixed = abelianization(P("n=2\nr1: x1 x2 x1\nr2: x1 x2 x2^2\n"));
    CHECK(mixed.matrix == std::vector<std::vector<long long>>{{2, 1}, {1, 3}});
    CHECK(mixed.invariant_factors == std::vector<long long>{1, 5});
}
