#include <doctest.h>

#include "support.hpp"

#include <artin/twist.hpp>

#include <algorithm>
#include <functional>
#include <string>

using namespace artin;
using testsupport::T;

namespace {

const char* kEightChords =
    "(block 1..8 e=1 (block 1..5 e=1 (block 1..3 e=1) (block 4..5 e=-1)) (block 6..8 e=1))\n"
    "framing: 3 3 3 1 1 2 2 2\n";

bool has_violation(const ValidationReport& rep, const std::string& needle) {
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

std::vector<BraidLetter> sigmas(std::initializer_list<int> signed_indices) {
    std::vector<BraidLetter> out;
    for (int i : signed_indices)
        out.push_back({i < 0 ? -i : i, i < 0 ? -1 : 1});
    return out;
}

} // namespace

TEST_CASE("validate_tree accepts the legal shapes") {
    CHECK(validate_tree(T(kEightChords).tree).ok());
    CHECK(validate_tree(TwistTree{4, {}}).ok());
    // A legal -1: non-leftmost child of an exponent-1 parent.
    TwistTree legal{3, {Block{1, 3, 1, {Block{2, 3, -1, {}}}}}};
    CHECK(validate_tree(legal).ok());
    CHECK(validate_tree(legal, NegativePolicy::strict).ok());
}

TEST_CASE("validate_tree rejections") {
    auto only = [](const TwistTree& t, const char* needle) {
        auto rep = validate_tree(t);
        CHECK_FALSE(rep.ok());
        CHECK(has_violation(rep, needle));
    };

    only(TwistTree{2, {Block{1, 2, -1, {}}}}, "illegal negative exponent on root");
    only(TwistTree{2, {Block{1, 2, -2, {}}}}, "negative exponent != -1");
    only(TwistTree{3, {Block{1, 3, 1, {Block{1, 2, -1, {}}}}}}, "leftmost-child negative block");
    only(TwistTree{3, {Block{1, 3, 0, {Block{2, 3, -1, {}}}}}},
         "parent exponent < 1 for negative block");
    only(TwistTree{4, {Block{1, 4, 1, {Block{1, 2, 0, {}}, Block{2, 3, 0, {}}}}}},
         "overlap between sibling blocks 1..2 and 2..3");
    only(TwistTree{4, {Block{1, 4, 1, {Block{3, 4, 0, {}}, Block{1, 2, 0, {}}}}}},
         "not in left-to-right order");
    only(TwistTree{3, {Block{2, 3, 1, {Block{1, 2, 0, {}}}}}},
         "child block 1..2 not contained in parent 2..3");
    only(TwistTree{3, {Block{3, 2, 0, {}}}}, "non-consecutive block 3..2");
    only(TwistTree{3, {Block{0, 2, 1, {}}}}, "outside chord range");
    only(TwistTree{3, {Block{2, 5, 1, {}}}}, "outside chord range");
    only(TwistTree{4, {Block{1, 2, 1, {}}, Block{2, 4, 1, {}}}},
         "overlap between sibling blocks 1..2 and 2..4");
}

TEST_CASE("strict policy caps negative blocks at one") {
    TwistTree two{4, {Block{1, 4, 1, {Block{2, 2, -1, {}}, Block{3, 4, -1, {}}}}}};
    CHECK(validate_tree(two).ok());
    auto rep = validate_tree(two, NegativePolicy::strict);
    REQUIRE(rep.violations.size() == 1);
    CHECK(has_violation(rep, "more than one negative block"));
}

TEST_CASE("braid_word literals") {
    BraidWord full = braid_word(TwistTree{3, {Block{1, 3, 1, {}}}});
    CHECK(full.strands == 3);
    CHECK(full.letters == sigmas({1, 2, 1, 2, 1, 2}));

    BraidWord empty = braid_word(TwistTree{4, {}});
    CHECK(empty.strands == 4);
    CHECK(empty.letters.empty());

    CHECK(braid_word(TwistTree{3, {Block{2, 2, 5, {}}}}).letters.empty());

    BraidWord eight = braid_word(T(kEightChords).tree);
    CHECK(eight.strands == 8);
    CHECK(eight.letters.size() == 90);
    auto signs = crossing_signs(eight);
    CHECK(signs.positive == 88);
    CHECK(signs.negative == 2);
    CHECK(is_pure(eight));

    CHECK_THROWS_AS(braid_word(TwistTree{2, {Block{1, 2, -1, {}}}}), std::invalid_argument);
}

TEST_CASE("small3 literal word") {
    CHECK(small3(0, 0, 0).letters.empty());
    CHECK(small3(0, 0, 0).strands == 3);
    CHECK(small3(1, -1, 1).letters == sigmas({1, 1, -2, -2, 2, 1, 2, 2, 1, 2}));
    CHECK(small3(0, -1, 1).letters == sigmas({-2, -2, 2, 1, 2, 2, 1, 2}));
    auto sc = crossing_signs(small3(0, -1, 1));
    CHECK(sc.positive == 6);
    CHECK(sc.negative == 2);
    CHECK(small3(2, 0, 0).letters == sigmas({1, 1, 1, 1}));
}

TEST_CASE("permutation and purity") {
    BraidWord one{3, {{1, 1}}};
    CHECK(permutation(one) == std::vector<int>{2, 1, 3});
    CHECK_FALSE(is_pure(one));

    BraidWord full = braid_word(TwistTree{3, {Block{1, 3, 1, {}}}});
    CHECK(permutation(full) == std::vector<int>{1, 2, 3});
    CHECK(is_pure(full));

    BraidWord bad{2, {{2, 1}}};
    CHECK_THROWS_AS(permutation(bad), std::invalid_argument);
}

TEST_CASE("tree braids are pure") {
    std::mt19937_64 rng(160311);
    TreeGenConfig cfg;
    cfg.max_chords = 7;
    for (int trial = 0; trial < 40; ++trial) {
        FramedTwistTree ft = random_framed_tree(rng, cfg);
        CHECK(is_pure(braid_word(ft.tree)));
    }
}

TEST_CASE("braid_action satisfies the braid relations") {
    BraidWord lhs{3, sigmas({1, 2, 1})}, rhs{3, sigmas({2, 1, 2})};
    CHECK(braid_action(lhs) == braid_action(rhs));

    BraidWord lhs2{3, sigmas({1, 2, 1, 2, 1, 2})};
    BraidWord rhs2{3, sigmas({2, 1, 2, 2, 1, 2})};
    CHECK(braid_action(lhs2) == braid_action(rhs2));

    BraidWord cancel{3, {{1, 1}, {1, -1}}};
    auto images = braid_action(cancel);
    REQUIRE(images.size() == 3);
    for (int j = 1; j <= 3; ++j)
        CHECK(images[static_cast<std::size_t>(j - 1)] == Word::generator(3, j));

    // Distant generators commute.
    BraidWord ab{4, sigmas({1, 3})}, ba{4, sigmas({3, 1})};
    CHECK(braid_action(ab) == braid_action(ba));

    CHECK_THROWS_AS(braid_action(BraidWord{2, {{2, 1}}}), std::invalid_argument);
}

TEST_CASE("nested tree matches the literal small 3-braid as a mapping class") {
    for (int e = 0; e <= 2; ++e) {
        for (int f1 = -1; f1 <= 2; ++f1) {
            if (f1 == -1 && e < 1) continue;
            TwistTree tree{3, {Block{1, 3, e, {Block{2, 3, f1, {}}}}}};
            CHECK(braid_action(braid_word(tree)) == braid_action(small3(0, f1, e)));
        }
    }
}

TEST_CASE("random_framed_tree is seed-deterministic and valid") {
    std::mt19937_64 a(42), b(42);
    TreeGenConfig cfg;
    for (int trial = 0; trial < 20; ++trial)
        CHECK(random_framed_tree(a, cfg) == random_framed_tree(b, cfg));

    std::mt19937_64 rng(98765);
    for (int trial = 0; trial < 100; ++trial) {
        FramedTwistTree ft = random_framed_tree(rng, cfg);
        CHECK(validate_tree(ft.tree).ok());
        CHECK(ft.framing.size() == static_cast<std::size_t>(ft.tree.chords));
        CHECK(ft.tree.chords >= cfg.min_chords);
        CHECK(ft.tree.chords <= cfg.max_chords);
        for (int m : ft.framing) {
            CHECK(m >= cfg.framing_min);
            CHECK(m <= cfg.framing_max);
        }
    }
}

TEST_CASE("random_framed_tree respects exponent bounds") {
    TreeGenConfig nonneg;
    nonneg.min_exponent = 0;
    nonneg.max_exponent = 2;
    std::mt19937_64 rng(1234);

    std::function<void(const Block&)> walk = [&](const Block& b) {
        CHECK(b.exponent >= 0);
        CHECK(b.exponent <= nonneg.max_exponent);
        for (const Block& c : b.children) walk(c);
    };
    for (int trial = 0; trial < 60; ++trial) {
        FramedTwistTree ft = random_framed_tree(rng, nonneg);
        for (const Block& r : ft.tree.roots) walk(r);
    }
}
