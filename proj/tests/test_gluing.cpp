#include <toric/gluing.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace toric;
using testutil::catch_msg;
using testutil::contains;

namespace {

Variety base_uniform() { return Variety::uniform(4, {8, 0, 1}, {0, 12, 3}); }
Variety base_mixed() { return Variety::mixed3({5, 3, 6}, {2, 0, 3}, {0, 1, 1}); }

}  // namespace

TEST_CASE("single split p-gluing on the d=4 fixture") {
    SemigroupSet t1(3, {{0, 12, 3}});
    SemigroupSet t2(3, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {8, 0, 1}});

    PGluingOutcome two = check_p_gluing(t1, t2, 2);
    REQUIRE(two.cert.has_value());
    CHECK(two.cert->w == IVec{0, 12, 3});
    CHECK(two.cert->k == 2);
    CHECK(two.cert->coeffs1 == IVec{4});
    CHECK(two.cert->coeffs2 == IVec{0, 12, 3, 0});
    CHECK(two.cert->idx1.empty());
    CHECK(two.cert->idx2.empty());
    CHECK_NOTHROW(validate_certificate(*two.cert, 2));

    // 3^k (0,12,3) never lands in the x-row semigroup: 4 never divides 3^{k+1}
    PGluingOutcome three = check_p_gluing(t1, t2, 3);
    CHECK(!three.cert.has_value());
    CHECK(three.bound_exhausted);

    // independent axes meet only in the zero lattice: no w at all
    PGluingOutcome zero = check_p_gluing(SemigroupSet(2, {{1, 0}}), SemigroupSet(2, {{0, 1}}), 2);
    CHECK(!zero.cert.has_value());
    CHECK(!zero.bound_exhausted);
}

TEST_CASE("split gluing guards") {
    SemigroupSet s(2, {{1, 0}});
    CHECK_THROWS_AS(check_p_gluing(s, SemigroupSet(), 2), precondition_error);
    CHECK_THROWS_AS(check_p_gluing(s, SemigroupSet(3, {{0, 1, 0}}), 2), precondition_error);
    CHECK_THROWS_AS(check_p_gluing(s, s, 4), precondition_error);
    CHECK_THROWS_AS(check_p_gluing(s, s, -7), precondition_error);
}

TEST_CASE("certificate validation rejects tampering") {
    SemigroupSet t1(3, {{0, 12, 3}});
    SemigroupSet t2(3, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {8, 0, 1}});
    GluingCertificate good = *check_p_gluing(t1, t2, 2).cert;

    GluingCertificate bad = good;
    bad.w = {0, 12, 4};
    CHECK(contains(catch_msg<invariant_error>([&] { validate_certificate(bad, 2); }),
                   "do not meet in Zw"));

    bad = good;
    bad.coeffs1 = {5};
    CHECK(contains(catch_msg<invariant_error>([&] { validate_certificate(bad, 2); }),
                   "do not express"));

    bad = good;
    bad.k = 1;
    CHECK_THROWS_AS(validate_certificate(bad, 2), invariant_error);

    bad = good;
    bad.k = -1;  // 2^-1 (0,12,3) is not integral
    CHECK(contains(catch_msg<invariant_error>([&] { validate_certificate(bad, 2); }),
                   "not integral"));

    bad = good;
    bad.w = {0, 0, 0};
    CHECK(contains(catch_msg<invariant_error>([&] { validate_certificate(bad, 2); }), "w = 0"));
}

TEST_CASE("complete 2-gluing of the d=4 fixture") {
    SemigroupSet t = generator_set(base_uniform());
    auto tree = completely_p_glued(t, 2);
    REQUIRE(tree.has_value());
    REQUIRE(!tree->is_free());
    CHECK(tree->indices == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(tree->cert->w == IVec{0, 12, 3});
    CHECK(tree->cert->k == 2);
    CHECK(tree->cert->idx1 == std::vector<std::size_t>{4});

    REQUIRE(tree->left);
    CHECK(tree->left->is_free());
    CHECK(tree->left->indices == std::vector<std::size_t>{4});

    REQUIRE(tree->right);
    REQUIRE(!tree->right->is_free());
    CHECK(tree->right->cert->w == IVec{32, 0, 4});
    CHECK(tree->right->cert->k == 0);
    CHECK(tree->right->left->is_free());
    CHECK(tree->right->left->indices == std::vector<std::size_t>{3});
    CHECK(tree->right->right->is_free());
    CHECK(tree->right->right->indices == std::vector<std::size_t>{0, 1, 2});

    CHECK_NOTHROW(validate_tree(*tree));

    std::vector<Binomial> bs = tree_binomials(*tree);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == Binomial({0, 0, 0, 0, 4}, {0, 12, 3, 0, 0}));  // y2^4 - x2^12 x3^3
    CHECK(bs[1] == Binomial({0, 0, 0, 4, 0}, {8, 0, 1, 0, 0}));   // y1^4 - x1^8 x3
    for (const Binomial& f : bs) CHECK(in_ideal(f, base_uniform()));

    CHECK(!completely_p_glued(t, 3).has_value());
}

TEST_CASE("complete 2-gluing of the mixed d=(5,3,6) fixture") {
    SemigroupSet t = generator_set(base_mixed());
    auto tree = completely_p_glued(t, 2);
    REQUIRE(tree.has_value());
    REQUIRE(!tree->is_free());
    CHECK(tree->cert->w == IVec{0, 3, 3});
    CHECK(tree->cert->k == 1);
    REQUIRE(!tree->right->is_free());
    CHECK(tree->right->cert->w == IVec{20, 0, 30});
    CHECK(tree->right->cert->k == 0);
    CHECK_NOTHROW(validate_tree(*tree));

    std::vector<Binomial> bs = tree_binomials(*tree);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == Binomial({0, 0, 0, 0, 6}, {0, 2, 1, 0, 0}));    // y2^6 - x2^2 x3
    CHECK(bs[1] == Binomial({0, 0, 0, 10, 0}, {4, 0, 5, 0, 0}));   // y1^10 - x1^4 x3^5
    for (const Binomial& f : bs) CHECK(in_ideal(f, base_mixed()));
}

TEST_CASE("free sets and tiny dependent sets") {
    auto free_tree = completely_p_glued(SemigroupSet(2, {{1, 0}, {0, 1}}), 5);
    REQUIRE(free_tree.has_value());
    CHECK(free_tree->is_free());
    CHECK(tree_binomials(*free_tree).empty());
    CHECK_NOTHROW(validate_tree(*free_tree));

    auto dep = completely_p_glued(SemigroupSet(2, {{1, 0}, {0, 1}, {1, 1}}), 5);
    REQUIRE(dep.has_value());
    REQUIRE(!dep->is_free());
    CHECK(dep->cert->w == IVec{1, 1});
    CHECK(dep->cert->k == 0);
    std::vector<Binomial> bs = tree_binomials(*dep);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0] == Binomial({0, 0, 1}, {1, 1, 0}));

    CHECK_THROWS_AS(completely_p_glued(SemigroupSet(), 2), precondition_error);

    std::vector<IVec> many;
    for (int i = 1; i <= 17; ++i) many.push_back({i, i});
    CHECK_THROWS_AS(completely_p_glued(SemigroupSet(2, many), 2), precondition_error);
}

TEST_CASE("prime-power defining pair") {
    auto [f1, f2] = stci_pair_prime_power(base_uniform());
    CHECK(f1 == Binomial({0, 0, 0, 4, 0}, {8, 0, 1, 0, 0}));
    CHECK(f2 == Binomial({0, 0, 0, 0, 4}, {0, 12, 3, 0, 0}));

    auto [g1, g2] = stci_pair_prime_power(base_uniform(), 3, 3);
    CHECK(g1 == Binomial({0, 0, 0, 8, 0}, {16, 0, 2, 0, 0}));
    CHECK(in_ideal(g1, base_uniform()));
    CHECK(in_ideal(g2, base_uniform()));

    // h = 1 would need a_1 * 2 / 4 = 4 to stay integral, and it does not
    CHECK(contains(catch_msg<precondition_error>([&] { stci_pair_prime_power(base_uniform(), 1, 1); }),
                   "non-integral"));
    CHECK_THROWS_AS(stci_pair_prime_power(base_uniform(), -1, 0), precondition_error);

    Variety triv = Variety::uniform(1, {2, 3}, {1, 1});
    auto [h1, h2] = stci_pair_prime_power(triv);
    CHECK(h1 == Binomial({0, 0, 1, 0}, {2, 3, 0, 0}));
    CHECK(h2 == Binomial({0, 0, 0, 1}, {1, 1, 0, 0}));
    CHECK_THROWS_AS(stci_pair_prime_power(triv, 1, 0), precondition_error);

    Variety d6 = Variety::uniform(6, {6, 0, 1}, {0, 6, 5});
    CHECK(contains(catch_msg<precondition_error>([&] { stci_pair_prime_power(d6); }),
                   "not a prime power"));
    CHECK_THROWS_AS(stci_pair_prime_power(base_mixed()), precondition_error);
}

TEST_CASE("mixed-pattern defining pair") {
    auto [f1, f2] = stci_pair_mixed_pattern(base_mixed(), 2, 3, 1);
    CHECK(f1 == Binomial({0, 0, 0, 10, 0}, {4, 0, 5, 0, 0}));  // y1^10 - x1^4 x3^5
    CHECK(f2 == Binomial({0, 0, 0, 0, 6}, {0, 2, 1, 0, 0}));   // y2^6 - x2^2 x3
    CHECK(in_ideal(f1, base_mixed()));
    CHECK(in_ideal(f2, base_mixed()));

    CHECK(contains(catch_msg<precondition_error>([&] { stci_pair_mixed_pattern(base_mixed(), 2, 5, 1); }),
                   "d_2 must equal q"));
    CHECK_THROWS_AS(stci_pair_mixed_pattern(base_mixed(), 2, 2, 1), precondition_error);
    CHECK_THROWS_AS(stci_pair_mixed_pattern(base_uniform(), 2, 3, 1), precondition_error);
}
