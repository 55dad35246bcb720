#include <toric/analyze.hpp>

#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>

using namespace toric;

namespace {

Variety base_uniform() { return Variety::uniform(4, {8, 0, 1}, {0, 12, 3}); }
Variety d6() { return Variety::uniform(6, {6, 0, 1}, {0, 6, 5}); }
Variety base_mixed() { return Variety::mixed3({5, 3, 6}, {2, 0, 3}, {0, 1, 1}); }

std::vector<std::string> rules(const AraEntry& e) { return e.rules; }

GluingEvidence evidence_for(const Variety& v, const Int& p) {
    auto t = completely_p_glued(generator_set(v), p);
    REQUIRE(t.has_value());
    return {std::make_shared<const GluingTree>(std::move(*t))};
}

}  // namespace

TEST_CASE("conditions (A)-(D) on the d=4 fixture") {
    ConditionReport r = check_conditions_ABCD(base_uniform());
    CHECK(r.shape == Shape::Uniform);
    REQUIRE(r.a);
    CHECK(r.a->holds);
    CHECK(r.a->i == 2);
    CHECK(r.a->j == 1);
    REQUIRE(r.b);
    CHECK(r.b->holds);
    CHECK(r.b->failures.empty());
    REQUIRE(r.c);
    CHECK(r.c->holds);
    CHECK(r.c->mu == 3);
    CHECK(r.c->direction == MuDirection::AFromB);
    REQUIRE(r.d);
    CHECK(r.d->holds);
    CHECK(r.d->i == 3);
    CHECK(r.all_hold());
}

TEST_CASE("conditions (A)-(D) on the d=6 fixture") {
    ConditionReport r = check_conditions_ABCD(d6());
    CHECK(r.all_hold());
    CHECK(r.c->mu == 5);
    CHECK(r.c->direction == MuDirection::AFromB);
    CHECK(r.d->i == 3);
}

TEST_CASE("each condition can fail on its own") {
    // no index with a_i != 0, b_i = 0
    ConditionReport a = check_conditions_ABCD(Variety::uniform(3, {1, 2}, {2, 1}));
    CHECK(!a.a->holds);
    CHECK(!a.a->i);
    CHECK(!a.a->j);
    CHECK(!a.all_hold());

    // a_2 = 2 is neither divisible by nor coprime to d = 4
    ConditionReport b = check_conditions_ABCD(Variety::uniform(4, {4, 2, 0}, {0, 1, 4}));
    CHECK(!b.b->holds);
    CHECK(b.b->failures == std::vector<std::size_t>{2});

    // residue rows (1,2) and (1,3) are not proportional mod 5
    ConditionReport c = check_conditions_ABCD(Variety::uniform(5, {1, 2}, {1, 3}));
    CHECK(!c.c->holds);
    CHECK(!c.c->mu);
    CHECK(c.b->holds);
    CHECK(c.d->holds);

    // every a_i shares a factor with d = 4
    ConditionReport d = check_conditions_ABCD(Variety::uniform(4, {4, 2}, {2, 1}));
    CHECK(!d.d->holds);
    CHECK(!d.d->i);
}

TEST_CASE("condition (C) scans the a-from-b direction first") {
    ConditionReport r = check_conditions_ABCD(Variety::uniform(4, {1, 1}, {2, 2}));
    CHECK(r.c->holds);
    CHECK(r.c->mu == 2);
    CHECK(r.c->direction == MuDirection::BFromA);
}

TEST_CASE("condition checks require the matching shape") {
    CHECK_THROWS_AS(check_conditions_ABCD(base_mixed()), precondition_error);
    CHECK_THROWS_AS(check_conditions_I_II(base_uniform()), precondition_error);
}

TEST_CASE("conditions (I)-(II) on the mixed fixtures") {
    ConditionReport r = check_conditions_I_II(base_mixed());
    CHECK(r.shape == Shape::Mixed3);
    REQUIRE(r.i);
    CHECK(r.i->holds);
    CHECK(r.i->xy == std::make_pair(Int(0), Int(2)));
    REQUIRE(r.ii);
    CHECK(r.ii->holds);
    CHECK(r.ii->d3prime == 2);
    CHECK(r.all_hold());

    // 2y = -1 mod 4 has no solution
    ConditionReport no_i = check_conditions_I_II(Variety::mixed3({3, 4, 2}, {1, 0, 1}, {0, 1, 2}));
    CHECK(!no_i.i->holds);
    CHECK(!no_i.i->xy);
    CHECK(no_i.ii->holds);
    CHECK(no_i.ii->d3prime == 2);
    CHECK(!no_i.all_hold());

    // d_3' = 4 shares the factor 2 with d_1 = 2
    ConditionReport no_ii = check_conditions_I_II(Variety::mixed3({2, 2, 8}, {1, 0, 2}, {0, 1, 1}));
    CHECK(no_ii.i->holds);
    CHECK(no_ii.i->xy == std::make_pair(Int(0), Int(1)));
    CHECK(!no_ii.ii->holds);
    CHECK(no_ii.ii->d3prime == 4);

    // modulus d_2 = 1 makes (I) vacuous
    ConditionReport vacuous_i = check_conditions_I_II(Variety::mixed3({2, 1, 15}, {1, 0, 1}, {0, 1, 1}));
    CHECK(vacuous_i.i->holds);
    CHECK(vacuous_i.i->xy == std::make_pair(Int(0), Int(0)));
    CHECK(vacuous_i.ii->holds);
    CHECK(vacuous_i.ii->d3prime == 15);
}

TEST_CASE("classification of the d=4 fixture without gluing evidence") {
    AraReport r = classify(base_uniform());
    CHECK(r.char0.lower == 3);
    CHECK(r.char0.upper == 3);
    CHECK(rules(r.char0) == std::vector<std::string>{"Theorem 2.5", "Corollary 2.6(i)"});
    REQUIRE(r.char_p.count(Int(2)) == 1);
    // no certificate offered: char 2 keeps only the baseline bounds
    CHECK(r.char_p.at(2).lower == 2);
    CHECK(r.char_p.at(2).upper == 3);
    CHECK(rules(r.char_p.at(2)) == std::vector<std::string>{"Theorem 2.5"});
    CHECK(r.other_primes.lower == 3);
    CHECK(rules(r.other_primes) == std::vector<std::string>{"Theorem 2.5", "Corollary 2.6(i)"});
}

TEST_CASE("classification of the d=4 fixture with gluing evidence") {
    AraReport r = classify(base_uniform(), evidence_for(base_uniform(), 2));
    CHECK(r.char_p.at(2).lower == 2);
    CHECK(r.char_p.at(2).upper == 2);
    CHECK(rules(r.char_p.at(2)) ==
          std::vector<std::string>{"Theorem 2.5", "Theorem 1.1", "Proposition 1.3",
                                   "Corollary 2.6(ii)"});
    CHECK(r.char0.lower == 3);
    CHECK(r.char0.upper == 3);
    CHECK(r.other_primes.lower == 3);
}

TEST_CASE("classification of the d=6 fixture: exact 3 everywhere") {
    AraReport r = classify(d6());
    std::vector<std::string> want{"Theorem 2.5", "Corollary 2.6(i)", "Corollary 2.7"};
    for (const AraEntry* e : {&r.char0, &r.char_p.at(2), &r.char_p.at(3), &r.other_primes}) {
        CHECK(e->lower == 3);
        CHECK(e->upper == 3);
        CHECK(rules(*e) == want);
    }
}

TEST_CASE("classification of the complete intersection case d = 1") {
    AraReport r = classify(Variety::uniform(1, {2, 3}, {1, 1}));
    CHECK(r.char_p.empty());
    CHECK(r.char0.lower == 2);
    CHECK(r.char0.upper == 2);
    CHECK(rules(r.char0) == std::vector<std::string>{"Theorem 2.5", "Proposition 1.3"});
    CHECK(r.other_primes.lower == 2);
    CHECK(r.other_primes.upper == 2);
    CHECK(rules(r.other_primes) ==
          std::vector<std::string>{"Theorem 2.5", "Proposition 1.3", "Proposition 1.2"});
}

TEST_CASE("support inclusion gives exact 2 in every positive characteristic") {
    AraReport r = classify(Variety::uniform(6, {0, 2, 1}, {1, 2, 3}));
    CHECK(r.char0.lower == 2);
    CHECK(r.char0.upper == 3);
    CHECK(rules(r.char0) == std::vector<std::string>{"Theorem 2.5"});
    for (const AraEntry* e : {&r.char_p.at(2), &r.char_p.at(3), &r.other_primes}) {
        CHECK(e->lower == 2);
        CHECK(e->upper == 2);
        CHECK(rules(*e) == std::vector<std::string>{"Theorem 2.5", "Proposition 1.2"});
    }
}

TEST_CASE("classification of the mixed d=(5,3,6) fixture") {
    AraReport r = classify(base_mixed(), evidence_for(base_mixed(), 2));
    CHECK(r.char_p.at(2).lower == 2);
    CHECK(r.char_p.at(2).upper == 2);
    CHECK(rules(r.char_p.at(2)) == std::vector<std::string>{"Theorem 2.5", "Theorem 1.1"});
    CHECK(r.char0.lower == 3);
    CHECK(rules(r.char0) == std::vector<std::string>{"Theorem 2.5", "Theorem 3.4"});
    CHECK(r.other_primes.lower == 3);
    CHECK(rules(r.other_primes) == std::vector<std::string>{"Theorem 2.5", "Theorem 3.4"});
}

TEST_CASE("two qualifying primes of d_3' force exact 3 everywhere") {
    AraReport r = classify(Variety::mixed3({2, 1, 15}, {1, 0, 1}, {0, 1, 1}));
    std::vector<std::string> want{"Theorem 2.5", "Theorem 3.4"};
    for (const AraEntry* e : {&r.char0, &r.char_p.at(3), &r.char_p.at(5), &r.other_primes}) {
        CHECK(e->lower == 3);
        CHECK(e->upper == 3);
        CHECK(rules(*e) == want);
    }
}

TEST_CASE("mixed shape with a failing condition keeps the baseline bounds") {
    AraReport r = classify(Variety::mixed3({2, 2, 8}, {1, 0, 2}, {0, 1, 1}));  // (II) fails
    CHECK(r.char0.lower == 2);
    CHECK(r.char0.upper == 3);
    CHECK(r.char_p.at(2).upper == 3);
    CHECK(rules(r.char0) == std::vector<std::string>{"Theorem 2.5"});
}

TEST_CASE("gluing evidence is validated before use") {
    Variety other = Variety::uniform(2, {1, 0}, {1, 2});
    auto t = completely_p_glued(generator_set(other), 2);
    REQUIRE(t.has_value());
    GluingEvidence wrong{std::make_shared<const GluingTree>(std::move(*t))};
    CHECK_THROWS_AS(classify(base_uniform(), wrong), precondition_error);

    // null entries mean "search failed" and are skipped
    CHECK_NOTHROW(classify(base_uniform(), GluingEvidence{nullptr}));
}

TEST_CASE("condition verdicts are stable under coordinate permutations") {
    std::mt19937 rng(31337);
    std::vector<Variety> fixtures = {base_uniform(), d6(), Variety::uniform(4, {4, 2, 0}, {0, 1, 4}),
                                     Variety::uniform(5, {1, 2}, {1, 3}),
                                     Variety::uniform(6, {0, 2, 1}, {1, 2, 3})};
    for (const Variety& v : fixtures) {
        ConditionReport base = check_conditions_ABCD(v);
        std::vector<std::size_t> perm(v.n);
        for (std::size_t i = 0; i < v.n; ++i) perm[i] = i;
        for (int it = 0; it < 10; ++it) {
            std::shuffle(perm.begin(), perm.end(), rng);
            IVec a(v.n), b(v.n);
            for (std::size_t i = 0; i < v.n; ++i) {
                a[i] = v.a[perm[i]];
                b[i] = v.b[perm[i]];
            }
            ConditionReport p = check_conditions_ABCD(Variety::uniform(v.deg(), a, b));
            CHECK(p.a->holds == base.a->holds);
            CHECK(p.b->holds == base.b->holds);
            CHECK(p.c->holds == base.c->holds);
            CHECK(p.d->holds == base.d->holds);
            if (base.c->holds) CHECK(p.c->mu == base.c->mu);
        }
    }
}
