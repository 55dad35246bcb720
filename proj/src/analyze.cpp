#include <toric/analyze.hpp>

#include <toric/intlat.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace toric {

bool ConditionReport::all_hold() const {
    if (shape == Shape::Uniform)
        return a && b && c && d && a->holds && b->holds && c->holds && d->holds;
    return i && ii && i->holds && ii->holds;
}

ConditionReport check_conditions_ABCD(const Variety& v) {
    if (v.shape != Shape::Uniform)
        throw precondition_error("conditions (A)-(D) concern the uniform shape");
    const Int& d = v.deg();
    ConditionReport rep;
    rep.shape = Shape::Uniform;

    CondA ca;
    for (std::size_t i = 0; i < v.n && !ca.i; ++i)
        if (v.a[i] == 0 && v.b[i] != 0) ca.i = i + 1;
    for (std::size_t j = 0; j < v.n && !ca.j; ++j)
        if (v.a[j] != 0 && v.b[j] == 0) ca.j = j + 1;
    ca.holds = ca.i && ca.j;
    if (!ca.holds) {
        ca.i.reset();
        ca.j.reset();
    }
    rep.a = ca;

    CondB cb;
    for (std::size_t i = 0; i < v.n; ++i) {
        bool da = divides(d, v.a[i]), db = divides(d, v.b[i]);
        bool ok = da == db;
        if (!da && gcd(d, v.a[i]) != 1) ok = false;
        if (!db && gcd(d, v.b[i]) != 1) ok = false;
        if (!ok) cb.failures.push_back(i + 1);
    }
    cb.holds = cb.failures.empty();
    rep.b = cb;

    CondC cc;
    auto proportional = [&](const IVec& lhs, const IVec& rhs, const Int& mu) {
        for (std::size_t i = 0; i < v.n; ++i)
            if (mod_floor(lhs[i] - mu * rhs[i], d) != 0) return false;
        return true;
    };
    for (Int mu = 0; mu < d && !cc.holds; ++mu)
        if (proportional(v.a, v.b, mu)) {
            cc.holds = true;
            cc.mu = mu;
            cc.direction = MuDirection::AFromB;
        }
    for (Int mu = 0; mu < d && !cc.holds; ++mu)
        if (proportional(v.b, v.a, mu)) {
            cc.holds = true;
            cc.mu = mu;
            cc.direction = MuDirection::BFromA;
        }
    rep.c = cc;

    CondD cd;
    for (std::size_t i = 0; i < v.n && !cd.i; ++i)
        if (gcd(d, v.a[i]) == 1) cd.i = i + 1;
    cd.holds = cd.i.has_value();
    rep.d = cd;
    return rep;
}

ConditionReport check_conditions_I_II(const Variety& v) {
    if (v.shape != Shape::Mixed3)
        throw precondition_error("conditions (I)-(II) concern the mixed shape");
    const Int &d1 = v.dvec[0], &d2 = v.dvec[1], &d3 = v.dvec[2];
    const Int &a1 = v.a[0], &a3 = v.a[2], &b2 = v.b[1], &b3 = v.b[2];
    ConditionReport rep;
    rep.shape = Shape::Mixed3;

    CondI ci;
    std::vector<Congruence> system = {
        {a1, a3, 0},
        {d1, 0, 0},
        {0, d3, 0},
        {0, b3, -b2},
    };
    ci.xy = solve_linear_congruences(system, d2);
    ci.holds = ci.xy.has_value();
    rep.i = ci;

    CondII cii;
    cii.d3prime = div_exact(d3, gcd(d3, a3));
    cii.holds = gcd(cii.d3prime, d1) == 1;
    rep.ii = cii;
    return rep;
}

namespace {

const char* const rule_baseline = "Theorem 2.5";
const char* const rule_prop13 = "Proposition 1.3";
const char* const rule_prop12 = "Proposition 1.2";
const char* const rule_thm11 = "Theorem 1.1";
const char* const rule_cor26i = "Corollary 2.6(i)";
const char* const rule_cor26ii = "Corollary 2.6(ii)";
const char* const rule_cor27 = "Corollary 2.7";
const char* const rule_thm34 = "Theorem 3.4";

void note_rule(AraEntry& e, const std::string& rule) {
    if (std::find(e.rules.begin(), e.rules.end(), rule) == e.rules.end()) e.rules.push_back(rule);
}

// Intersect the entry's interval with [lo, hi]; crossing claims mean the
// rule set itself is inconsistent, which the source results rule out.
void tighten(AraEntry& e, int lo, int hi, const std::string& rule) {
    int nlo = std::max(e.lower, lo), nhi = std::min(e.upper, hi);
    if (nlo > nhi)
        throw internal_error("rule '" + rule + "' conflicts with the bounds [" +
                             std::to_string(e.lower) + ", " + std::to_string(e.upper) +
                             "] already established");
    e.lower = nlo;
    e.upper = nhi;
    note_rule(e, rule);
}

Int mixed_d3prime(const Variety& v) { return div_exact(v.dvec[2], gcd(v.dvec[2], v.a[2])); }

bool complete_intersection_case(const Variety& v) {
    if (v.shape == Shape::Uniform) return v.deg() == 1;
    return v.dvec[0] == 1 && v.dvec[1] == 1 && v.dvec[2] == 1;
}

bool supp_a_in_supp_b(const Variety& v) {
    if (v.shape != Shape::Uniform) return false;
    for (std::size_t i = 0; i < v.n; ++i)
        if (v.a[i] != 0 && v.b[i] == 0) return false;
    return true;
}

// Explicit pair backing an exact rank 2 claim for d = 1 (both shapes).
void assert_trivial_pair(const Variety& v) {
    std::pair<Binomial, Binomial> pair;
    if (v.shape == Shape::Uniform) {
        pair = stci_pair_prime_power(v, 0, 0);
    } else {
        IVec p1(5, 0), m1(5, 0), p2(5, 0), m2(5, 0);
        p1[3] = 1;
        m1[0] = v.a[0];
        m1[2] = v.a[2];
        p2[4] = 1;
        m2[1] = v.b[1];
        m2[2] = v.b[2];
        pair = {Binomial(p1, m1), Binomial(p2, m2)};
    }
    if (!in_ideal(pair.first, v) || !in_ideal(pair.second, v))
        throw internal_error("complete intersection pair fails the relation test");
}

}  // namespace

AraReport classify(const Variety& v, const GluingEvidence& evidence) {
    // accept only revalidated certificates over the right generator set
    SemigroupSet t = generator_set(v);
    std::map<Int, std::shared_ptr<const GluingTree>> certs;
    for (const auto& tree : evidence) {
        if (!tree) continue;
        if (tree->set != t)
            throw precondition_error("gluing evidence is not over the generator set of V");
        validate_tree(*tree);
        for (const Binomial& f : tree_binomials(*tree))
            if (!in_ideal(f, v))
                throw internal_error("certificate binomial fails the relation test");
        certs.emplace(tree->prime, tree);
    }

    std::set<Int> named;
    for (const auto& [p, tree] : certs) named.insert(p);
    std::optional<ConditionReport> conds;
    if (v.shape == Shape::Uniform) {
        conds = check_conditions_ABCD(v);
        if (v.deg() > 1)
            for (const auto& [p, e] : factorize(v.deg())) named.insert(p);
    } else {
        conds = check_conditions_I_II(v);
        Int d3p = mixed_d3prime(v);
        if (d3p > 1)
            for (const auto& [p, e] : factorize(d3p)) named.insert(p);
    }

    AraReport rep;
    rep.char0 = AraEntry{2, 3, {rule_baseline}};
    rep.other_primes = rep.char0;
    for (const Int& p : named) rep.char_p.emplace(p, rep.char0);

    auto every_char = [&](const std::function<void(AraEntry&)>& f) {
        f(rep.char0);
        for (auto& [p, e] : rep.char_p) f(e);
        f(rep.other_primes);
    };
    auto positive_chars = [&](const std::function<void(AraEntry&)>& f) {
        for (auto& [p, e] : rep.char_p) f(e);
        f(rep.other_primes);
    };
    auto chars_other_than = [&](const Int& p, const std::function<void(AraEntry&)>& f) {
        f(rep.char0);
        for (auto& [q, e] : rep.char_p)
            if (q != p) f(e);
        f(rep.other_primes);
    };

    if (complete_intersection_case(v)) {
        assert_trivial_pair(v);
        every_char([](AraEntry& e) { tighten(e, 2, 2, rule_prop13); });
    }

    if (supp_a_in_supp_b(v))
        positive_chars([](AraEntry& e) { tighten(e, 2, 2, rule_prop12); });

    bool abcd = v.shape == Shape::Uniform && conds->all_hold();
    for (const auto& [p, tree] : certs) {
        AraEntry& e = rep.char_p.at(p);
        tighten(e, 2, 2, rule_thm11);
        if (v.shape == Shape::Uniform) {
            auto pp = prime_power_of(v.deg());
            if (pp && pp->first == p) {
                note_rule(e, rule_prop13);
                if (abcd) note_rule(e, rule_cor26ii);
            }
        }
    }

    if (abcd && v.deg() > 1) {
        auto fac = factorize(v.deg());
        for (const auto& [p, exp] : fac)
            chars_other_than(p, [](AraEntry& e) { tighten(e, 3, 3, rule_cor26i); });
        if (fac.size() >= 2)
            every_char([](AraEntry& e) { tighten(e, 3, 3, rule_cor27); });
    }

    if (v.shape == Shape::Mixed3 && conds->all_hold()) {
        std::vector<Int> quals;
        Int d3p = mixed_d3prime(v);
        if (d3p > 1)
            for (const auto& [p, exp] : factorize(d3p))
                if (!divides(p, v.b[2])) quals.push_back(p);
        for (const Int& p : quals)
            chars_other_than(p, [](AraEntry& e) { tighten(e, 3, 3, rule_thm34); });
        if (quals.size() >= 2)
            every_char([](AraEntry& e) { tighten(e, 3, 3, rule_thm34); });
    }

    return rep;
}

}  // namespace toric
