#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// All domain arithmetic is exact.  Int is arbitrary precision; nothing in the
// library is allowed to overflow at any intermediate step.
using Int = mpz_class;
using IVec = std::vector<Int>;

// A data invariant of a type is violated (bad Variety, bad SemigroupSet, ...).
struct invariant_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An operation was called outside its stated domain.
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An enumeration would exceed a hard size cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget without reaching a verdict.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: states the implementation promises cannot
// coexist were both reached.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Floor-division remainder: in [0, b) for b > 0, with the sign of b in
// general, so b * floor_div(a, b) + mod_floor(a, b) = a.
inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int div_exact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& b, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_vec(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

// Largest e with p^e | x, for x != 0.
inline int valuation(const Int& p, const Int& x) {
    if (x == 0) throw precondition_error("valuation of zero");
    int e = 0;
    Int y = abs(x);
    while (divides(p, y)) {
        y = div_exact(y, p);
        ++e;
    }
    return e;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n <= 0) throw precondition_error("factorize needs a positive integer");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (!divides(p, n)) continue;
        int e = 0;
        while (divides(p, n)) {
            n = div_exact(n, p);
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// d = p^r with p prime, r >= 1; absent for d = 1 or a mixed d.
inline std::optional<std::pair<Int, int>> prime_power_of(const Int& d) {
    if (d <= 1) return std::nullopt;
    auto f = factorize(d);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, f[0].second);
}

}  // namespace toric
