#pragma once

// Data model for the two parametrized families: exponent data of the
// variety, the attached generator set T, binomials in the variables
// x1..xn, y1, y2, and the semigroup-relation membership test for the
// defining ideal.

#include <toric/common.hpp>
#include <toric/intlat.hpp>

#include <cstddef>
#include <vector>

namespace toric {

enum class Shape { Uniform, Mixed3 };

// Monomial parametrization
//   x_i = u_i^{d_i},  y1 = u_1^{a_1}...u_n^{a_n},  y2 = u_1^{b_1}...u_n^{b_n}.
// Uniform: all d_i equal d.  Mixed3: n = 3 with a_2 = b_1 = 0 and the
// normalization gcd(d1,a1) = gcd(d2,b2) = gcd(d3,a3,b3) = 1; the remaining
// exponents a1, a3, b2, b3 are positive.
struct Variety {
    Shape shape = Shape::Uniform;
    std::size_t n = 0;
    IVec dvec;
    IVec a;
    IVec b;

    static Variety uniform(const Int& d, IVec a, IVec b);
    static Variety mixed3(IVec dvec, IVec a, IVec b);

    // the common degree of a Uniform variety
    const Int& deg() const;

    bool operator==(const Variety&) const = default;
};

struct SemigroupSet {
    std::size_t ambient_dim = 0;
    std::vector<IVec> vectors;  // ordered, duplicates tolerated

    SemigroupSet() = default;
    SemigroupSet(std::size_t ambient_dim, std::vector<IVec> vectors);

    bool operator==(const SemigroupSet&) const = default;
};

// plus - minus as exponent vectors over (x1..xn, y1, y2)
struct Binomial {
    IVec plus;
    IVec minus;

    Binomial() = default;
    Binomial(IVec plus, IVec minus);

    Binomial swapped() const { return Binomial(minus, plus); }
    bool equal_up_to_sign(const Binomial& o) const {
        return (plus == o.plus && minus == o.minus) || (plus == o.minus && minus == o.plus);
    }
    bool operator==(const Binomial&) const = default;
};

// Divides d and both exponent rows by gcd(d, a_1..a_n, b_1..b_n).
// Uniform shape only; idempotent.
Variety normalize(const Variety& v);

// T = {d_1 e_1, ..., d_n e_n, a, b} in this canonical order.
SemigroupSet generator_set(const Variety& v);

// Relation test: the weighted sums of T-vectors by the plus and the minus
// exponents agree in Z^n.
bool in_ideal(const Binomial& f, const Variety& v);

// Every binomial with both monomials of total degree <= degree_bound,
// disjoint supports, satisfying the relation test; deduplicated up to sign
// (plus holds the side with the lex-larger (y1, y2) block) and sorted by
// graded-lex on plus, then minus.  A bounded scan, not an ideal basis.
std::vector<Binomial> enumerate_ideal_binomials(const Variety& v, int degree_bound);

}  // namespace toric
