#pragma once

// Small finite fields with canonical moduli, the parametrized point set of
// a variety over them, zero sets of binomial systems, and the set-equality
// experiment comparing the two.  Everything here is evidence-grade: the
// analyze module alone issues rank verdicts.

#include <toric/common.hpp>
#include <toric/model.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

inline constexpr std::uint64_t max_field_order = std::uint64_t(1) << 20;
inline constexpr std::uint64_t max_enumeration = std::uint64_t(1) << 24;

// F_{p^m} described by its canonical modulus: the lexicographically least
// monic irreducible of degree m, coefficients listed low degree first
// (c0..cm with cm = 1).  For m = 1 this degenerates to the polynomial x.
struct FieldSpec {
    Int p = 2;
    int m = 1;
    std::vector<int> modulus;

    static FieldSpec make(const Int& p, int m);
    std::string name() const;  // "GF(q)"
    Int order() const;
    bool operator==(const FieldSpec&) const = default;
};

// Elements are codes in [0, q): the base-p digits of a code are the
// coefficients of its residue polynomial, low degree first.  Products run
// through discrete log tables over a fixed multiplicative generator.
class FiniteField {
  public:
    explicit FiniteField(FieldSpec spec);
    FiniteField(const Int& p, int m) : FiniteField(FieldSpec::make(p, m)) {}

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t generator() const { return gen_; }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg(std::uint32_t x) const;
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t pow(std::uint32_t x, const Int& e) const;  // 0^0 = 1

  private:
    FieldSpec spec_;
    std::uint32_t p_ = 0, q_ = 0, gen_ = 0;
    std::vector<std::uint32_t> exp_, log_;

    std::uint32_t mul_poly(std::uint32_t x, std::uint32_t y) const;  // table-free
};

// Deduplicated coordinate tuples over one field, sorted lexicographically.
struct PointSet {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<std::uint32_t>> points;
    bool operator==(const PointSet&) const = default;
};

// All base-field points hit by the parametrization with parameters running
// over the extensions of degree 1..ext_max.  Coordinates are base-field
// codes; a point is kept only when every coordinate lands in the base
// subfield.
PointSet image_points(const Variety& v, const FieldSpec& base, int ext_max);

// All points of the affine space where every binomial vanishes, by
// exhaustive scan.
PointSet zero_set(const std::vector<Binomial>& polys, const FieldSpec& base, std::size_t ambient);

// Exact, field-independent containment: every binomial passes the relation
// test, so the zero set contains V over every field.
bool containment_check(const Variety& v, const std::vector<Binomial>& polys);

struct EqualityReport {
    FieldSpec field;
    std::size_t image_count = 0;
    std::size_t zero_count = 0;
    std::vector<std::vector<std::uint32_t>> excess;  // zero set minus image

    // diagnostic only: small-field excess is never a rank claim
    bool possible_strict() const { return !excess.empty(); }
    bool operator==(const EqualityReport&) const = default;
};

EqualityReport equality_experiment(const Variety& v, const std::vector<Binomial>& polys,
                                   const FieldSpec& base, int ext_max);

}  // namespace toric
