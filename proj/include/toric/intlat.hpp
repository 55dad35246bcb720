#pragma once

// Exact integer linear algebra: row-style Hermite normal form, lattices and
// their intersections, gcd of maximal minors, small congruence systems, and
// exhaustive membership in finitely generated subsemigroups of N^d.

#include <toric/common.hpp>

#include <cstddef>
#include <optional>

namespace toric {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    IVec data;  // row major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}
    explicit IntMatrix(const std::vector<IVec>& m);

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    IVec row(std::size_t i) const { return IVec(data.begin() + i * cols, data.begin() + (i + 1) * cols); }

    bool operator==(const IntMatrix&) const = default;
};

struct HnfResult {
    IntMatrix h;       // same shape as the input, zero rows at the bottom
    std::size_t rank;  // number of nonzero rows
};

// Canonical row HNF: echelon with positive pivots and entries above each
// pivot reduced into [0, pivot).  Row span is preserved.
HnfResult hnf(const IntMatrix& m);

// A sublattice of Z^ambient_dim, stored by its canonical HNF basis
// (independent nonzero rows; empty basis for the zero lattice).
struct Lattice {
    std::size_t ambient_dim = 0;
    std::vector<IVec> basis;

    std::size_t rank() const { return basis.size(); }
    bool operator==(const Lattice&) const = default;
};

Lattice lattice_of(std::size_t ambient_dim, const std::vector<IVec>& generators);

// Exact membership test against the canonical basis (triangular descent).
bool lattice_contains(const Lattice& l, const IVec& v);

// Intersection, computed from the left kernel of the stacked basis matrix
// [B1; -B2] and mapped back through B1.
Lattice lattice_intersect(const Lattice& l1, const Lattice& l2);

// The basis vector of a rank-1 lattice (first nonzero entry positive);
// absent when the rank differs from 1.
std::optional<IVec> cyclic_generator(const Lattice& l);

// gcd of the absolute values of all maximal minors of a rows x cols matrix
// with rows <= cols; each minor is evaluated by fraction-free (Bareiss)
// elimination.  Returns 0 iff every maximal minor vanishes.
Int gcd_max_minors(const IntMatrix& m);

// One congruence coeff_x * x + coeff_y * y = rhs (mod modulus).
struct Congruence {
    Int coeff_x, coeff_y, rhs;
};

// Lexicographically smallest (x, y) with 0 <= x, y < modulus satisfying all
// congruences, by full scan of the modulus^2 grid; absent if unsolvable.
// An empty system yields (0, 0).
std::optional<std::pair<Int, Int>> solve_linear_congruences(const std::vector<Congruence>& system,
                                                            const Int& modulus);

// Nonnegative integer coefficients c with sum c_i * gens[i] = w, or absent.
// The search is exhaustive (absence is a proof) and returns the
// lexicographically smallest coefficient vector in the stored generator
// order.  Entries of w and of every generator must be nonnegative, and no
// generator may be the zero vector.
std::optional<IVec> semigroup_member(const IVec& w, const std::vector<IVec>& gens);

}  // namespace toric
