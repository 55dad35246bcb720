#pragma once

// The almost-complete-intersection triple: F1 and F2 from the saturated
// exponent rows, F3 = M - N y2^e with e = g1/g2 read off the two exponent
// matrices.

#include <toric/common.hpp>
#include <toric/intlat.hpp>
#include <toric/model.hpp>

#include <utility>

namespace toric {

struct TripleResult {
    Binomial f1, f2, f3;
    Int dprime, dsecond;  // d / gcd(d, a), d / gcd(d, b)
    Int g1, g2, e;        // minor gcds of A1, A2 and their quotient
    Int delta;            // y1 shift of f3; negative puts y1 on the N side
    bool operator==(const TripleResult&) const = default;
};

// A1 = (d I_n | a), A2 = (d I_n | a | b), columns in this order.
std::pair<IntMatrix, IntMatrix> build_A_matrices(const Variety& v);

// Uniform, normalized input.  F3 is realized by scanning
// delta = 0, +1, -1, ... for (delta a - e b) = 0 mod d componentwise; the
// negative entries of (delta a - e b)/d feed the M side, the positive ones
// the N side, y1^|delta| goes to the side matching the sign of delta, and
// y2^e always sits on the N side.  Throws bound_error("construction bound
// exhausted") when no delta within the bound works; the default bound
// d (n + 2) covers a full period of the congruence.
TripleResult almost_sci_triple(const Variety& v, const Int& delta_bound);
TripleResult almost_sci_triple(const Variety& v);

}  // namespace toric
