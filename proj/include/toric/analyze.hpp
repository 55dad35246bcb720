#pragma once

// Arithmetic conditions on the exponent data ((A)-(D) for the uniform
// family, (I)-(II) for the mixed family) and the classifier that combines
// every applicable rank rule into a per-characteristic report.

#include <toric/common.hpp>
#include <toric/gluing.hpp>
#include <toric/model.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// Witness indices in the condition structs are 1-based, matching the x_i
// numbering of the parametrization.  A witness is present iff the verdict
// is true (for B the failure list is nonempty iff the verdict is false).

// (A): some i has a_i = 0, b_i != 0 and some j has a_j != 0, b_j = 0.
struct CondA {
    bool holds = false;
    std::optional<std::size_t> i, j;
    bool operator==(const CondA&) const = default;
};

// (B): d | a_i iff d | b_i, and an exponent not divisible by d is coprime
// to d.
struct CondB {
    bool holds = false;
    std::vector<std::size_t> failures;
    bool operator==(const CondB&) const = default;
};

enum class MuDirection { AFromB, BFromA };  // a = mu b resp. b = mu a, mod d

// (C): the residue rows (a mod d), (b mod d) are proportional.
struct CondC {
    bool holds = false;
    std::optional<Int> mu;
    std::optional<MuDirection> direction;
    bool operator==(const CondC&) const = default;
};

// (D): some a_i is coprime to d.
struct CondD {
    bool holds = false;
    std::optional<std::size_t> i;
    bool operator==(const CondD&) const = default;
};

// (I): the congruence system a1 x + a3 y = 0, d1 x = 0, d3 y = 0,
// b3 y = -b2 (all mod d2) is solvable; the witness is the lex-least
// solution.
struct CondI {
    bool holds = false;
    std::optional<std::pair<Int, Int>> xy;
    bool operator==(const CondI&) const = default;
};

// (II): d3' = d3 / gcd(d3, a3) is coprime to d1.
struct CondII {
    bool holds = false;
    Int d3prime = 0;
    bool operator==(const CondII&) const = default;
};

struct ConditionReport {
    Shape shape = Shape::Uniform;
    std::optional<CondA> a;
    std::optional<CondB> b;
    std::optional<CondC> c;
    std::optional<CondD> d;
    std::optional<CondI> i;
    std::optional<CondII> ii;

    bool all_hold() const;
    bool operator==(const ConditionReport&) const = default;
};

ConditionReport check_conditions_ABCD(const Variety& v);  // uniform shape
ConditionReport check_conditions_I_II(const Variety& v);  // mixed shape

// One row of the rank report: the current bounds together with the names of
// every rule that fired on this characteristic.
struct AraEntry {
    int lower = 2;
    int upper = 3;
    std::vector<std::string> rules;

    bool exact() const { return lower == upper; }
    bool operator==(const AraEntry&) const = default;
};

// char 0, each individually named prime, and one bucket standing for every
// prime without its own entry.
struct AraReport {
    AraEntry char0;
    std::map<Int, AraEntry> char_p;
    AraEntry other_primes;
    bool operator==(const AraReport&) const = default;
};

// Gluing search results offered to the classifier.  Null entries are
// ignored: a failed search proves nothing either way.  Every tree must be
// over generator_set(v) and is revalidated from scratch, including the
// relation test of its two binomials.
using GluingEvidence = std::vector<std::shared_ptr<const GluingTree>>;

// Applies, in order: the baseline bounds 2 <= ara <= 3; the complete
// intersection case d = 1; the support inclusion rule; exact rank 2 at
// char p for each certificate; and the exact rank 3 rules for the uniform
// and the mixed shape.  Rules that would cross (an exact 2 and an exact 3
// claim at one characteristic) throw internal_error.
AraReport classify(const Variety& v, const GluingEvidence& evidence = {});

}  // namespace toric
