#pragma once

// Semigroup gluing: decide whether a split (T1, T2) is a p-gluing, search
// for a full certificate tree showing T is completely p-glued, and build the
// characteristic-p defining pairs attached to the prime-power and the
// mixed-degree special families.

#include <toric/common.hpp>
#include <toric/model.hpp>

#include <memory>
#include <optional>

namespace toric {

constexpr int default_k_max = 16;

// Witness for one split: ZT1 and ZT2 meet in Zw and p^k w lies in both
// N-semigroups, with explicit coefficients.
struct GluingCertificate {
    SemigroupSet t1, t2;
    IVec w;
    int k = 0;
    IVec coeffs1, coeffs2;
    // positions of the t1/t2 vectors inside the root set of the tree search;
    // empty when the certificate came from a standalone split check
    std::vector<std::size_t> idx1, idx2;
};

// Certificate tree: leaves hold rationally independent sets (free abelian
// semigroups), inner nodes carry the certificate splitting their set.
struct GluingTree {
    Int prime;
    SemigroupSet set;
    std::vector<std::size_t> indices;  // positions in the root set
    std::optional<GluingCertificate> cert;
    std::shared_ptr<const GluingTree> left, right;

    bool is_free() const { return !cert.has_value(); }
};

struct PGluingOutcome {
    std::optional<GluingCertificate> cert;
    // true when the intersection had rank 1 and some sign of w was viable
    // but no k up to k_max admitted both memberships; absence is then
    // evidence, not proof
    bool bound_exhausted = false;
};

PGluingOutcome check_p_gluing(const SemigroupSet& t1, const SemigroupSet& t2, const Int& p,
                              int k_max = default_k_max);

// Search all 2^(|T|-1) - 1 unordered splits per level, in a fixed order
// (size of t1 ascending, then membership masks lexicographically with the
// stored order read left to right), recursing on both sides.  First success
// wins; absent means no tree was found with k <= k_max.
std::optional<GluingTree> completely_p_glued(const SemigroupSet& t, const Int& p,
                                             int k_max = default_k_max);

// Recompute everything a certificate claims; throws invariant_error with the
// failing clause.
void validate_certificate(const GluingCertificate& c, const Int& p);

// Bottom-up validation: free leaves are rationally independent, every inner
// node's certificate holds and its children partition the node's set.
void validate_tree(const GluingTree& tree);

// One binomial per inner node, in preorder, using the root-set positions as
// variable slots.  For a tree over the generator set of a variety this
// yields the defining binomials of the certificate (two of them: the root
// relation and the relation of the non-free side).
std::vector<Binomial> tree_binomials(const GluingTree& tree);

// F1 = y1^{p^h} - prod x_i^{a_i p^{h-r}}, F2 = y2^{p^k} - prod x_i^{b_i p^{k-r}}
// for a Uniform variety with d = p^r.  Exponents must come out integral.
// For d = 1 only h = k = 0 is accepted and the pair is y_j - monomial.
std::pair<Binomial, Binomial> stci_pair_prime_power(const Variety& v, int h, int k);
std::pair<Binomial, Binomial> stci_pair_prime_power(const Variety& v);  // h = k = r

// F1 = y1^{d1 p} - x1^{a1 p} x3^{d1 c}, F2 = y2^{pq} - x2^{b2 p} x3^{b3}
// for a Mixed3 variety matching the pattern d2 = q, d3 = pq, a3 = cq with
// p, q distinct primes, p not dividing d1, c, b3 and q not dividing b2, b3.
std::pair<Binomial, Binomial> stci_pair_mixed_pattern(const Variety& v, const Int& p, const Int& q,
                                                  const Int& c);

}  // namespace toric
