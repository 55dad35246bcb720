#include <toric/gluing.hpp>

#include <toric/intlat.hpp>

#include <algorithm>
#include <bit>

namespace toric {

namespace {

void require_prime(const Int& p) {
    if (p < 2 || !is_prime(p)) throw precondition_error("p must be prime");
}

bool all_nonneg(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

// Scale-invariant feasibility: every coordinate of supp(u) must be covered
// by some generator whose support sits inside supp(u).  Generators sticking
// out of supp(u) are forced to coefficient zero for every scaling of u.
bool supp_coverable(const IVec& u, const std::vector<IVec>& gens) {
    std::size_t dim = u.size();
    std::vector<bool> covered(dim, true);
    for (std::size_t j = 0; j < dim; ++j)
        if (u[j] > 0) covered[j] = false;
    for (const IVec& g : gens) {
        bool inside = true;
        for (std::size_t j = 0; j < dim && inside; ++j)
            if (g[j] > 0 && u[j] == 0) inside = false;
        if (!inside) continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (g[j] > 0) covered[j] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

PGluingOutcome split_gluing(const SemigroupSet& t1, const SemigroupSet& t2, const Int& p,
                            int k_max, std::vector<std::size_t> idx1,
                            std::vector<std::size_t> idx2) {
    std::size_t dim = t1.ambient_dim;
    Lattice meet = lattice_intersect(lattice_of(dim, t1.vectors), lattice_of(dim, t2.vectors));
    auto gen = cyclic_generator(meet);
    if (!gen) return {};
    const IVec& w = *gen;
    int k_min = -valuation(p, gcd_vec(w));

    IVec neg(dim);
    for (std::size_t j = 0; j < dim; ++j) neg[j] = -w[j];
    bool viable_pos = all_nonneg(w) && supp_coverable(w, t1.vectors) && supp_coverable(w, t2.vectors);
    bool viable_neg =
        all_nonneg(neg) && supp_coverable(neg, t1.vectors) && supp_coverable(neg, t2.vectors);
    if (!viable_pos && !viable_neg) return {};  // no scaling can ever be a member

    IVec u = w;
    if (k_min < 0) {
        Int f = pow_int(p, static_cast<unsigned long>(-k_min));
        for (Int& x : u) x = div_exact(x, f);
    }
    for (int k = k_min; k <= k_max; ++k) {
        for (int sign = 0; sign < 2; ++sign) {
            if (sign == 0 ? !viable_pos : !viable_neg) continue;
            IVec target = u;
            if (sign == 1)
                for (Int& x : target) x = -x;
            auto c1 = semigroup_member(target, t1.vectors);
            if (!c1) continue;
            auto c2 = semigroup_member(target, t2.vectors);
            if (!c2) continue;
            GluingCertificate cert;
            cert.t1 = t1;
            cert.t2 = t2;
            cert.w = sign == 0 ? w : neg;
            cert.k = k;
            cert.coeffs1 = std::move(*c1);
            cert.coeffs2 = std::move(*c2);
            cert.idx1 = std::move(idx1);
            cert.idx2 = std::move(idx2);
            return {std::move(cert), false};
        }
        for (Int& x : u) x *= p;
    }
    return {std::nullopt, true};
}

}  // namespace

PGluingOutcome check_p_gluing(const SemigroupSet& t1, const SemigroupSet& t2, const Int& p,
                              int k_max) {
    require_prime(p);
    if (t1.vectors.empty() || t2.vectors.empty())
        throw precondition_error("both sides of a split must be nonempty");
    if (t1.ambient_dim != t2.ambient_dim)
        throw precondition_error("ambient dimensions differ");
    return split_gluing(t1, t2, p, k_max, {}, {});
}

namespace {

bool rationally_independent(const std::vector<IVec>& vecs) {
    if (vecs.empty()) return true;
    return hnf(IntMatrix(vecs)).rank == vecs.size();
}

std::optional<GluingTree> search_tree(const std::vector<IVec>& root, std::size_t dim,
                                      const std::vector<std::size_t>& idx, const Int& p,
                                      int k_max) {
    std::vector<IVec> sub;
    sub.reserve(idx.size());
    for (std::size_t i : idx) sub.push_back(root[i]);
    GluingTree node;
    node.prime = p;
    node.set = SemigroupSet(dim, sub);
    node.indices = idx;
    if (rationally_independent(sub)) return node;  // free leaf

    std::size_t m = idx.size();
    if (m < 2) return std::nullopt;  // a dependent singleton cannot occur; sets are nonzero
    if (m > 16) throw precondition_error("split search limited to 16 vectors");
    // Masks over positions 1..m-1 (position 0 always stays in t2, which
    // makes the splits unordered).  Reading the membership string with the
    // stored order left to right, ascending mask value equals ascending
    // string, so later singletons come first within each size.
    std::vector<unsigned> masks;
    for (unsigned v = 1; v < (1u << (m - 1)); ++v) masks.push_back(v);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
        int cx = std::popcount(x), cy = std::popcount(y);
        if (cx != cy) return cx < cy;
        return x < y;
    });
    for (unsigned mask : masks) {
        std::vector<std::size_t> pos1, pos2{0};
        for (std::size_t pos = 1; pos < m; ++pos) {
            if (mask >> (m - 1 - pos) & 1)
                pos1.push_back(pos);
            else
                pos2.push_back(pos);
        }
        std::vector<std::size_t> gidx1, gidx2;
        std::vector<IVec> v1, v2;
        for (std::size_t pos : pos1) {
            gidx1.push_back(idx[pos]);
            v1.push_back(root[idx[pos]]);
        }
        for (std::size_t pos : pos2) {
            gidx2.push_back(idx[pos]);
            v2.push_back(root[idx[pos]]);
        }
        auto outcome = split_gluing(SemigroupSet(dim, v1), SemigroupSet(dim, v2), p, k_max,
                                    gidx1, gidx2);
        if (!outcome.cert) continue;
        auto left = search_tree(root, dim, gidx1, p, k_max);
        if (!left) continue;
        auto right = search_tree(root, dim, gidx2, p, k_max);
        if (!right) continue;
        node.cert = std::move(outcome.cert);
        node.left = std::make_shared<const GluingTree>(std::move(*left));
        node.right = std::make_shared<const GluingTree>(std::move(*right));
        return node;
    }
    return std::nullopt;
}

}  // namespace

std::optional<GluingTree> completely_p_glued(const SemigroupSet& t, const Int& p, int k_max) {
    require_prime(p);
    if (t.vectors.empty()) throw precondition_error("empty generator set");
    std::vector<std::size_t> idx(t.vectors.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return search_tree(t.vectors, t.ambient_dim, idx, p, k_max);
}

void validate_certificate(const GluingCertificate& c, const Int& p) {
    require_prime(p);
    std::size_t dim = c.t1.ambient_dim;
    if (c.t2.ambient_dim != dim || c.w.size() != dim)
        throw invariant_error("certificate dimensions disagree");
    if (std::all_of(c.w.begin(), c.w.end(), [](const Int& x) { return x == 0; }))
        throw invariant_error("certificate has w = 0");
    Lattice meet = lattice_intersect(lattice_of(dim, c.t1.vectors), lattice_of(dim, c.t2.vectors));
    if (meet != lattice_of(dim, {c.w}))
        throw invariant_error("ZT1 and ZT2 do not meet in Zw");
    IVec target = c.w;
    if (c.k >= 0) {
        Int f = pow_int(p, static_cast<unsigned long>(c.k));
        for (Int& x : target) x *= f;
    } else {
        Int f = pow_int(p, static_cast<unsigned long>(-c.k));
        for (Int& x : target) {
            if (!divides(f, x)) throw invariant_error("p^k w is not integral");
            x = div_exact(x, f);
        }
    }
    auto side = [&](const SemigroupSet& t, const IVec& coeffs, const char* name) {
        if (coeffs.size() != t.vectors.size())
            throw invariant_error(std::string("coefficient list length mismatch on ") + name);
        IVec sum(dim, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] < 0) throw invariant_error("negative certificate coefficient");
            for (std::size_t j = 0; j < dim; ++j) sum[j] += coeffs[i] * t.vectors[i][j];
        }
        if (sum != target)
            throw invariant_error(std::string("coefficients do not express p^k w on ") + name);
    };
    side(c.t1, c.coeffs1, "t1");
    side(c.t2, c.coeffs2, "t2");
}

void validate_tree(const GluingTree& tree) {
    if (tree.is_free()) {
        if (!rationally_independent(tree.set.vectors))
            throw invariant_error("free leaf is not rationally independent");
        return;
    }
    const GluingCertificate& c = *tree.cert;
    validate_certificate(c, tree.prime);
    if (!tree.left || !tree.right) throw invariant_error("inner node lacks children");
    if (tree.left->set != c.t1 || tree.right->set != c.t2)
        throw invariant_error("children do not match the certificate sides");
    // the two sides must partition this node's list
    std::vector<std::size_t> all = c.idx1;
    all.insert(all.end(), c.idx2.begin(), c.idx2.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw invariant_error("split sides overlap");
    std::vector<std::size_t> want = tree.indices;
    std::sort(want.begin(), want.end());
    if (all != want) throw invariant_error("split sides do not partition the node");
    if (tree.prime != tree.left->prime || tree.prime != tree.right->prime)
        throw invariant_error("prime changes inside the tree");
    validate_tree(*tree.left);
    validate_tree(*tree.right);
}

namespace {

void collect_binomials(const GluingTree& node, std::size_t nvars, std::vector<Binomial>& out) {
    if (node.is_free()) return;
    const GluingCertificate& c = *node.cert;
    if (c.idx1.empty() && c.idx2.empty())
        throw precondition_error("certificate lacks root positions");
    IVec plus(nvars, 0), minus(nvars, 0);
    for (std::size_t i = 0; i < c.idx1.size(); ++i) plus[c.idx1[i]] += c.coeffs1[i];
    for (std::size_t i = 0; i < c.idx2.size(); ++i) minus[c.idx2[i]] += c.coeffs2[i];
    out.emplace_back(std::move(plus), std::move(minus));
    collect_binomials(*node.left, nvars, out);
    collect_binomials(*node.right, nvars, out);
}

}  // namespace

std::vector<Binomial> tree_binomials(const GluingTree& tree) {
    std::vector<Binomial> out;
    collect_binomials(tree, tree.set.vectors.size(), out);
    return out;
}

std::pair<Binomial, Binomial> stci_pair_prime_power(const Variety& v, int h, int k) {
    if (v.shape != Shape::Uniform)
        throw precondition_error("the prime-power pair needs the uniform shape");
    if (h < 0 || k < 0) throw precondition_error("h and k must be nonnegative");
    const Int& d = v.deg();
    std::size_t nv = v.n + 2;
    if (d == 1) {
        if (h != 0 || k != 0) throw precondition_error("d = 1 admits only h = k = 0");
        IVec p1(nv, 0), m1(nv, 0), p2(nv, 0), m2(nv, 0);
        p1[v.n] = 1;
        p2[v.n + 1] = 1;
        for (std::size_t i = 0; i < v.n; ++i) {
            m1[i] = v.a[i];
            m2[i] = v.b[i];
        }
        return {Binomial(p1, m1), Binomial(p2, m2)};
    }
    auto pp = prime_power_of(d);
    if (!pp)
        throw precondition_error(
            "d is not a prime power, so the characteristic-p pair of Proposition 1.3 does not "
            "apply");
    const Int& p = pp->first;
    int r = pp->second;
    Int pr = pow_int(p, static_cast<unsigned long>(r));
    auto build = [&](const IVec& row, int e, std::size_t yslot) {
        Int pe = pow_int(p, static_cast<unsigned long>(e));
        IVec plus(nv, 0), minus(nv, 0);
        plus[yslot] = pe;
        for (std::size_t i = 0; i < v.n; ++i) {
            Int num = row[i] * pe;
            if (!divides(pr, num))
                throw precondition_error(
                    "the requested power produces a non-integral x exponent");
            minus[i] = div_exact(num, pr);
        }
        return Binomial(std::move(plus), std::move(minus));
    };
    Binomial f1 = build(v.a, h, v.n);
    Binomial f2 = build(v.b, k, v.n + 1);
    if (!in_ideal(f1, v) || !in_ideal(f2, v))
        throw internal_error("constructed pair fails the relation test");
    return {std::move(f1), std::move(f2)};
}

std::pair<Binomial, Binomial> stci_pair_prime_power(const Variety& v) {
    if (v.shape != Shape::Uniform)
        throw precondition_error("the prime-power pair needs the uniform shape");
    auto pp = prime_power_of(v.deg());
    int r = pp ? pp->second : 0;
    return stci_pair_prime_power(v, r, r);
}

std::pair<Binomial, Binomial> stci_pair_mixed_pattern(const Variety& v, const Int& p, const Int& q,
                                                  const Int& c) {
    if (v.shape != Shape::Mixed3)
        throw precondition_error("the mixed pair needs the mixed shape");
    require_prime(p);
    require_prime(q);
    if (p == q) throw precondition_error("p and q must be distinct primes");
    if (c < 1) throw precondition_error("c must be positive");
    const Int &d1 = v.dvec[0], &d2 = v.dvec[1], &d3 = v.dvec[2];
    const Int &a1 = v.a[0], &a3 = v.a[2], &b2 = v.b[1], &b3 = v.b[2];
    if (d2 != q) throw precondition_error("pattern mismatch: d_2 must equal q");
    if (d3 != p * q) throw precondition_error("pattern mismatch: d_3 must equal pq");
    if (a3 != c * q) throw precondition_error("pattern mismatch: a_3 must equal cq");
    if (divides(p, d1)) throw precondition_error("pattern mismatch: p must not divide d_1");
    if (divides(p, c)) throw precondition_error("pattern mismatch: p must not divide c");
    if (divides(q, b2)) throw precondition_error("pattern mismatch: q must not divide b_2");
    if (divides(p, b3) || divides(q, b3))
        throw precondition_error("pattern mismatch: p and q must not divide b_3");
    IVec p1(5, 0), m1(5, 0), p2(5, 0), m2(5, 0);
    p1[3] = d1 * p;  // y1^{d1 p}
    m1[0] = a1 * p;
    m1[2] = d1 * c;
    p2[4] = p * q;  // y2^{pq}
    m2[1] = b2 * p;
    m2[2] = b3;
    Binomial f1(std::move(p1), std::move(m1)), f2(std::move(p2), std::move(m2));
    if (!in_ideal(f1, v) || !in_ideal(f2, v))
        throw internal_error("constructed pair fails the relation test");
    return {std::move(f1), std::move(f2)};
}

}  // namespace toric
