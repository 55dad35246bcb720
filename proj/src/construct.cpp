#include <toric/construct.hpp>

namespace toric {

std::pair<IntMatrix, IntMatrix> build_A_matrices(const Variety& v) {
    if (v.shape != Shape::Uniform)
        throw precondition_error("the A matrices need the uniform shape");
    const Int& d = v.deg();
    IntMatrix a1(v.n, v.n + 1), a2(v.n, v.n + 2);
    for (std::size_t i = 0; i < v.n; ++i) {
        a1.at(i, i) = d;
        a2.at(i, i) = d;
        a1.at(i, v.n) = v.a[i];
        a2.at(i, v.n) = v.a[i];
        a2.at(i, v.n + 1) = v.b[i];
    }
    return {std::move(a1), std::move(a2)};
}

namespace {

Binomial saturated_row_binomial(const Variety& v, std::size_t yslot, const Int& dd,
                                const IVec& row) {
    IVec plus(v.n + 2, 0), minus(v.n + 2, 0);
    plus[v.n + yslot] = dd;
    for (std::size_t i = 0; i < v.n; ++i) minus[i] = row[i];
    return Binomial(std::move(plus), std::move(minus));
}

}  // namespace

TripleResult almost_sci_triple(const Variety& v, const Int& delta_bound) {
    if (v.shape != Shape::Uniform) throw precondition_error("the triple needs the uniform shape");
    if (normalize(v) != v) throw precondition_error("the triple needs a normalized variety");
    if (delta_bound < 0) throw precondition_error("the delta bound must be nonnegative");
    const Int& d = v.deg();

    TripleResult r;
    Int ga = gcd(d, gcd_vec(v.a)), gb = gcd(d, gcd_vec(v.b));
    r.dprime = div_exact(d, ga);
    r.dsecond = div_exact(d, gb);
    IVec ap = v.a, bp = v.b;
    for (Int& x : ap) x = div_exact(x, ga);
    for (Int& x : bp) x = div_exact(x, gb);
    r.f1 = saturated_row_binomial(v, 0, r.dprime, ap);
    r.f2 = saturated_row_binomial(v, 1, r.dsecond, bp);

    auto [a1, a2] = build_A_matrices(v);
    r.g1 = gcd_max_minors(a1);
    r.g2 = gcd_max_minors(a2);
    if (r.g2 == 0 || !divides(r.g2, r.g1))
        throw internal_error("g2 does not divide g1 on a valid input");
    r.e = div_exact(r.g1, r.g2);

    auto try_delta = [&](const Int& delta) {
        IVec vv(v.n);
        for (std::size_t i = 0; i < v.n; ++i) {
            Int num = delta * v.a[i] - r.e * v.b[i];
            if (!divides(d, num)) return false;
            vv[i] = div_exact(num, d);
        }
        IVec plus(v.n + 2, 0), minus(v.n + 2, 0);
        for (std::size_t i = 0; i < v.n; ++i) {
            if (vv[i] < 0)
                plus[i] = -vv[i];
            else
                minus[i] = vv[i];
        }
        if (delta > 0)
            plus[v.n] = delta;
        else
            minus[v.n] = -delta;
        minus[v.n + 1] = r.e;
        r.f3 = Binomial(std::move(plus), std::move(minus));
        r.delta = delta;
        return true;
    };
    bool found = try_delta(0);
    for (Int s = 1; !found && s <= delta_bound; ++s) found = try_delta(s) || try_delta(-s);
    if (!found) throw bound_error("construction bound exhausted");

    if (!in_ideal(r.f1, v) || !in_ideal(r.f2, v) || !in_ideal(r.f3, v))
        throw internal_error("constructed triple fails the relation test");
    return r;
}

TripleResult almost_sci_triple(const Variety& v) {
    if (v.shape != Shape::Uniform) throw precondition_error("the triple needs the uniform shape");
    return almost_sci_triple(v, v.deg() * Int(v.n + 2));
}

}  // namespace toric
