#include <toric/model.hpp>

#include <algorithm>
#include <map>

namespace toric {

namespace {

void check_rows(std::size_t n, const IVec& a, const IVec& b) {
    if (n == 0) throw invariant_error("need at least one x variable");
    if (a.size() != n || b.size() != n) throw invariant_error("exponent rows must have length n");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < 0 || b[i] < 0) throw invariant_error("negative exponent");
        if (a[i] == 0 && b[i] == 0)
            throw invariant_error("a_i or b_i must be nonzero for every i");
    }
    // zero rows would put the zero vector into T and collapse y1 or y2
    auto zero = [](const IVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    };
    if (zero(a) || zero(b)) throw invariant_error("a and b must be nonzero vectors");
}

}  // namespace

Variety Variety::uniform(const Int& d, IVec a, IVec b) {
    if (d < 1) throw invariant_error("d must be positive");
    check_rows(a.size(), a, b);
    Variety v;
    v.shape = Shape::Uniform;
    v.n = a.size();
    v.dvec.assign(v.n, d);
    v.a = std::move(a);
    v.b = std::move(b);
    return v;
}

Variety Variety::mixed3(IVec dvec, IVec a, IVec b) {
    if (dvec.size() != 3 || a.size() != 3 || b.size() != 3)
        throw invariant_error("mixed shape needs n = 3");
    for (const Int& d : dvec)
        if (d < 1) throw invariant_error("degrees must be positive");
    check_rows(3, a, b);
    if (a[1] != 0) throw invariant_error("mixed shape needs a_2 = 0");
    if (b[0] != 0) throw invariant_error("mixed shape needs b_1 = 0");
    if (a[0] < 1 || a[2] < 1 || b[1] < 1 || b[2] < 1)
        throw invariant_error("mixed shape needs a_1, a_3, b_2, b_3 positive");
    if (gcd(dvec[0], a[0]) != 1) throw invariant_error("mixed shape needs gcd(d_1, a_1) = 1");
    if (gcd(dvec[1], b[1]) != 1) throw invariant_error("mixed shape needs gcd(d_2, b_2) = 1");
    if (gcd(gcd(dvec[2], a[2]), b[2]) != 1)
        throw invariant_error("mixed shape needs gcd(d_3, a_3, b_3) = 1");
    Variety v;
    v.shape = Shape::Mixed3;
    v.n = 3;
    v.dvec = std::move(dvec);
    v.a = std::move(a);
    v.b = std::move(b);
    return v;
}

const Int& Variety::deg() const {
    if (shape != Shape::Uniform) throw precondition_error("deg() needs the uniform shape");
    return dvec[0];
}

SemigroupSet::SemigroupSet(std::size_t dim, std::vector<IVec> vecs)
    : ambient_dim(dim), vectors(std::move(vecs)) {
    for (const IVec& v : vectors) {
        if (v.size() != ambient_dim) throw invariant_error("vector has wrong dimension");
        bool nonzero = false;
        for (const Int& x : v) {
            if (x < 0) throw invariant_error("negative entry in semigroup vector");
            if (x > 0) nonzero = true;
        }
        if (!nonzero) throw invariant_error("zero vector in semigroup set");
    }
}

Binomial::Binomial(IVec p, IVec m) : plus(std::move(p)), minus(std::move(m)) {
    if (plus.size() != minus.size()) throw invariant_error("exponent vectors differ in length");
    for (const Int& e : plus)
        if (e < 0) throw invariant_error("negative exponent");
    for (const Int& e : minus)
        if (e < 0) throw invariant_error("negative exponent");
    if (plus == minus) throw invariant_error("the two monomials coincide");
}

Variety normalize(const Variety& v) {
    if (v.shape != Shape::Uniform) throw precondition_error("normalize needs the uniform shape");
    Int g = v.deg();
    for (const Int& x : v.a) g = gcd(g, x);
    for (const Int& x : v.b) g = gcd(g, x);
    if (g <= 1) return v;
    IVec a = v.a, b = v.b;
    for (Int& x : a) x = div_exact(x, g);
    for (Int& x : b) x = div_exact(x, g);
    return Variety::uniform(div_exact(v.deg(), g), std::move(a), std::move(b));
}

SemigroupSet generator_set(const Variety& v) {
    std::vector<IVec> vecs;
    vecs.reserve(v.n + 2);
    for (std::size_t i = 0; i < v.n; ++i) {
        IVec e(v.n, 0);
        e[i] = v.dvec[i];
        vecs.push_back(std::move(e));
    }
    vecs.push_back(v.a);
    vecs.push_back(v.b);
    return SemigroupSet(v.n, std::move(vecs));
}

namespace {

IVec weight_of(const IVec& expo, const SemigroupSet& t) {
    IVec w(t.ambient_dim, 0);
    for (std::size_t k = 0; k < t.vectors.size(); ++k)
        for (std::size_t j = 0; j < t.ambient_dim; ++j) w[j] += expo[k] * t.vectors[k][j];
    return w;
}

}  // namespace

bool in_ideal(const Binomial& f, const Variety& v) {
    if (f.plus.size() != v.n + 2)
        throw precondition_error("binomial has the wrong number of variables");
    SemigroupSet t = generator_set(v);
    return weight_of(f.plus, t) == weight_of(f.minus, t);
}

namespace {

void monomials_rec(std::size_t nvars, int bound, IVec& cur, int used, std::size_t at,
                   std::vector<IVec>& out) {
    if (at == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; used + e <= bound; ++e) {
        cur[at] = e;
        monomials_rec(nvars, bound, cur, used + e, at + 1, out);
    }
    cur[at] = 0;
}

Int total_degree(const IVec& e) {
    Int s = 0;
    for (const Int& x : e) s += x;
    return s;
}

bool graded_lex_less(const IVec& x, const IVec& y) {
    Int dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx < dy;
    return x < y;
}

// plus should be the side whose (y1, y2) exponents are lex larger; disjoint
// supports make a tie possible only for y-free pairs, which fall back to
// graded-lex.
bool plus_side_less(const IVec& x, const IVec& y) {
    std::size_t n = x.size() - 2;
    IVec yx(x.begin() + n, x.end()), yy(y.begin() + n, y.end());
    if (yx != yy) return yx < yy;
    return graded_lex_less(x, y);
}

}  // namespace

std::vector<Binomial> enumerate_ideal_binomials(const Variety& v, int degree_bound) {
    if (degree_bound < 1) throw precondition_error("degree bound must be at least 1");
    SemigroupSet t = generator_set(v);
    std::size_t nvars = v.n + 2;
    std::vector<IVec> mons;
    IVec cur(nvars, 0);
    monomials_rec(nvars, degree_bound, cur, 0, 0, mons);
    std::map<IVec, std::vector<const IVec*>> by_weight;
    for (const IVec& m : mons) by_weight[weight_of(m, t)].push_back(&m);
    std::vector<Binomial> out;
    for (const auto& [w, group] : by_weight) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const IVec &x = *group[i], &y = *group[j];
                bool disjoint = true;
                for (std::size_t k = 0; k < nvars && disjoint; ++k)
                    if (x[k] > 0 && y[k] > 0) disjoint = false;
                if (!disjoint) continue;
                if (plus_side_less(x, y))
                    out.emplace_back(y, x);
                else
                    out.emplace_back(x, y);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Binomial& f, const Binomial& g) {
        if (f.plus != g.plus) return graded_lex_less(f.plus, g.plus);
        return graded_lex_less(f.minus, g.minus);
    });
    return out;
}

}  // namespace toric
