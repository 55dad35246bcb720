#include <toric/intlat.hpp>

#include <algorithm>

namespace toric {

IntMatrix::IntMatrix(const std::vector<IVec>& m) {
    rows = m.size();
    cols = m.empty() ? 0 : m[0].size();
    data.reserve(rows * cols);
    for (const auto& r : m) {
        if (r.size() != cols) throw precondition_error("ragged matrix");
        data.insert(data.end(), r.begin(), r.end());
    }
}

namespace {

void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q, std::size_t from_col) {
    if (q == 0) return;
    for (std::size_t j = from_col; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_neg(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// Row echelon by integer row operations, pivoting only in the first
// pivot_cols columns; trailing columns ride along.  Returns the rank.
std::size_t echelonize(IntMatrix& h, std::size_t pivot_cols) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < pivot_cols && r < h.rows; ++j) {
        // reduce column j below row r to a single nonzero entry via Euclid
        while (true) {
            std::size_t best = h.rows;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                if (best == h.rows || abs(h.at(i, j)) < abs(h.at(best, j))) best = i;
            }
            if (best == h.rows) break;  // column is clear
            row_swap(h, best, r);
            bool clear = true;
            for (std::size_t i = r + 1; i < h.rows; ++i) {
                if (h.at(i, j) == 0) continue;
                row_sub(h, i, r, floor_div(h.at(i, j), h.at(r, j)), 0);
                if (h.at(i, j) != 0) clear = false;
            }
            if (clear) break;
        }
        if (h.at(r, j) == 0) continue;
        if (h.at(r, j) < 0) row_neg(h, r);
        for (std::size_t i = 0; i < r; ++i) row_sub(h, i, r, floor_div(h.at(i, j), h.at(r, j)), 0);
        ++r;
    }
    return r;
}

std::size_t lead_col(const IVec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return j;
    return v.size();
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, 0};
    res.rank = echelonize(res.h, m.cols);
    return res;
}

Lattice lattice_of(std::size_t ambient_dim, const std::vector<IVec>& generators) {
    for (const auto& g : generators)
        if (g.size() != ambient_dim) throw precondition_error("generator has wrong dimension");
    Lattice l;
    l.ambient_dim = ambient_dim;
    if (generators.empty()) return l;
    auto res = hnf(IntMatrix(generators));
    for (std::size_t i = 0; i < res.rank; ++i) l.basis.push_back(res.h.row(i));
    return l;
}

bool lattice_contains(const Lattice& l, const IVec& v) {
    if (v.size() != l.ambient_dim) throw precondition_error("vector has wrong dimension");
    IVec u = v;
    for (const IVec& b : l.basis) {
        std::size_t lc = lead_col(b);
        if (u[lc] == 0) continue;
        if (!divides(b[lc], u[lc])) return false;
        Int q = div_exact(u[lc], b[lc]);
        for (std::size_t j = lc; j < u.size(); ++j) u[j] -= q * b[j];
    }
    return std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
}

Lattice lattice_intersect(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_dim != l2.ambient_dim) throw precondition_error("ambient dimensions differ");
    std::size_t n = l1.ambient_dim;
    Lattice zero;
    zero.ambient_dim = n;
    if (l1.rank() == 0 || l2.rank() == 0) return zero;

    // Left kernel of the stacked matrix [B1; -B2], read off from the
    // identity columns carried through the reduction: rows whose lattice
    // part vanished record a relation x*B1 = y*B2.
    std::size_t r1 = l1.rank(), r2 = l2.rank();
    IntMatrix s(r1 + r2, n + r1 + r2);
    for (std::size_t i = 0; i < r1; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) = l1.basis[i][j];
        s.at(i, n + i) = 1;
    }
    for (std::size_t i = 0; i < r2; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.at(r1 + i, j) = -l2.basis[i][j];
        s.at(r1 + i, n + r1 + i) = 1;
    }
    std::size_t rank = echelonize(s, n);
    std::vector<IVec> meet;
    for (std::size_t i = rank; i < s.rows; ++i) {
        IVec v(n, 0);
        for (std::size_t k = 0; k < r1; ++k)
            for (std::size_t j = 0; j < n; ++j) v[j] += s.at(i, n + k) * l1.basis[k][j];
        meet.push_back(std::move(v));
    }
    return lattice_of(n, meet);
}

std::optional<IVec> cyclic_generator(const Lattice& l) {
    if (l.rank() != 1) return std::nullopt;
    return l.basis[0];
}

namespace {

Int det_bareiss(IntMatrix m) {
    std::size_t k = m.rows;
    int sign = 1;
    Int prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m.at(p, p) == 0) {
            std::size_t sw = p + 1;
            while (sw < k && m.at(sw, p) == 0) ++sw;
            if (sw == k) return 0;
            row_swap(m, p, sw);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j)
                m.at(i, j) = div_exact(m.at(i, j) * m.at(p, p) - m.at(i, p) * m.at(p, j), prev);
            m.at(i, p) = 0;
        }
        prev = m.at(p, p);
    }
    return k == 0 ? Int(1) : Int(sign * m.at(k - 1, k - 1));
}

}  // namespace

Int gcd_max_minors(const IntMatrix& m) {
    if (m.rows > m.cols) throw precondition_error("gcd_max_minors needs rows <= cols");
    if (m.rows == 0) return 1;
    std::vector<std::size_t> pick(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) pick[i] = i;
    Int g = 0;
    while (true) {
        IntMatrix sq(m.rows, m.rows);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.rows; ++j) sq.at(i, j) = m.at(i, pick[j]);
        g = gcd(g, det_bareiss(std::move(sq)));
        std::size_t i = m.rows;
        while (i > 0 && pick[i - 1] == m.cols - m.rows + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < m.rows; ++k) pick[k] = pick[k - 1] + 1;
    }
    return abs(g);
}

std::optional<std::pair<Int, Int>> solve_linear_congruences(const std::vector<Congruence>& system,
                                                            const Int& modulus) {
    if (modulus < 1) throw precondition_error("modulus must be positive");
    for (Int x = 0; x < modulus; ++x) {
        for (Int y = 0; y < modulus; ++y) {
            bool ok = true;
            for (const auto& c : system) {
                if (mod_floor(c.coeff_x * x + c.coeff_y * y - c.rhs, modulus) != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

namespace {

struct MemberSearch {
    const std::vector<const IVec*>& gens;  // active generators, stored order
    std::size_t dim;
    std::vector<unsigned long long> suffix_support;  // OR of supports from t on

    bool covered(const IVec& rem, std::size_t t) const {
        for (std::size_t j = 0; j < dim; ++j)
            if (rem[j] > 0 && !(suffix_support[t] >> j & 1)) return false;
        return true;
    }

    // Upper bound for the coefficient of gens[t] against rem.
    Int cap(const IVec& rem, std::size_t t) const {
        std::optional<Int> bd;
        for (std::size_t j = 0; j < dim; ++j) {
            const Int& g = (*gens[t])[j];
            if (g > 0) {
                Int q = floor_div(rem[j], g);
                if (!bd || q < *bd) bd = q;
            }
        }
        return *bd;
    }

    bool dfs(IVec& rem, std::size_t t, IVec& out) {
        if (t == gens.size())
            return std::all_of(rem.begin(), rem.end(), [](const Int& x) { return x == 0; });
        if (!covered(rem, t)) return false;
        // under-supply prune: even at full caps the tail cannot reach rem
        {
            IVec reach(dim, 0);
            for (std::size_t s = t; s < gens.size(); ++s) {
                Int c = cap(rem, s);
                for (std::size_t j = 0; j < dim; ++j) reach[j] += c * (*gens[s])[j];
            }
            for (std::size_t j = 0; j < dim; ++j)
                if (reach[j] < rem[j]) return false;
        }
        // if this generator is the sole remaining cover of a coordinate its
        // coefficient is forced
        std::optional<Int> forced;
        for (std::size_t j = 0; j < dim; ++j) {
            if (rem[j] <= 0 || (*gens[t])[j] == 0) continue;
            bool sole = t + 1 == gens.size() || !(suffix_support[t + 1] >> j & 1);
            if (!sole) continue;
            if (!divides((*gens[t])[j], rem[j])) return false;
            Int c = div_exact(rem[j], (*gens[t])[j]);
            if (forced && *forced != c) return false;
            forced = c;
        }
        Int hi = cap(rem, t);
        Int lo = 0;
        if (forced) {
            if (*forced > hi) return false;
            lo = hi = *forced;
        }
        for (Int c = lo; c <= hi; ++c) {
            for (std::size_t j = 0; j < dim; ++j) rem[j] -= c * (*gens[t])[j];
            out[t] = c;
            if (dfs(rem, t + 1, out)) return true;
            for (std::size_t j = 0; j < dim; ++j) rem[j] += c * (*gens[t])[j];
        }
        out[t] = 0;
        return false;
    }
};

}  // namespace

std::optional<IVec> semigroup_member(const IVec& w, const std::vector<IVec>& gens) {
    std::size_t dim = w.size();
    if (dim > 64) throw precondition_error("ambient dimension above 64 unsupported");
    for (const Int& x : w)
        if (x < 0) throw precondition_error("negative entry in target vector");
    unsigned long long wsupp = 0;
    for (std::size_t j = 0; j < dim; ++j)
        if (w[j] > 0) wsupp |= 1ull << j;
    // generators with support outside supp(w) can only take coefficient 0
    std::vector<const IVec*> active;
    std::vector<std::size_t> active_idx;
    for (std::size_t t = 0; t < gens.size(); ++t) {
        const IVec& g = gens[t];
        if (g.size() != dim) throw precondition_error("generator has wrong dimension");
        unsigned long long supp = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (g[j] < 0) throw precondition_error("negative entry in generator");
            if (g[j] > 0) supp |= 1ull << j;
        }
        if (supp == 0) throw precondition_error("zero generator");
        if ((supp & ~wsupp) == 0) {
            active.push_back(&g);
            active_idx.push_back(t);
        }
    }
    MemberSearch search{active, dim, {}};
    search.suffix_support.assign(active.size() + 1, 0);
    for (std::size_t t = active.size(); t-- > 0;) {
        unsigned long long supp = 0;
        for (std::size_t j = 0; j < dim; ++j)
            if ((*active[t])[j] > 0) supp |= 1ull << j;
        search.suffix_support[t] = search.suffix_support[t + 1] | supp;
    }
    IVec rem = w, partial(active.size(), 0);
    if (!search.dfs(rem, 0, partial)) return std::nullopt;
    IVec out(gens.size(), 0);
    for (std::size_t t = 0; t < active.size(); ++t) out[active_idx[t]] = partial[t];
    return out;
}

}  // namespace toric
