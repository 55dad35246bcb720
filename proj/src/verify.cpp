#include <toric/verify.hpp>

#include <algorithm>
#include <set>
#include <utility>

namespace toric {

namespace {

// dense coefficient vectors over F_p, low degree first, entries in [0, p)
using Poly = std::vector<int>;

// remainder of f by a monic g, in place arithmetic mod p
Poly poly_rem(Poly f, const Poly& g, int p) {
    int dg = int(g.size()) - 1;
    for (int i = int(f.size()) - 1; i >= dg; --i) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int& t = f[i - dg + j];
            t = (t + (p - c % p) * g[j]) % p;
        }
    }
    f.resize(dg);
    return f;
}

bool is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..deg(f)/2
bool is_irreducible(const Poly& f, int p) {
    int m = int(f.size()) - 1;
    for (int k = 1; 2 * k <= m; ++k) {
        Poly g(k + 1, 0);
        g[k] = 1;
        // odometer over the k lower coefficients
        while (true) {
            if (is_zero(poly_rem(f, g, p))) return false;
            int at = 0;
            while (at < k && ++g[at] == p) g[at++] = 0;
            if (at == k) break;
        }
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::make(const Int& p, int m) {
    if (p < 2 || !is_prime(p)) throw invariant_error("field characteristic must be prime");
    if (m < 1) throw invariant_error("extension degree must be at least 1");
    Int q = pow_int(p, static_cast<unsigned long>(m));
    if (q > Int(max_field_order)) throw cap_error("field order exceeds the 2^20 cap");
    FieldSpec s;
    s.p = p;
    s.m = m;
    s.modulus.assign(m + 1, 0);
    s.modulus[m] = 1;
    if (m == 1) return s;  // the polynomial x; unused by the arithmetic
    // scan candidates in ascending lexicographic order of (c0, ..., c_{m-1})
    int pi = int(p.get_si());
    Poly f(m + 1, 0);
    f[m] = 1;
    for (Int code = 0; code < q; ++code) {
        Int rest = code;
        for (int i = m - 1; i >= 0; --i) {
            f[i] = int(mod_floor(rest, p).get_si());
            rest = floor_div(rest, p);
        }
        if (is_irreducible(f, pi)) {
            for (int i = 0; i < m; ++i) s.modulus[i] = f[i];
            return s;
        }
    }
    throw internal_error("no irreducible polynomial of the requested degree");
}

std::string FieldSpec::name() const { return "GF(" + order().get_str() + ")"; }

Int FieldSpec::order() const { return pow_int(p, static_cast<unsigned long>(m)); }

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
    FieldSpec canonical = FieldSpec::make(spec_.p, spec_.m);  // revalidates p, m, cap
    if (spec_.modulus.size() != std::size_t(spec_.m) + 1 || spec_.modulus[spec_.m] != 1)
        throw invariant_error("modulus must be monic of degree m");
    for (int c : spec_.modulus)
        if (c < 0 || Int(c) >= spec_.p) throw invariant_error("modulus coefficient out of range");
    if (spec_.m >= 2) {
        Poly f(spec_.modulus.begin(), spec_.modulus.end());
        if (!is_irreducible(f, int(spec_.p.get_si())))
            throw invariant_error("modulus is not irreducible");
    }
    (void)canonical;
    p_ = std::uint32_t(spec_.p.get_ui());
    q_ = std::uint32_t(spec_.order().get_ui());

    if (q_ == 2) {
        gen_ = 1;
    } else {
        for (std::uint32_t g = 2; g < q_; ++g) {
            std::uint32_t x = 1, ord = 0;
            do {
                x = mul_poly(x, g);
                ++ord;
            } while (x != 1);
            if (ord == q_ - 1) {
                gen_ = g;
                break;
            }
        }
        if (gen_ == 0) throw internal_error("no multiplicative generator found");
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_poly(x, gen_);
    }
    if (x != 1) throw internal_error("generator order is not q - 1");
}

std::uint32_t FiniteField::add(std::uint32_t x, std::uint32_t y) const {
    if (p_ == 2) return x ^ y;
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < spec_.m; ++i) {
        out += (x % p_ + y % p_) % p_ * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FiniteField::neg(std::uint32_t x) const {
    if (p_ == 2) return x;
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < spec_.m; ++i) {
        out += (p_ - x % p_) % p_ * place;
        x /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FiniteField::mul_poly(std::uint32_t x, std::uint32_t y) const {
    int m = spec_.m;
    std::vector<std::uint32_t> xs(m), ys(m), prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        xs[i] = x % p_;
        x /= p_;
        ys[i] = y % p_;
        y /= p_;
    }
    for (int i = 0; i < m; ++i) {
        if (xs[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + xs[i] * ys[j]) % p_;
    }
    for (int i = 2 * m - 2; i >= m; --i) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < m; ++j)
            prod[i - m + j] =
                (prod[i - m + j] + (p_ - c) * std::uint32_t(spec_.modulus[j])) % p_;
    }
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < m; ++i) {
        out += prod[i] * place;
        place *= p_;
    }
    return out;
}

std::uint32_t FiniteField::mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    std::uint64_t s = std::uint64_t(log_[x]) + log_[y];
    return exp_[s % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t x, const Int& e) const {
    if (e < 0) throw precondition_error("negative exponent in field power");
    if (x == 0) return e == 0 ? 1 : 0;
    std::uint64_t em = mpz_fdiv_ui(e.get_mpz_t(), q_ - 1);
    return exp_[std::uint64_t(log_[x]) * em % (q_ - 1)];
}

namespace {

// ext code -> base code for elements of the base subfield, -1 elsewhere.
// The subfield is located by sending the base generator to the first root
// of the base modulus; the resulting point sets are root-independent
// because the parametrization has prime-field coefficients.
std::vector<std::int64_t> subfield_back_map(const FiniteField& bf, const FiniteField& ext) {
    std::vector<std::int64_t> back(ext.order(), -1);
    if (bf.order() == ext.order()) {
        for (std::uint32_t c = 0; c < ext.order(); ++c) back[c] = c;
        return back;
    }
    const std::vector<int>& mod = bf.spec().modulus;
    std::uint32_t root = 0;
    bool found = false;
    for (std::uint32_t z = 0; z < ext.order() && !found; ++z) {
        std::uint32_t val = 0;
        for (int i = int(mod.size()) - 1; i >= 0; --i)
            val = ext.add(ext.mul(val, z), std::uint32_t(mod[i]));
        if (val == 0) {
            root = z;
            found = true;
        }
    }
    if (!found) throw internal_error("base modulus has no root in the extension");
    std::uint32_t p = bf.characteristic();
    for (std::uint32_t c = 0; c < bf.order(); ++c) {
        std::uint32_t img = 0, rp = 1, rest = c;
        for (int i = 0; i < bf.spec().m; ++i) {
            img = ext.add(img, ext.mul(rest % p, rp));
            rest /= p;
            rp = ext.mul(rp, root);
        }
        if (back[img] != -1) throw internal_error("subfield embedding is not injective");
        back[img] = c;
    }
    return back;
}

std::vector<std::uint32_t> power_table(const FiniteField& f, const Int& e) {
    std::vector<std::uint32_t> t(f.order());
    for (std::uint32_t z = 0; z < f.order(); ++z) t[z] = f.pow(z, e);
    return t;
}

}  // namespace

PointSet image_points(const Variety& v, const FieldSpec& base, int ext_max) {
    if (ext_max < 1) throw precondition_error("ext_max must be at least 1");
    Int total = 0;
    for (int t = 1; t <= ext_max; ++t) {
        Int qe = pow_int(base.order(), static_cast<unsigned long>(t));
        if (qe > Int(max_field_order))
            throw cap_error("extension field order exceeds the 2^20 cap");
        total += pow_int(qe, static_cast<unsigned long>(v.n));
    }
    if (total > Int(max_enumeration))
        throw cap_error("parameter enumeration exceeds the 2^24 cap");

    FiniteField bf(base);
    std::set<std::vector<std::uint32_t>> pts;
    for (int t = 1; t <= ext_max; ++t) {
        FiniteField ext = t == 1 ? bf : FiniteField(base.p, base.m * t);
        std::vector<std::int64_t> back = subfield_back_map(bf, ext);
        std::vector<std::vector<std::uint32_t>> powd(v.n), powa(v.n), powb(v.n);
        for (std::size_t i = 0; i < v.n; ++i) {
            powd[i] = power_table(ext, v.dvec[i]);
            powa[i] = power_table(ext, v.a[i]);
            powb[i] = power_table(ext, v.b[i]);
        }
        std::vector<std::uint32_t> u(v.n, 0), coords(v.n + 2);
        while (true) {
            bool inbase = true;
            for (std::size_t i = 0; i < v.n && inbase; ++i) {
                std::int64_t c = back[powd[i][u[i]]];
                if (c < 0)
                    inbase = false;
                else
                    coords[i] = std::uint32_t(c);
            }
            if (inbase) {
                std::uint32_t y1 = 1, y2 = 1;
                for (std::size_t i = 0; i < v.n; ++i) {
                    y1 = ext.mul(y1, powa[i][u[i]]);
                    y2 = ext.mul(y2, powb[i][u[i]]);
                }
                std::int64_t c1 = back[y1], c2 = back[y2];
                if (c1 >= 0 && c2 >= 0) {
                    coords[v.n] = std::uint32_t(c1);
                    coords[v.n + 1] = std::uint32_t(c2);
                    pts.insert(coords);
                }
            }
            std::size_t at = v.n;
            while (at > 0 && ++u[at - 1] == ext.order()) u[--at] = 0;
            if (at == 0) break;
        }
    }
    PointSet out;
    out.ambient_dim = v.n + 2;
    out.points.assign(pts.begin(), pts.end());
    return out;
}

PointSet zero_set(const std::vector<Binomial>& polys, const FieldSpec& base,
                  std::size_t ambient) {
    for (const Binomial& f : polys)
        if (f.plus.size() != ambient)
            throw precondition_error("binomial arity differs from the ambient dimension");
    if (pow_int(base.order(), static_cast<unsigned long>(ambient)) > Int(max_enumeration))
        throw cap_error("affine scan exceeds the 2^24 cap");
    FiniteField f(base);
    std::vector<std::vector<std::vector<std::uint32_t>>> pp(polys.size()), pm(polys.size());
    for (std::size_t k = 0; k < polys.size(); ++k)
        for (std::size_t j = 0; j < ambient; ++j) {
            pp[k].push_back(power_table(f, polys[k].plus[j]));
            pm[k].push_back(power_table(f, polys[k].minus[j]));
        }
    PointSet out;
    out.ambient_dim = ambient;
    std::vector<std::uint32_t> x(ambient, 0);
    while (true) {
        bool zero = true;
        for (std::size_t k = 0; k < polys.size() && zero; ++k) {
            std::uint32_t plus = 1, minus = 1;
            for (std::size_t j = 0; j < ambient; ++j) {
                plus = f.mul(plus, pp[k][j][x[j]]);
                minus = f.mul(minus, pm[k][j][x[j]]);
            }
            zero = plus == minus;
        }
        if (zero) out.points.push_back(x);
        std::size_t at = ambient;
        while (at > 0 && ++x[at - 1] == f.order()) x[--at] = 0;
        if (at == 0) break;
    }
    return out;  // the odometer emits tuples in ascending lex order
}

bool containment_check(const Variety& v, const std::vector<Binomial>& polys) {
    return std::all_of(polys.begin(), polys.end(),
                       [&](const Binomial& f) { return in_ideal(f, v); });
}

EqualityReport equality_experiment(const Variety& v, const std::vector<Binomial>& polys,
                                   const FieldSpec& base, int ext_max) {
    PointSet image = image_points(v, base, ext_max);
    PointSet zeros = zero_set(polys, base, v.n + 2);
    EqualityReport rep;
    rep.field = base;
    rep.image_count = image.points.size();
    rep.zero_count = zeros.points.size();
    std::set_difference(zeros.points.begin(), zeros.points.end(), image.points.begin(),
                        image.points.end(), std::back_inserter(rep.excess));
    return rep;
}

}  // namespace toric
