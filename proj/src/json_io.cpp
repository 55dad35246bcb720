#include <toric/json_io.hpp>

#include <cstdint>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

namespace toric {

namespace {

const Json& expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) throw schema_error(where + ": expected an object");
    return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error(where + ": expected an array");
    return j;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    expect_object(j, where);
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(where + ": missing key \"" + key + "\"");
    return *it;
}

bool bool_at(const Json& j, const std::string& where) {
    if (!j.is_boolean()) throw schema_error(where + ": expected a boolean");
    return j.get<bool>();
}

std::string string_at(const Json& j, const std::string& where) {
    if (!j.is_string()) throw schema_error(where + ": expected a string");
    return j.get<std::string>();
}

std::int64_t i64_at(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw schema_error(where + ": expected an integer");
    return j.get<std::int64_t>();
}

std::size_t size_at(const Json& j, const std::string& where) {
    std::int64_t x = i64_at(j, where);
    if (x < 0) throw schema_error(where + ": expected a nonnegative integer");
    return std::size_t(x);
}

std::vector<std::size_t> sizes_at(const Json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(size_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw schema_error("input is not valid JSON");
    return j;
}

Json int_to_json(const Int& x) {
    if (!x.fits_slong_p()) throw cap_error("integer exceeds the JSON int64 range");
    return std::int64_t(x.get_si());
}

Int int_from_json(const Json& j, const std::string& where) {
    return Int(static_cast<long>(i64_at(j, where)));
}

Json ivec_to_json(const IVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

IVec ivec_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    IVec out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::string monomial_string(const IVec& exps, std::size_t nx) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += i < nx ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - nx + 1);
        if (exps[i] != 1) out += "^" + exps[i].get_str();
    }
    return out.empty() ? "1" : out;
}

std::string binomial_string(const Binomial& f, std::size_t nx) {
    return monomial_string(f.plus, nx) + " - " + monomial_string(f.minus, nx);
}

Json variety_to_json(const Variety& v) {
    Json j;
    if (v.shape == Shape::Uniform) {
        j["kind"] = "uniform";
        j["d"] = int_to_json(v.dvec[0]);
    } else {
        j["kind"] = "mixed3";
        j["d"] = ivec_to_json(v.dvec);
    }
    j["a"] = ivec_to_json(v.a);
    j["b"] = ivec_to_json(v.b);
    return j;
}

Variety variety_from_json(const Json& j) {
    expect_object(j, "$");
    std::string kind = string_at(field(j, "kind", "$"), "$.kind");
    IVec a = ivec_from_json(field(j, "a", "$"), "$.a");
    IVec b = ivec_from_json(field(j, "b", "$"), "$.b");
    if (kind == "uniform")
        return Variety::uniform(int_from_json(field(j, "d", "$"), "$.d"), a, b);
    if (kind == "mixed3")
        return Variety::mixed3(ivec_from_json(field(j, "d", "$"), "$.d"), a, b);
    throw schema_error("$.kind: expected \"uniform\" or \"mixed3\"");
}

Json binomial_to_json(const Binomial& f, std::size_t nx) {
    Json j;
    j["plus"] = ivec_to_json(f.plus);
    j["minus"] = ivec_to_json(f.minus);
    j["str"] = binomial_string(f, nx);
    return j;
}

Binomial binomial_from_json(const Json& j, const std::string& where) {
    IVec plus = ivec_from_json(field(j, "plus", where), where + ".plus");
    IVec minus = ivec_from_json(field(j, "minus", where), where + ".minus");
    return Binomial(std::move(plus), std::move(minus));
}

Json condition_report_to_json(const ConditionReport& r) {
    Json j;
    j["shape"] = r.shape == Shape::Uniform ? "uniform" : "mixed3";
    if (r.a) {
        Json c;
        c["holds"] = r.a->holds;
        if (r.a->i) c["i"] = *r.a->i;
        if (r.a->j) c["j"] = *r.a->j;
        j["a"] = c;
    }
    if (r.b) {
        Json c;
        c["holds"] = r.b->holds;
        c["failures"] = r.b->failures;
        j["b"] = c;
    }
    if (r.c) {
        Json c;
        c["holds"] = r.c->holds;
        if (r.c->mu) c["mu"] = int_to_json(*r.c->mu);
        if (r.c->direction)
            c["direction"] = *r.c->direction == MuDirection::AFromB ? "a=mu*b" : "b=mu*a";
        j["c"] = c;
    }
    if (r.d) {
        Json c;
        c["holds"] = r.d->holds;
        if (r.d->i) c["i"] = *r.d->i;
        j["d"] = c;
    }
    if (r.i) {
        Json c;
        c["holds"] = r.i->holds;
        if (r.i->xy) {
            c["x"] = int_to_json(r.i->xy->first);
            c["y"] = int_to_json(r.i->xy->second);
        }
        j["i"] = c;
    }
    if (r.ii) {
        Json c;
        c["holds"] = r.ii->holds;
        c["d3prime"] = int_to_json(r.ii->d3prime);
        j["ii"] = c;
    }
    j["all_hold"] = r.all_hold();
    return j;
}

ConditionReport condition_report_from_json(const Json& j) {
    ConditionReport r;
    std::string shape = string_at(field(j, "shape", "$"), "$.shape");
    if (shape == "uniform")
        r.shape = Shape::Uniform;
    else if (shape == "mixed3")
        r.shape = Shape::Mixed3;
    else
        throw schema_error("$.shape: expected \"uniform\" or \"mixed3\"");
    if (j.contains("a")) {
        const Json& c = j["a"];
        CondA a;
        a.holds = bool_at(field(c, "holds", "$.a"), "$.a.holds");
        if (c.contains("i")) a.i = size_at(c["i"], "$.a.i");
        if (c.contains("j")) a.j = size_at(c["j"], "$.a.j");
        r.a = a;
    }
    if (j.contains("b")) {
        const Json& c = j["b"];
        CondB b;
        b.holds = bool_at(field(c, "holds", "$.b"), "$.b.holds");
        b.failures = sizes_at(field(c, "failures", "$.b"), "$.b.failures");
        r.b = b;
    }
    if (j.contains("c")) {
        const Json& c = j["c"];
        CondC cc;
        cc.holds = bool_at(field(c, "holds", "$.c"), "$.c.holds");
        if (c.contains("mu")) cc.mu = int_from_json(c["mu"], "$.c.mu");
        if (c.contains("direction")) {
            std::string dir = string_at(c["direction"], "$.c.direction");
            if (dir == "a=mu*b")
                cc.direction = MuDirection::AFromB;
            else if (dir == "b=mu*a")
                cc.direction = MuDirection::BFromA;
            else
                throw schema_error("$.c.direction: expected \"a=mu*b\" or \"b=mu*a\"");
        }
        r.c = cc;
    }
    if (j.contains("d")) {
        const Json& c = j["d"];
        CondD d;
        d.holds = bool_at(field(c, "holds", "$.d"), "$.d.holds");
        if (c.contains("i")) d.i = size_at(c["i"], "$.d.i");
        r.d = d;
    }
    if (j.contains("i")) {
        const Json& c = j["i"];
        CondI ci;
        ci.holds = bool_at(field(c, "holds", "$.i"), "$.i.holds");
        if (c.contains("x") || c.contains("y"))
            ci.xy = std::make_pair(int_from_json(field(c, "x", "$.i"), "$.i.x"),
                                   int_from_json(field(c, "y", "$.i"), "$.i.y"));
        r.i = ci;
    }
    if (j.contains("ii")) {
        const Json& c = j["ii"];
        CondII cii;
        cii.holds = bool_at(field(c, "holds", "$.ii"), "$.ii.holds");
        cii.d3prime = int_from_json(field(c, "d3prime", "$.ii"), "$.ii.d3prime");
        r.ii = cii;
    }
    return r;
}

namespace {

Json ara_entry_to_json(const AraEntry& e, const std::string& label) {
    Json j;
    j["char"] = label;
    j["lower"] = e.lower;
    j["upper"] = e.upper;
    j["exact"] = e.exact();
    j["rules"] = e.rules;
    return j;
}

AraEntry ara_entry_from_json(const Json& j, const std::string& where) {
    AraEntry e;
    e.lower = int(i64_at(field(j, "lower", where), where + ".lower"));
    e.upper = int(i64_at(field(j, "upper", where), where + ".upper"));
    const Json& rules = expect_array(field(j, "rules", where), where + ".rules");
    e.rules.clear();
    for (std::size_t i = 0; i < rules.size(); ++i)
        e.rules.push_back(string_at(rules[i], where + ".rules[" + std::to_string(i) + "]"));
    return e;
}

}  // namespace

Json ara_report_to_json(const AraReport& r) {
    Json entries = Json::array();
    entries.push_back(ara_entry_to_json(r.char0, "0"));
    for (const auto& [p, e] : r.char_p) entries.push_back(ara_entry_to_json(e, p.get_str()));
    entries.push_back(ara_entry_to_json(r.other_primes, "other_primes"));
    Json j;
    j["entries"] = entries;
    return j;
}

AraReport ara_report_from_json(const Json& j) {
    AraReport r;
    const Json& entries = expect_array(field(j, "entries", "$"), "$.entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string where = "$.entries[" + std::to_string(i) + "]";
        const Json& e = expect_object(entries[i], where);
        std::string label = string_at(field(e, "char", where), where + ".char");
        AraEntry entry = ara_entry_from_json(e, where);
        if (label == "0") {
            r.char0 = entry;
        } else if (label == "other_primes") {
            r.other_primes = entry;
        } else {
            Int p;
            try {
                p = Int(label);
            } catch (const std::invalid_argument&) {
                throw schema_error(where + ".char: expected \"0\", a prime, or \"other_primes\"");
            }
            r.char_p[p] = entry;
        }
    }
    return r;
}

Json gluing_tree_to_json(const GluingTree& t) {
    Json j;
    j["prime"] = int_to_json(t.prime);
    j["indices"] = t.indices;
    Json set = Json::array();
    for (const IVec& v : t.set.vectors) set.push_back(ivec_to_json(v));
    j["set"] = set;
    j["free"] = t.is_free();
    if (t.cert) {
        j["w"] = ivec_to_json(t.cert->w);
        j["k"] = t.cert->k;
        j["coeffs1"] = ivec_to_json(t.cert->coeffs1);
        j["coeffs2"] = ivec_to_json(t.cert->coeffs2);
        j["idx1"] = t.cert->idx1;
        j["idx2"] = t.cert->idx2;
        j["left"] = gluing_tree_to_json(*t.left);
        j["right"] = gluing_tree_to_json(*t.right);
    }
    return j;
}

namespace {

GluingTree tree_from_json(const Json& j, const std::string& where) {
    expect_object(j, where);
    GluingTree t;
    t.prime = int_from_json(field(j, "prime", where), where + ".prime");
    t.indices = sizes_at(field(j, "indices", where), where + ".indices");
    const Json& set = expect_array(field(j, "set", where), where + ".set");
    if (set.empty()) throw schema_error(where + ".set: must be nonempty");
    std::vector<IVec> vecs;
    for (std::size_t i = 0; i < set.size(); ++i) {
        vecs.push_back(ivec_from_json(set[i], where + ".set[" + std::to_string(i) + "]"));
        if (vecs.back().size() != vecs[0].size())
            throw schema_error(where + ".set: rows differ in length");
    }
    t.set = SemigroupSet(vecs[0].size(), vecs);
    if (bool_at(field(j, "free", where), where + ".free")) return t;
    GluingCertificate c;
    c.w = ivec_from_json(field(j, "w", where), where + ".w");
    c.k = int(i64_at(field(j, "k", where), where + ".k"));
    c.coeffs1 = ivec_from_json(field(j, "coeffs1", where), where + ".coeffs1");
    c.coeffs2 = ivec_from_json(field(j, "coeffs2", where), where + ".coeffs2");
    c.idx1 = sizes_at(field(j, "idx1", where), where + ".idx1");
    c.idx2 = sizes_at(field(j, "idx2", where), where + ".idx2");
    auto left = std::make_shared<const GluingTree>(tree_from_json(field(j, "left", where), where + ".left"));
    auto right = std::make_shared<const GluingTree>(tree_from_json(field(j, "right", where), where + ".right"));
    c.t1 = left->set;
    c.t2 = right->set;
    t.cert = std::move(c);
    t.left = std::move(left);
    t.right = std::move(right);
    return t;
}

}  // namespace

GluingTree gluing_tree_from_json(const Json& j) { return tree_from_json(j, "$"); }

Json triple_to_json(const TripleResult& t, std::size_t nx) {
    Json j;
    j["f1"] = binomial_to_json(t.f1, nx);
    j["f2"] = binomial_to_json(t.f2, nx);
    j["f3"] = binomial_to_json(t.f3, nx);
    j["dprime"] = int_to_json(t.dprime);
    j["dsecond"] = int_to_json(t.dsecond);
    j["g1"] = int_to_json(t.g1);
    j["g2"] = int_to_json(t.g2);
    j["e"] = int_to_json(t.e);
    j["delta"] = int_to_json(t.delta);
    return j;
}

TripleResult triple_from_json(const Json& j) {
    expect_object(j, "$");
    TripleResult t;
    t.f1 = binomial_from_json(field(j, "f1", "$"), "$.f1");
    t.f2 = binomial_from_json(field(j, "f2", "$"), "$.f2");
    t.f3 = binomial_from_json(field(j, "f3", "$"), "$.f3");
    t.dprime = int_from_json(field(j, "dprime", "$"), "$.dprime");
    t.dsecond = int_from_json(field(j, "dsecond", "$"), "$.dsecond");
    t.g1 = int_from_json(field(j, "g1", "$"), "$.g1");
    t.g2 = int_from_json(field(j, "g2", "$"), "$.g2");
    t.e = int_from_json(field(j, "e", "$"), "$.e");
    t.delta = int_from_json(field(j, "delta", "$"), "$.delta");
    return t;
}

Json equality_report_to_json(const EqualityReport& r) {
    Json j;
    j["field"] = r.field.name();
    j["modulus"] = r.field.modulus;
    j["image_count"] = r.image_count;
    j["zero_count"] = r.zero_count;
    Json ex = Json::array();
    for (const std::vector<std::uint32_t>& p : r.excess) ex.push_back(p);
    j["excess"] = ex;
    return j;
}

EqualityReport equality_report_from_json(const Json& j) {
    expect_object(j, "$");
    EqualityReport r;
    std::string name = string_at(field(j, "field", "$"), "$.field");
    if (name.size() < 5 || name.substr(0, 3) != "GF(" || name.back() != ')')
        throw schema_error("$.field: expected \"GF(q)\"");
    Int q;
    try {
        q = Int(name.substr(3, name.size() - 4));
    } catch (const std::invalid_argument&) {
        throw schema_error("$.field: expected \"GF(q)\" with integer q");
    }
    const Json& mod = expect_array(field(j, "modulus", "$"), "$.modulus");
    if (mod.size() < 2) throw schema_error("$.modulus: expected degree >= 1");
    FieldSpec spec;
    spec.m = int(mod.size()) - 1;
    for (std::size_t i = 0; i < mod.size(); ++i)
        spec.modulus.push_back(int(i64_at(mod[i], "$.modulus[" + std::to_string(i) + "]")));
    if (mpz_root(spec.p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(spec.m)) == 0)
        throw schema_error("$.field: order is not an exact power matching the modulus degree");
    if (!is_prime(spec.p) || pow_int(spec.p, static_cast<unsigned long>(spec.m)) != q)
        throw schema_error("$.field: order is not a prime power matching the modulus degree");
    r.field = spec;
    r.image_count = size_at(field(j, "image_count", "$"), "$.image_count");
    r.zero_count = size_at(field(j, "zero_count", "$"), "$.zero_count");
    const Json& ex = expect_array(field(j, "excess", "$"), "$.excess");
    for (std::size_t i = 0; i < ex.size(); ++i) {
        std::string where = "$.excess[" + std::to_string(i) + "]";
        const Json& pt = expect_array(ex[i], where);
        std::vector<std::uint32_t> coords;
        for (std::size_t k = 0; k < pt.size(); ++k)
            coords.push_back(
                std::uint32_t(size_at(pt[k], where + "[" + std::to_string(k) + "]")));
        r.excess.push_back(std::move(coords));
    }
    return r;
}

}  // namespace toric
