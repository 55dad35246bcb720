#include <toric/cli.hpp>

#include <toric/analyze.hpp>
#include <toric/construct.hpp>
#include <toric/gluing.hpp>
#include <toric/json_io.hpp>
#include <toric/model.hpp>
#include <toric/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace toric {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream f(path, std::ios::binary);
    if (!f) throw schema_error("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

int resolve_kmax(const std::optional<int>& flag) {
    if (flag) {
        if (*flag < 0) throw schema_error("--kmax must be nonnegative");
        return *flag;
    }
    if (const char* env = std::getenv("TORIC_ARA_KMAX")) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(env, &pos);
            if (pos == std::strlen(env) && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw schema_error("TORIC_ARA_KMAX must be a nonnegative integer");
    }
    return default_k_max;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string vec_str(const IVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string idx_str(const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

std::string point_str(const std::vector<std::uint32_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string modulus_str(const FieldSpec& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.modulus.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(f.modulus[i]);
    }
    return out + "]";
}

std::string variety_line(const Variety& v) {
    std::string head = v.shape == Shape::Uniform
                           ? "uniform: d = " + v.dvec[0].get_str()
                           : "mixed3: d = " + vec_str(v.dvec);
    return head + ", a = " + vec_str(v.a) + ", b = " + vec_str(v.b);
}

void render_conditions(std::ostream& out, const ConditionReport& r) {
    out << "conditions:\n";
    auto verdict = [](bool h) { return h ? "holds" : "fails"; };
    if (r.a) {
        out << "  (A) " << verdict(r.a->holds);
        if (r.a->i) out << " (i = " << *r.a->i << ", j = " << *r.a->j << ")";
        out << "\n";
    }
    if (r.b) {
        out << "  (B) " << verdict(r.b->holds);
        if (!r.b->failures.empty()) {
            out << " (at i =";
            for (std::size_t i : r.b->failures) out << " " << i;
            out << ")";
        }
        out << "\n";
    }
    if (r.c) {
        out << "  (C) " << verdict(r.c->holds);
        if (r.c->mu)
            out << " ("
                << (*r.c->direction == MuDirection::AFromB
                        ? "a = " + r.c->mu->get_str() + "*b"
                        : "b = " + r.c->mu->get_str() + "*a")
                << " mod d)";
        out << "\n";
    }
    if (r.d) {
        out << "  (D) " << verdict(r.d->holds);
        if (r.d->i) out << " (i = " << *r.d->i << ")";
        out << "\n";
    }
    if (r.i) {
        out << "  (I) " << verdict(r.i->holds);
        if (r.i->xy)
            out << " (x = " << r.i->xy->first.get_str() << ", y = " << r.i->xy->second.get_str()
                << " mod d_2)";
        out << "\n";
    }
    if (r.ii)
        out << "  (II) " << verdict(r.ii->holds) << " (d_3' = " << r.ii->d3prime.get_str()
            << ")\n";
    out << "  all hold: " << (r.all_hold() ? "yes" : "no") << "\n";
}

void render_ara(std::ostream& out, const AraReport& r) {
    out << "rank report:\n";
    auto line = [&](const std::string& label, const AraEntry& e) {
        std::string bounds = e.exact() ? "ara V = " + std::to_string(e.lower)
                                       : std::to_string(e.lower) + " <= ara V <= " +
                                             std::to_string(e.upper);
        out << "  " << label << ": " << bounds << "  [" << join(e.rules, "; ") << "]\n";
    };
    line("char 0", r.char0);
    for (const auto& [p, e] : r.char_p) line("char " + p.get_str(), e);
    line("all other primes", r.other_primes);
}

std::optional<std::string> summary_line(const AraReport& r) {
    auto exact_at = [](const AraEntry& e, int v) { return e.exact() && e.lower == v; };
    std::vector<Int> twos;
    bool primes3 = true, primes2 = true;
    for (const auto& [p, e] : r.char_p) {
        if (exact_at(e, 2))
            twos.push_back(p);
        else
            primes2 = false;
        if (!exact_at(e, 3)) primes3 = false;
    }
    bool zero3 = exact_at(r.char0, 3), other3 = exact_at(r.other_primes, 3);
    bool zero2 = exact_at(r.char0, 2), other2 = exact_at(r.other_primes, 2);
    if (zero3 && other3 && primes3) return "ara V = 3 over every field";
    if (zero2 && other2 && primes2) return "ara V = 2 over every field (complete intersection)";
    if (zero3 && other3 && twos.size() == 1) {
        bool rest3 = true;
        for (const auto& [p, e] : r.char_p)
            if (p != twos[0] && !exact_at(e, 3)) rest3 = false;
        if (rest3)
            return "ara V = 2 iff char K = " + twos[0].get_str() + "; ara V = 3 otherwise";
    }
    if (other2 && primes2 && !r.char0.exact())
        return "ara V = 2 in every positive characteristic";
    return std::nullopt;
}

void render_tree(std::ostream& out, const GluingTree& t, int depth) {
    out << std::string(2 * depth + 2, ' ') << idx_str(t.indices) << ": ";
    if (t.is_free())
        out << "free";
    else
        out << "w = " << vec_str(t.cert->w) << ", k = " << t.cert->k;
    out << "\n";
    if (t.left) render_tree(out, *t.left, depth + 1);
    if (t.right) render_tree(out, *t.right, depth + 1);
}

// the (p, q, c) of the mixed pair pattern d2 = q, d3 = pq, a3 = cq
std::tuple<Int, Int, Int> mixed_pattern_params(const Variety& v) {
    const Int &d2 = v.dvec[1], &d3 = v.dvec[2], &a3 = v.a[2];
    if (!is_prime(d2)) throw precondition_error("pattern mismatch: d_2 must be prime");
    if (!divides(d2, d3)) throw precondition_error("pattern mismatch: d_2 must divide d_3");
    Int p = div_exact(d3, d2);
    if (!is_prime(p) || p == d2)
        throw precondition_error("pattern mismatch: d_3 / d_2 must be a prime other than d_2");
    if (!divides(d2, a3)) throw precondition_error("pattern mismatch: d_2 must divide a_3");
    return {p, d2, div_exact(a3, d2)};
}

int cmd_analyze(const std::string& input, bool as_json, std::ostream& out) {
    Variety parsed = variety_from_json(parse_json_text(read_input(input)));
    Variety v = parsed.shape == Shape::Uniform ? normalize(parsed) : parsed;
    ConditionReport cond =
        v.shape == Shape::Uniform ? check_conditions_ABCD(v) : check_conditions_I_II(v);

    Int search_base = v.shape == Shape::Uniform
                          ? v.deg()
                          : div_exact(v.dvec[2], gcd(v.dvec[2], v.a[2]));
    std::vector<Int> primes;
    if (search_base > 1)
        for (const auto& [p, e] : factorize(search_base)) primes.push_back(p);

    int kmax = resolve_kmax(std::nullopt);
    SemigroupSet gens = generator_set(v);
    GluingEvidence evidence;
    std::vector<std::pair<Int, std::shared_ptr<const GluingTree>>> searches;
    for (const Int& p : primes) {
        auto t = completely_p_glued(gens, p, kmax);
        std::shared_ptr<const GluingTree> sp;
        if (t) {
            sp = std::make_shared<const GluingTree>(std::move(*t));
            evidence.push_back(sp);
        }
        searches.emplace_back(p, sp);
    }
    AraReport ara = classify(v, evidence);
    std::optional<std::string> summary = summary_line(ara);

    if (as_json) {
        Json j;
        j["variety"] = variety_to_json(parsed);
        j["normalized"] = variety_to_json(v);
        j["conditions"] = condition_report_to_json(cond);
        Json searched = Json::object();
        for (const auto& [p, sp] : searches) {
            Json s;
            s["found"] = bool(sp);
            if (sp) s["tree"] = gluing_tree_to_json(*sp);
            searched[p.get_str()] = s;
        }
        j["gluing"] = Json{{"kmax", kmax}, {"searches", searched}};
        j["ara"] = ara_report_to_json(ara);
        j["summary"] = summary ? Json(*summary) : Json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "variety: " << variety_line(parsed) << "\n";
    if (!(v == parsed)) out << "normalized: " << variety_line(v) << "\n";
    render_conditions(out, cond);
    out << "gluing (k <= " << kmax << "):\n";
    if (primes.empty())
        out << "  no primes to search ("
            << (v.shape == Shape::Uniform ? "d = 1" : "d_3' = 1") << ")\n";
    for (const auto& [p, sp] : searches) {
        if (sp) {
            out << "  p = " << p.get_str() << ": certificate tree found\n";
            render_tree(out, *sp, 1);
        } else {
            out << "  p = " << p.get_str() << ": no certificate found (k <= " << kmax << ")\n";
        }
    }
    render_ara(out, ara);
    if (summary) out << "summary: " << *summary << "\n";
    return 0;
}

int cmd_construct(const std::string& input, bool want_pair, bool as_json, std::ostream& out) {
    Variety parsed = variety_from_json(parse_json_text(read_input(input)));
    if (want_pair) {
        Variety v = parsed;
        std::pair<Binomial, Binomial> fs;
        std::optional<Int> prime;
        if (parsed.shape == Shape::Uniform) {
            v = normalize(parsed);
            fs = stci_pair_prime_power(v);
            if (auto pp = prime_power_of(v.deg())) prime = pp->first;
        } else {
            auto [p, q, c] = mixed_pattern_params(parsed);
            fs = stci_pair_mixed_pattern(parsed, p, q, c);
            prime = p;
        }
        if (as_json) {
            Json j;
            j["variety"] = variety_to_json(v);
            Json pj;
            pj["f1"] = binomial_to_json(fs.first, v.n);
            pj["f2"] = binomial_to_json(fs.second, v.n);
            pj["prime"] = prime ? int_to_json(*prime) : Json(nullptr);
            j["pair"] = pj;
            out << j.dump(2) << "\n";
            return 0;
        }
        out << "variety: " << variety_line(v) << "\n";
        out << "pair:\n";
        out << "  F1 = " << binomial_string(fs.first, v.n) << "\n";
        out << "  F2 = " << binomial_string(fs.second, v.n) << "\n";
        if (prime)
            out << "set-theoretic complete intersection in characteristic " << prime->get_str()
                << "\n";
        else
            out << "complete intersection over every field\n";
        return 0;
    }
    if (parsed.shape != Shape::Uniform)
        throw precondition_error("the triple construction needs the uniform shape (Theorem 2.5)");
    Variety v = normalize(parsed);
    TripleResult t = almost_sci_triple(v);
    if (as_json) {
        Json j;
        j["variety"] = variety_to_json(v);
        j["triple"] = triple_to_json(t, v.n);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "variety: " << variety_line(v) << "\n";
    out << "triple:\n";
    out << "  F1 = " << binomial_string(t.f1, v.n) << "\n";
    out << "  F2 = " << binomial_string(t.f2, v.n) << "\n";
    out << "  F3 = " << binomial_string(t.f3, v.n) << "\n";
    out << "  d' = " << t.dprime.get_str() << ", d'' = " << t.dsecond.get_str() << "\n";
    out << "  g1 = " << t.g1.get_str() << ", g2 = " << t.g2.get_str()
        << ", e = " << t.e.get_str() << ", delta = " << t.delta.get_str() << "\n";
    return 0;
}

int cmd_glue(const std::string& input, const Int& p, const std::optional<int>& kmax_flag,
             bool as_json, std::ostream& out) {
    if (p < 2 || !is_prime(p)) throw schema_error("--prime must be a prime number");
    int kmax = resolve_kmax(kmax_flag);
    Json j = parse_json_text(read_input(input));
    if (!j.is_object()) throw schema_error("$: expected an object");
    SemigroupSet set;
    std::size_t nx = 0;
    if (j.contains("set")) {
        const Json& rows = j["set"];
        if (!rows.is_array() || rows.empty())
            throw schema_error("$.set: expected a nonempty array");
        std::vector<IVec> vecs;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            vecs.push_back(ivec_from_json(rows[i], "$.set[" + std::to_string(i) + "]"));
            if (vecs.back().size() != vecs[0].size())
                throw schema_error("$.set: rows differ in length");
        }
        set = SemigroupSet(vecs[0].size(), vecs);
        nx = vecs.size();  // every slot prints as an x variable
    } else {
        Variety v = variety_from_json(j);
        set = generator_set(v);
        nx = v.n;
    }
    auto tree = completely_p_glued(set, p, kmax);
    if (as_json) {
        Json r;
        r["prime"] = int_to_json(p);
        r["kmax"] = kmax;
        r["found"] = tree.has_value();
        if (tree) {
            r["tree"] = gluing_tree_to_json(*tree);
            Json bs = Json::array();
            for (const Binomial& f : tree_binomials(*tree))
                bs.push_back(binomial_to_json(f, nx));
            r["binomials"] = bs;
        }
        out << r.dump(2) << "\n";
        return 0;
    }
    if (!tree) {
        out << "no certificate found (k <= " << kmax << ")\n";
        return 0;
    }
    out << "completely " << p.get_str() << "-glued: certificate tree (k <= " << kmax << ")\n";
    render_tree(out, *tree, 0);
    std::vector<Binomial> bs = tree_binomials(*tree);
    if (!bs.empty()) {
        out << "binomials:\n";
        for (const Binomial& f : bs) out << "  " << binomial_string(f, nx) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& input, const Int& p, int ext, int extmax,
               const std::string& polys_path, bool use_auto, bool as_json, std::ostream& out) {
    if (p < 2 || !is_prime(p)) throw schema_error("--char must be a prime number");
    if (ext < 1) throw schema_error("--ext must be at least 1");
    if (extmax < 1) throw schema_error("--extmax must be at least 1");
    Variety v = variety_from_json(parse_json_text(read_input(input)));
    FieldSpec base = FieldSpec::make(p, ext);
    std::vector<Binomial> polys;
    std::string source;
    if (use_auto) {
        if (v.shape == Shape::Uniform) {
            if (v.deg() == 1 || prime_power_of(v.deg())) {
                auto fs = stci_pair_prime_power(v);
                polys = {fs.first, fs.second};
                source = "pair";
            } else {
                TripleResult t = almost_sci_triple(v);
                polys = {t.f1, t.f2, t.f3};
                source = "triple";
            }
        } else {
            auto [pp, q, c] = mixed_pattern_params(v);
            auto fs = stci_pair_mixed_pattern(v, pp, q, c);
            polys = {fs.first, fs.second};
            source = "pair";
        }
    } else {
        Json pj = parse_json_text(read_input(polys_path));
        if (!pj.is_array()) throw schema_error("$: expected an array of binomials");
        for (std::size_t i = 0; i < pj.size(); ++i)
            polys.push_back(binomial_from_json(pj[i], "$[" + std::to_string(i) + "]"));
        source = "file";
    }
    bool contained = containment_check(v, polys);
    EqualityReport rep = equality_experiment(v, polys, base, extmax);
    if (as_json) {
        Json j;
        j["variety"] = variety_to_json(v);
        Json ps = Json::array();
        for (const Binomial& f : polys) ps.push_back(binomial_to_json(f, v.n));
        j["polys"] = ps;
        j["polys_source"] = source;
        j["containment"] = contained;
        j["report"] = equality_report_to_json(rep);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "variety: " << variety_line(v) << "\n";
    out << "polys (" << source << "):\n";
    for (const Binomial& f : polys) out << "  " << binomial_string(f, v.n) << "\n";
    out << "containment: "
        << (contained ? "every binomial vanishes on V"
                      : "FAILED: some binomial is not a relation")
        << "\n";
    out << "field " << base.name() << ", modulus " << modulus_str(base)
        << ", parameter extensions up to " << extmax << "\n";
    out << "image points: " << rep.image_count << "\n";
    out << "zero-set points: " << rep.zero_count << "\n";
    if (rep.excess.empty()) {
        out << "excess points: none (set-equality evidence, not a proof)\n";
    } else {
        out << "excess points: " << rep.excess.size()
            << " (possible strict containment; diagnostic only)\n";
        std::size_t shown = std::min<std::size_t>(rep.excess.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) out << "  " << point_str(rep.excess[i]) << "\n";
        if (shown < rep.excess.size())
            out << "  ... and " << rep.excess.size() - shown << " more\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"arithmetical rank tools for codimension-2 simplicial toric varieties"};
    app.require_subcommand(1);

    std::string in_analyze, in_construct, in_glue, in_verify;
    bool json_analyze = false, json_construct = false, json_glue = false, json_verify = false;

    CLI::App* analyze =
        app.add_subcommand("analyze", "condition checks, gluing search, rank report");
    analyze->add_option("input", in_analyze, "variety JSON file, - for stdin")->required();
    analyze->add_flag("--json", json_analyze, "emit JSON");

    bool want_pair = false, want_triple = false;
    CLI::App* construct = app.add_subcommand("construct", "defining binomials");
    construct->add_option("input", in_construct, "variety JSON file, - for stdin")->required();
    construct->add_flag("--pair", want_pair, "the two-binomial pair");
    construct->add_flag("--triple", want_triple, "the three-binomial triple");
    construct->add_flag("--json", json_construct, "emit JSON");

    std::int64_t glue_prime = 0;
    int glue_kmax = -1;
    CLI::App* glue = app.add_subcommand("glue", "complete p-gluing certificate search");
    glue->add_option("input", in_glue, "variety JSON file or {\"set\": [[...]]}, - for stdin")
        ->required();
    glue->add_option("--prime", glue_prime, "the prime p")->required();
    glue->add_option("--kmax", glue_kmax, "largest exponent k tried");
    glue->add_flag("--json", json_glue, "emit JSON");

    std::int64_t verify_char = 0;
    int verify_ext = 1, verify_extmax = 1;
    std::string polys_path;
    bool use_auto = false;
    CLI::App* verify = app.add_subcommand("verify", "finite-field set-equality experiment");
    verify->add_option("input", in_verify, "variety JSON file, - for stdin")->required();
    verify->add_option("--char", verify_char, "field characteristic (prime)")->required();
    verify->add_option("--ext", verify_ext, "base field degree over the prime field");
    verify->add_option("--extmax", verify_extmax, "largest parameter extension degree");
    verify->add_option("--polys", polys_path, "JSON file with a binomial array");
    verify->add_flag("--auto", use_auto, "use the constructed pair or triple");
    verify->add_flag("--json", json_verify, "emit JSON");

    std::vector<const char*> argv;
    argv.push_back("toric_ara");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(in_analyze, json_analyze, out);
        if (construct->parsed()) {
            if (want_pair == want_triple)
                throw schema_error("exactly one of --pair and --triple is required");
            return cmd_construct(in_construct, want_pair, json_construct, out);
        }
        if (glue->parsed()) {
            std::optional<int> kopt;
            if (glue->count("--kmax")) kopt = glue_kmax;
            return cmd_glue(in_glue, Int(static_cast<long>(glue_prime)), kopt, json_glue, out);
        }
        if (verify->parsed()) {
            if (use_auto == !polys_path.empty())
                throw schema_error("exactly one of --polys and --auto is required");
            return cmd_verify(in_verify, Int(static_cast<long>(verify_char)), verify_ext,
                              verify_extmax, polys_path, use_auto, json_verify, out);
        }
        throw internal_error("no subcommand dispatched");
    } catch (const schema_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        err << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const cap_error& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 5;
    } catch (const bound_error& e) {
        err << "bound exhausted: " << e.what() << "\n";
        return 5;
    } catch (const internal_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace toric
