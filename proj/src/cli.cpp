#include "hopfkit/cli.hpp"

#include "hopfkit/completion.hpp"
#include "hopfkit/tannaka.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>

namespace hopfkit::cli {

using io::json;
using io::Kind;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json map_json(const GradedMap& f) { return io::map_to_json(f); }

// Ω is the last Hopf algebra in the files, C the first coalgebra (k^∨ when none).
std::string omega_name(const io::Library& lib) {
    const auto hs = lib.of_kind(Kind::Hopf);
    if (hs.empty()) throw InputError("no Hopf algebra in the input");
    return hs.back()->name;
}

std::string coalgebra_name(const io::Library& lib) {
    const auto cs = lib.of_kind(Kind::Coalgebra);
    return cs.empty() ? "k" : cs.front()->name;
}

std::vector<const io::Item*> maps_into(const io::Library& lib, Kind k, const std::string& c, const std::string& h) {
    std::vector<const io::Item*> out;
    for (const auto* it : lib.of_kind(k))
        if (it->source == c && it->target == h) out.push_back(it);
    return out;
}

Report check_pair(const io::Library& lib, const io::Item& it) {
    const HomotopyPair& p = *it.pair;
    const io::Item* t = it.target == "k" ? nullptr : &lib.get(it.target);
    switch (p.kind) {
        case PairKind::HopfMap: return verify_hopf_pair(p, lib.hopf(it.source), lib.hopf(it.target));
        case PairKind::Tangential: return verify_tangential_pair(p, Convolution(lib.coalgebra(it.source), lib.hopf(it.target)));
        default:
            if (t && t->kind == Kind::Hopf) return verify_homotopy_pair(p, Convolution(lib.coalgebra(it.source), lib.hopf(it.target)));
            return verify_coalgebra_pair(p, lib.coalgebra(it.source), lib.coalgebra(it.target));
    }
}

void cmd_check(const io::Library& lib, Outcome& out) {
    json classes = json::object();
    for (const auto& it : lib.items()) {
        const std::string pre = it.name + ".";
        switch (it.kind) {
            case Kind::Coalgebra: out.report.merge(verify_axioms(*it.coalgebra), pre); break;
            case Kind::Algebra: out.report.merge(verify_axioms(*it.algebra), pre); break;
            case Kind::Hopf: out.report.merge(verify_axioms(*it.hopf), pre); break;
            case Kind::Module: out.report.merge(verify_module(lib.hopf(it.over), *it.module), pre); break;
            case Kind::Tangential:
                out.report.merge(Convolution(lib.coalgebra(it.source), lib.hopf(it.target)).tangential_report(it.map), pre);
                break;
            case Kind::HomotopyPair: out.report.merge(check_pair(lib, it), pre); break;
            case Kind::Morphism: {
                if (it.map_class == "coalgebra")
                    out.report.merge(coalgebra_morphism_report(it.map, lib.coalgebra(it.source), lib.coalgebra(it.target)), pre);
                else if (it.map_class == "hopf")
                    out.report.merge(hopf_morphism_report(it.map, lib.hopf(it.source), lib.hopf(it.target)), pre);
                else if (it.map_class == "algebra")
                    out.report.merge(algebra_morphism_report(it.map, lib.hopf(it.source), lib.hopf(it.target)), pre);
                else if (it.map_class == "module")
                    out.report.merge(module_morphism_report(it.map, lib.module(it.source), lib.module(it.target)), pre);
                // Classification beyond the declared class, reported but not required.
                json tags = json::array();
                auto coalg_like = [&](const std::string& n) {
                    if (n == "k") return true;
                    Kind k = lib.get(n).kind;
                    return k == Kind::Coalgebra || k == Kind::Hopf;
                };
                if (coalg_like(it.source) && coalg_like(it.target) && it.map.degree() == 0) {
                    if (is_coalgebra_morphism(it.map, lib.coalgebra(it.source), lib.coalgebra(it.target)))
                        tags.push_back("coalgebra");
                    if (it.target != "k" && lib.get(it.target).kind == Kind::Hopf) {
                        const Convolution conv(lib.coalgebra(it.source), lib.hopf(it.target));
                        if (conv.is_group_element(it.map)) tags.push_back("group-element");
                        if (conv.is_tangential(it.map)) tags.push_back("tangential");
                        if (it.source != "k" && lib.get(it.source).kind == Kind::Hopf &&
                            is_hopf_morphism(it.map, lib.hopf(it.source), lib.hopf(it.target)))
                            tags.push_back("hopf");
                    }
                }
                classes[it.name] = tags;
                break;
            }
        }
    }
    out.results["structures"] = static_cast<int>(lib.items().size());
    out.results["classification"] = classes;
}

json element_json(const Space& s, const GradedMap& g) {
    // elements k → Ω as vectors, maps C → Ω as entry lists
    if (g.source() == Space::ground()) return io::vector_to_json(s, g.column(0));
    return map_json(g);
}

void group_law_checks(const Convolution& conv, const std::vector<GradedMap>& gs, Report& r) {
    const GradedMap e = conv.unit();
    for (size_t i = 0; i < gs.size(); ++i) {
        const std::string tag = "[" + std::to_string(i) + "]";
        r.merge(conv.group_element_report(gs[i]), "element" + tag + ".");
        r.expect_equal("unit.left" + tag, "e⋆g = g", conv.star(e, gs[i]), gs[i]);
        r.expect_equal("unit.right" + tag, "g⋆e = g", conv.star(gs[i], e), gs[i]);
        r.expect_equal("inverse.left" + tag, "(ς∘g)⋆g = e", conv.star(conv.inverse(gs[i]), gs[i]), e);
        r.expect_equal("inverse.right" + tag, "g⋆(ς∘g) = e", conv.star(gs[i], conv.inverse(gs[i])), e);
    }
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = 0; j < gs.size(); ++j)
            for (size_t k = 0; k < gs.size(); ++k)
                r.expect_equal("assoc[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]",
                               "(g₁⋆g₂)⋆g₃ = g₁⋆(g₂⋆g₃)", conv.star(conv.star(gs[i], gs[j]), gs[k]),
                               conv.star(gs[i], conv.star(gs[j], gs[k])));
}

void cmd_group(const Options& opt, const io::Library& lib, Outcome& out) {
    const Hopf h = lib.hopf(omega_name(lib));
    const std::string cname = coalgebra_name(lib);
    const Coalgebra c = lib.coalgebra(cname);
    const Convolution conv(c, h);
    out.results["omega"] = h.name();
    out.results["coalgebra"] = cname;
    const bool finite = !h.filtered() && c.space() == Space::ground();
    std::vector<GradedMap> gs;
    if (finite) {
        for (const auto& v : group_likes(h)) gs.push_back(element(h.space(), v, 0));
    } else {
        gs = sample_group_elements(conv, opt.seed);
        for (const auto* it : maps_into(lib, Kind::Morphism, cname, h.name())) gs.push_back(it->map);
    }
    group_law_checks(conv, gs, out.report);
    json elems = json::array();
    for (const auto& g : gs) elems.push_back(element_json(h.space(), g));
    out.results["elements"] = elems;
    out.results["exhaustive"] = finite;
    if (finite) {
        const GroupTable t = group_table(conv, gs);
        out.report.add("table.closed", "P_Ω(C) closed under ⋆", t.elements.size() == gs.size(),
                       "closure has " + std::to_string(t.elements.size()) + " elements");
        out.results["order"] = static_cast<int>(t.elements.size());
        out.results["table"] = t.product;
        out.results["identity"] = t.identity;
        out.results["inverse"] = t.inverse;
        bool abelian = true;
        std::vector<int> orders;
        for (size_t i = 0; i < t.elements.size(); ++i) {
            for (size_t j = 0; j < t.elements.size(); ++j) abelian &= t.product[i][j] == t.product[j][i];
            int n = 1;
            for (int x = static_cast<int>(i); x != t.identity; x = t.product[static_cast<size_t>(x)][i]) ++n;
            orders.push_back(n);
        }
        out.results["abelian"] = abelian;
        out.results["element_orders"] = orders;
    }
}

void cmd_primitives(const io::Library& lib, Outcome& out) {
    json all = json::object();
    for (const auto* it : lib.of_kind(Kind::Hopf)) {
        const Hopf h = lib.hopf(it->name);
        const Space& s = h.space();
        const GradedMap one = basis_element(s, h.unit_index());
        const GradedMap split = unit_left_inv(Space::ground());  // k → k⊗k
        auto prim = [&](const GradedMap& x) { return compose(tensor_map(x, one) + tensor_map(one, x), split); };
        json list = json::array();
        const auto prims = primitives(h);
        std::vector<GradedMap> ps;
        for (size_t i = 0; i < prims.size(); ++i) {
            const GradedMap x = element(s, prims[i].v, prims[i].degree);
            ps.push_back(x);
            out.report.expect_equal(it->name + ".primitive[" + std::to_string(i) + "]", "△x = x⊗1 + 1⊗x",
                                    compose(h.delta(), x), prim(x));
            list.push_back({{"degree", prims[i].degree}, {"element", io::vector_to_json(s, prims[i].v)}});
        }
        // Graded commutators of primitives stay primitive.
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = 0; j < ps.size(); ++j) {
                const GradedMap xy = compose({h.mult(), tensor_map(ps[i], ps[j]), split});
                const GradedMap yx = compose({h.mult(), tensor_map(ps[j], ps[i]), split});
                const GradedMap b = xy - sign_of(ps[i].degree() * ps[j].degree()) * yx;
                out.report.expect_equal(it->name + ".bracket[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                        "[x, y] is primitive", compose(h.delta(), b), prim(b));
            }
        all[it->name] = list;
    }
    out.results["primitives"] = all;
}

void cmd_grouplikes(const io::Library& lib, Outcome& out) {
    json all = json::object();
    for (const auto* it : lib.of_kind(Kind::Hopf)) {
        const Hopf h = lib.hopf(it->name);
        if (h.filtered()) throw InputError(it->name + ": group-likes of a filtered Hopf algebra form an infinite set");
        const Space& s = h.space();
        json list = json::array();
        const auto gl = group_likes(h);
        for (size_t i = 0; i < gl.size(); ++i) {
            const GradedMap x = element(s, gl[i], 0);
            const std::string tag = it->name + ".grouplike[" + std::to_string(i) + "]";
            out.report.expect_equal(tag + ".coproduct", "△x = x⊗x", compose(h.delta(), x),
                                    compose(tensor_map(x, x), unit_left_inv(Space::ground())));
            out.report.expect_equal(tag + ".counit", "ε(x) = 1", compose(h.eps(), x), GradedMap::identity(Space::ground()));
            out.report.expect_zero(tag + ".cycle", "∂x = 0", compose(h.d(), x));
            list.push_back(io::vector_to_json(s, gl[i]));
        }
        all[it->name] = list;
    }
    out.results["grouplikes"] = all;
}

std::vector<GradedMap> default_tangential(const Convolution& conv, uint64_t seed, size_t count) {
    const auto basis = conv.tangential_basis();
    std::vector<GradedMap> out(basis.begin(), basis.begin() + static_cast<long>(std::min(basis.size(), count)));
    if (basis.empty()) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
    GradedMap v = conv.zero(0);
    for (const auto& b : basis) v += Scalar(num(rng), den(rng)) * b;
    out.push_back(v);
    return out;
}

void cmd_expln(const Options& opt, const io::Library& lib, Outcome& out) {
    const Hopf h = lib.hopf(omega_name(lib));
    if (!h.filtered()) throw InputError(h.name() + " is not filtered; exp and ln need a truncation");
    const std::string cname = coalgebra_name(lib);
    const Convolution conv(lib.coalgebra(cname), h);
    std::vector<std::pair<std::string, GradedMap>> vs, gs;
    for (const auto* it : maps_into(lib, Kind::Tangential, cname, h.name())) vs.emplace_back(it->name, it->map);
    for (const auto* it : maps_into(lib, Kind::Morphism, cname, h.name())) gs.emplace_back(it->name, it->map);
    if (vs.empty() && gs.empty()) {
        const auto d = default_tangential(conv, opt.seed, 3);
        for (size_t i = 0; i < d.size(); ++i) vs.emplace_back("sample" + std::to_string(i), d[i]);
    }
    json res = json::array();
    for (const auto& [name, v] : vs) {
        const GradedMap g = exp_map(conv, v);
        out.report.merge(conv.tangential_report(v), name + ".input.");
        out.report.merge(conv.group_element_report(g), name + ".exp.");
        out.report.expect_equal(name + ".roundtrip", "ln(exp υ) = υ", ln_map(conv, g), v);
        res.push_back({{"name", name}, {"tangential", map_json(v)}, {"exp", map_json(g)}});
    }
    for (const auto& [name, g] : gs) {
        out.report.merge(conv.group_element_report(g), name + ".input.");
        const GradedMap v = ln_map(conv, g);
        out.report.merge(conv.tangential_report(v), name + ".ln.");
        out.report.expect_equal(name + ".roundtrip", "exp(ln g) = g", exp_map(conv, v), g);
        res.push_back({{"name", name}, {"group_element", map_json(g)}, {"ln", map_json(v)}});
    }
    // Naturality along every listed coalgebra map f: C′ → C.
    for (const auto* f : lib.of_kind(Kind::Morphism)) {
        if (f->target != cname || f->map_class != "coalgebra") continue;
        const Convolution on_src(lib.coalgebra(f->source), h);
        for (const auto& [name, v] : vs)
            out.report.merge(exp_naturality_report(on_src, conv, f->map, v, exp_map(conv, v)),
                             "natural[" + f->name + "," + name + "].");
    }
    out.results["elements"] = res;
}

void cmd_bch(const Options& opt, const io::Library& lib, Outcome& out) {
    const Hopf h = lib.hopf(omega_name(lib));
    if (!h.filtered()) throw InputError(h.name() + " is not filtered; bch needs a truncation");
    const std::string cname = coalgebra_name(lib);
    const Convolution conv(lib.coalgebra(cname), h);
    std::vector<GradedMap> vs;
    for (const auto* it : maps_into(lib, Kind::Tangential, cname, h.name())) vs.push_back(it->map);
    if (vs.size() < 2) {
        const auto basis = conv.tangential_basis();
        for (size_t i = 0; vs.size() < 2 && i < basis.size(); ++i) vs.push_back(basis[i]);
    }
    if (vs.size() < 2) throw InputError("bch needs two tangential elements");
    const int order = opt.order.value_or(h.trunc());
    if (order < 0 || order > h.trunc()) throw InputError("--order must lie in [0, N]");
    out.report.merge(conv.tangential_report(vs[0]), "input[0].");
    out.report.merge(conv.tangential_report(vs[1]), "input[1].");
    const GradedMap z = bch(conv, vs[0], vs[1], order);
    out.report.merge(conv.tangential_report(z), "lie.");
    if (order == h.trunc())
        out.report.expect_equal("product", "exp(bch(υ₁, υ₂)) = exp υ₁ ⋆ exp υ₂", exp_map(conv, z),
                                conv.star(exp_map(conv, vs[0]), exp_map(conv, vs[1])));
    out.results["order"] = order;
    out.results["bch"] = map_json(z);
}

void cmd_homotopy(const Options& opt, const io::Library& lib, Outcome& out) {
    json res = json::array();
    const auto pairs = lib.of_kind(Kind::HomotopyPair);
    for (const auto* it : pairs) {
        out.report.merge(check_pair(lib, *it), it->name + ".");
        res.push_back({{"name", it->name}, {"mode", "verify"}});
    }
    const auto hs = lib.of_kind(Kind::Hopf);
    if (!hs.empty()) {
        const Hopf h = lib.hopf(omega_name(lib));
        const std::string cname = coalgebra_name(lib);
        const auto gs = maps_into(lib, Kind::Morphism, cname, h.name());
        if (gs.size() >= 2) {
            const Convolution conv(lib.coalgebra(cname), h);
            const int bound = opt.t_degree.value_or(h.filtered() ? h.trunc() : 1);
            const SearchResult s = homotopy_search(conv, gs[0]->map, gs[1]->map, bound);
            json entry{{"mode", "search"}, {"from", gs[0]->name}, {"to", gs[1]->name}, {"bound", bound}, {"message", s.message}};
            out.report.add("search[" + gs[0]->name + "," + gs[1]->name + "]", "(g(t), ξ(t)) with g(0) = g, g(1) = g̃",
                           s.pair.has_value(), s.pair ? "" : s.message);
            if (s.pair) {
                out.report.merge(verify_homotopy_pair(*s.pair, conv), "witness.");
                out.report.expect_equal("witness.start", "g(0) = g", s.pair->start(), gs[0]->map);
                out.report.expect_equal("witness.end", "g(1) = g̃", s.pair->end(), gs[1]->map);
                json f = json::array(), xi = json::array();
                for (const auto& m : s.pair->f) f.push_back(map_json(m));
                for (const auto& m : s.pair->xi) xi.push_back(map_json(m));
                entry["f"] = f;
                entry["xi"] = xi;
                entry["t_degree"] = poly_degree(s.pair->xi);
            }
            res.push_back(entry);
        }
    }
    if (res.empty()) throw InputError("homotopy needs a homotopy-pair or two morphisms C → Ω");
    out.results["homotopy"] = res;
}

void cmd_reconstruct(const Options& opt, const io::Library& lib, Outcome& out) {
    const Hopf h = lib.hopf(omega_name(lib));
    const std::string cname = coalgebra_name(lib);
    const Coalgebra c = lib.coalgebra(cname);
    std::vector<DgModule> extra;
    for (const auto* it : lib.of_kind(Kind::Module))
        if (it->over == h.name()) extra.push_back(lib.module(it->name));
    const ProbeFamily p = standard_probe(h, extra);
    out.report = reconstruct(p, c, {opt.seed, 3});
    json mods = json::array();
    for (const auto& m : p.modules) mods.push_back(m.name());
    out.results["omega"] = h.name();
    out.results["coalgebra"] = cname;
    out.results["probe_modules"] = mods;
    out.results["probe_morphisms"] = static_cast<int>(p.morphisms.size());
    out.results["group_sample"] = static_cast<int>(sample_group_elements(Convolution(c, h), opt.seed).size());
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"check", "group", "primitives", "grouplikes", "expln", "bch", "homotopy", "reconstruct"};
    return names;
}

Outcome run(const Options& opt, const io::Library& lib) {
    Outcome out;
    try {
        if (opt.command == "check") cmd_check(lib, out);
        else if (opt.command == "group") cmd_group(opt, lib, out);
        else if (opt.command == "primitives") cmd_primitives(lib, out);
        else if (opt.command == "grouplikes") cmd_grouplikes(lib, out);
        else if (opt.command == "expln") cmd_expln(opt, lib, out);
        else if (opt.command == "bch") cmd_bch(opt, lib, out);
        else if (opt.command == "homotopy") cmd_homotopy(opt, lib, out);
        else if (opt.command == "reconstruct") cmd_reconstruct(opt, lib, out);
        else throw InputError("unknown command '" + opt.command + "'");
    } catch (const std::exception& e) {
        // Input that is malformed or fails validation when a structure is needed.
        out.exit_code = kInputError;
        out.error = e.what();
        return out;
    }
    out.exit_code = out.report.ok() ? kPass : kCheckFailure;
    return out;
}

Outcome run(const Options& opt) {
    io::Library lib;
    try {
        if (opt.files.empty()) throw io::ParseError("no input files");
        for (const auto& f : opt.files) lib.load_file(f, {opt.trunc});
    } catch (const std::exception& e) {
        Outcome out;
        out.exit_code = kInputError;
        out.error = e.what();
        return out;
    }
    return run(opt, lib);
}

void write_text(const Options& opt, const Outcome& out, std::ostream& os) {
    os << "hopfkit " << opt.command;
    for (const auto& f : opt.files) os << " " << f;
    os << " (seed " << opt.seed << ")\n";
    if (out.exit_code == kInputError) {
        os << "error: " << out.error << "\n";
        return;
    }
    for (const auto& e : out.report.entries) {
        os << (e.pass ? "PASS " : "FAIL ") << e.name << "  [" << e.anchor << "]\n";
        if (!e.pass && !e.witness.empty()) os << "     witness: " << e.witness << "\n";
    }
    for (const auto& [k, v] : out.results.items()) {
        const std::string s = v.dump();
        os << k << ": " << (s.size() > 400 ? s.substr(0, 400) + " …" : s) << "\n";
    }
    os << (out.exit_code == kPass ? "status: pass" : "status: FAIL") << " (" << out.report.entries.size() << " checks, "
       << out.report.failures() << " failed)\n";
}

json to_json(const Options& opt, const Outcome& out) {
    json checks = json::array();
    for (const auto& e : out.report.entries)
        checks.push_back({{"name", e.name}, {"anchor", e.anchor}, {"pass", e.pass}, {"witness", e.witness}});
    json j{{"command", opt.command},
           {"files", opt.files},
           {"seed", opt.seed},
           {"status", out.exit_code == kPass ? "pass" : out.exit_code == kCheckFailure ? "fail" : "error"},
           {"exit_code", out.exit_code},
           {"checks", checks},
           {"results", out.results}};
    if (opt.trunc) j["trunc"] = *opt.trunc;
    if (!out.error.empty()) j["error"] = out.error;
    return j;
}

int main(int argc, char** argv, std::ostream& os, std::ostream& err) {
    CLI::App app{"hopfkit: exact checks for cocommutative dg-Hopf algebras"};
    Options opt;
    std::optional<int> trunc, tdeg, order;
    app.add_option("command", opt.command, "check | group | primitives | grouplikes | expln | bch | homotopy | reconstruct")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("files", opt.files, "structure files (JSON)")->required();
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--trunc", trunc, "truncation N for tensor and cobar constructions");
    app.add_option("--t-degree", tdeg, "t-degree bound D for homotopy search");
    app.add_option("--order", order, "BCH order (default N)");
    app.add_option("--json", opt.json_out, "write the report as JSON");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, os, err);
        return code == 0 ? kPass : kInputError;
    }
    opt.trunc = trunc;
    opt.t_degree = tdeg;
    opt.order = order;
    const Outcome out = run(opt);
    write_text(opt, out, os);
    if (!opt.json_out.empty()) {
        std::ofstream f(opt.json_out);
        if (!f) {
            err << "cannot write " << opt.json_out << "\n";
            return kInputError;
        }
        f << to_json(opt, out).dump(2) << "\n";
    }
    return out.exit_code;
}

}  // namespace hopfkit::cli
