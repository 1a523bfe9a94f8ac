#include "hopfkit/io.hpp"

#include "hopfkit/builders.hpp"

#include <fstream>

namespace hopfkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) { throw ParseError(where + ": " + msg); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int integer(const json& j, const char* key, const std::string& where, int fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(where, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Scalar scalar(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Scalar(v.get<long>());
        if (v.is_string()) return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    fail(where, "coefficients are integers or \"p/q\" strings");
}

std::vector<std::string> label(const json& v, const std::string& where) {
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array()) fail(where, "labels are strings or arrays of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) fail(where, "labels are strings or arrays of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

int basis_index(const Space& s, const json& v, const std::string& where) {
    const auto l = label(v, where);
    const int i = s.index_of(l);
    if (i < 0) fail(where, "'" + json(l).dump() + "' is not a basis element of " + s.name());
    return i;
}

Space read_space(const json& j, const std::string& name, const std::string& where) {
    const json& b = field(j, "basis", where);
    if (!b.is_array() || b.empty()) fail(where, "'basis' must be a nonempty array");
    std::vector<std::string> labels;
    std::vector<int> degrees, weights;
    for (const auto& e : b) {
        if (e.is_string()) {
            labels.push_back(e.get<std::string>());
            degrees.push_back(0);
            weights.push_back(0);
        } else {
            labels.push_back(text(e, "label", where));
            degrees.push_back(integer(e, "degree", where, 0));
            weights.push_back(integer(e, "weight", where, 0));
        }
    }
    const int cap = integer(j, "trunc", where, kNoCap);
    const std::string sname = j.contains("space") ? text(j, "space", where) : name;
    try {
        return Space::atomic(sname, labels, degrees, weights, cap);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

json space_json(const Space& s, const std::string& name) {
    json out = json::object();
    if (s.name() != name) out["space"] = s.name();
    json basis = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        const std::string& l = s.label(i)[0];
        if (s.degree(i) == 0 && s.weight(i) == 0)
            basis.push_back(l);
        else {
            json e{{"label", l}, {"degree", s.degree(i)}};
            if (s.weight(i) != 0) e["weight"] = s.weight(i);
            basis.push_back(e);
        }
    }
    out["basis"] = basis;
    if (s.filtered()) out["trunc"] = s.cap();
    return out;
}

GradedMap optional_map(const json& j, const char* key, const Space& s, const Space& t, int degree,
                       const std::string& where) {
    if (!j.contains(key)) return GradedMap::zero(s, t, degree);
    return map_from_json(j.at(key), s, t, degree, where + "." + key);
}

std::vector<Generator> generators(const json& j, const std::string& where) {
    std::vector<Generator> out;
    for (const auto& g : field(j, "generators", where)) out.push_back({text(g, "name", where), integer(g, "degree", where, 0)});
    return out;
}

template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

}  // namespace

std::string kind_text(Kind k) {
    switch (k) {
        case Kind::Coalgebra: return "coalgebra";
        case Kind::Algebra: return "algebra";
        case Kind::Hopf: return "hopf";
        case Kind::Module: return "module";
        case Kind::Morphism: return "morphism";
        case Kind::Tangential: return "tangential";
        case Kind::HomotopyPair: return "homotopy-pair";
    }
    return "?";
}

json label_to_json(const std::vector<std::string>& l) {
    if (l.size() == 1) return l[0];
    return json(l);
}

json map_to_json(const GradedMap& f) {
    json out = json::array();
    for (int j = 0; j < f.source().dim(); ++j)
        for (const auto& [r, c] : f.column(j)) {
            json e = json::object();
            if (f.source() != Space::ground()) e["from"] = label_to_json(f.source().label(j));
            if (f.target() != Space::ground()) e["to"] = label_to_json(f.target().label(r));
            e["c"] = format_scalar(c);
            out.push_back(e);
        }
    return out;
}

json vector_to_json(const Space& s, const SparseVec& v) {
    json out = json::array();
    for (const auto& [r, c] : v) out.push_back({{"label", label_to_json(s.label(r))}, {"c", format_scalar(c)}});
    return out;
}

GradedMap map_from_json(const json& entries, const Space& s, const Space& t, int degree, const std::string& where) {
    if (!entries.is_array()) fail(where, "a map is an array of {from, to, c} entries");
    GradedMap f(s, t, degree);
    for (const auto& e : entries) {
        const int col = s == Space::ground() ? 0 : basis_index(s, field(e, "from", where), where);
        const int row = t == Space::ground() ? 0 : basis_index(t, field(e, "to", where), where);
        const Scalar c = scalar(field(e, "c", where), where);
        guarded(where, [&] {
            f.add(row, col, c);
            return 0;
        });
    }
    return f;
}

const Item* Library::find(const std::string& name) const {
    for (const auto& i : items_)
        if (i.name == name) return &i;
    return nullptr;
}

const Item& Library::get(const std::string& name) const {
    if (const Item* i = find(name)) return *i;
    throw ParseError("no structure named '" + name + "'");
}

std::vector<const Item*> Library::of_kind(Kind k) const {
    std::vector<const Item*> out;
    for (const auto& i : items_)
        if (i.kind == k) out.push_back(&i);
    return out;
}

Space Library::space(const std::string& name) const {
    if (name == "k") return Space::ground();
    const Item& i = get(name);
    if (i.coalgebra) return i.coalgebra->cx.space;
    if (i.hopf) return i.hopf->cx.space;
    if (i.algebra) return i.algebra->cx.space;
    if (i.module) return i.module->cx.space;
    throw ParseError("'" + name + "' is a " + kind_text(i.kind) + ", not a space");
}

Coalgebra Library::coalgebra(const std::string& name) const {
    if (name == "k") return ground_coalgebra();
    if (auto it = coalg_cache_.find(name); it != coalg_cache_.end()) return it->second;
    const Item& i = get(name);
    Coalgebra c;
    if (i.coalgebra)
        c = Coalgebra::make(*i.coalgebra);
    else if (i.hopf)
        c = hopf(name).coalgebra();
    else
        throw ParseError("'" + name + "' is a " + kind_text(i.kind) + ", not a coalgebra");
    coalg_cache_.emplace(name, c);
    return c;
}

Hopf Library::hopf(const std::string& name) const {
    if (name == "k") return ground_hopf();
    if (auto it = hopf_cache_.find(name); it != hopf_cache_.end()) return it->second;
    const Item& i = get(name);
    if (!i.hopf) throw ParseError("'" + name + "' is a " + kind_text(i.kind) + ", not a Hopf algebra");
    Hopf h = Hopf::make(*i.hopf);
    hopf_cache_.emplace(name, h);
    return h;
}

DgModule Library::module(const std::string& name) const {
    if (auto it = module_cache_.find(name); it != module_cache_.end()) return it->second;
    const Item& i = get(name);
    if (!i.module) throw ParseError("'" + name + "' is a " + kind_text(i.kind) + ", not a module");
    DgModule m = DgModule::make(hopf(i.over), *i.module);
    module_cache_.emplace(name, m);
    return m;
}

Item Library::parse_item(const json& j, const LoadOptions& opt) const {
    Item it;
    it.name = text(j, "name", "structure");
    const std::string where = it.name;
    if (it.name == "k") fail(where, "the name 'k' is reserved for the ground field");
    if (find(it.name)) fail(where, "duplicate structure name");
    const std::string kind = text(j, "kind", where);
    const Space k;

    auto structure_maps = [&](const Space& s) {
        return Complex{s, optional_map(j, "d", s, s, -1, where)};
    };

    if (kind == "coalgebra") {
        it.kind = Kind::Coalgebra;
        if (j.contains("construction")) {
            const json& c = j.at("construction");
            const std::string type = text(c, "type", where);
            CoalgebraData d;
            if (type == "ground") {
                d = ground_coalgebra().data();
            } else if (type == "primitive") {
                std::vector<std::tuple<std::string, std::string, Scalar>> diff;
                if (c.contains("differential"))
                    for (const auto& e : c.at("differential"))
                        diff.emplace_back(text(e, "from", where), text(e, "to", where), scalar(field(e, "c", where), where));
                d = guarded(where, [&] { return build_primitive_coalgebra(it.name, generators(c, where), diff).data(); });
            } else {
                fail(where, "unknown coalgebra construction '" + type + "'");
            }
            d.name = it.name;
            it.coalgebra = d;
        } else {
            const Space s = read_space(j, it.name, where);
            const Space ss = tensor_space(s, s);
            it.coalgebra = CoalgebraData{it.name, structure_maps(s), map_from_json(field(j, "counit", where), s, k, 0, where + ".counit"),
                                         map_from_json(field(j, "coproduct", where), s, ss, 0, where + ".coproduct")};
        }
    } else if (kind == "algebra") {
        it.kind = Kind::Algebra;
        const Space s = read_space(j, it.name, where);
        it.algebra = AlgebraData{it.name, structure_maps(s), map_from_json(field(j, "unit", where), k, s, 0, where + ".unit"),
                                 map_from_json(field(j, "product", where), tensor_space(s, s), s, 0, where + ".product")};
    } else if (kind == "hopf") {
        it.kind = Kind::Hopf;
        if (j.contains("construction")) {
            const json& c = j.at("construction");
            const std::string type = text(c, "type", where);
            const int n = opt.trunc.value_or(integer(c, "trunc", where, 0));
            HopfData d;
            if (type == "ground") {
                d = ground_hopf().data();
            } else if (type == "group") {
                std::vector<std::string> elements;
                std::vector<std::vector<std::string>> table;
                for (const auto& e : field(c, "elements", where)) elements.push_back(e.get<std::string>());
                for (const auto& row : field(c, "table", where)) table.push_back(row.get<std::vector<std::string>>());
                d = guarded(where, [&] { return build_group_algebra(it.name, elements, table).data(); });
            } else if (type == "tensor") {
                if (n < 1) fail(where, "tensor construction needs trunc ≥ 1");
                std::map<std::string, WordPoly> diff;
                if (c.contains("differential"))
                    for (const auto& [g, terms] : c.at("differential").items())
                        for (const auto& t : terms)
                            diff[g].emplace_back(label(field(t, "word", where), where), scalar(field(t, "c", where), where));
                d = guarded(where, [&] { return build_tensor_hopf(it.name, generators(c, where), diff, n).data(); });
            } else if (type == "cobar") {
                if (n < 1) fail(where, "cobar construction needs trunc ≥ 1");
                const std::string of = text(c, "of", where);
                const std::string base = c.contains("basepoint") ? text(c, "basepoint", where) : "1";
                const Coalgebra src = guarded(where, [&] { return coalgebra(of); });
                d = guarded(where, [&] { return build_cobar(src, base, n).data(); });
            } else {
                fail(where, "unknown Hopf construction '" + type + "'");
            }
            d.name = it.name;
            it.hopf = d;
        } else {
            const Space s = read_space(j, it.name, where);
            const Space ss = tensor_space(s, s);
            HopfData d;
            d.name = it.name;
            d.cx = structure_maps(s);
            d.unit = map_from_json(field(j, "unit", where), k, s, 0, where + ".unit");
            d.mult = map_from_json(field(j, "product", where), ss, s, 0, where + ".product");
            d.eps = map_from_json(field(j, "counit", where), s, k, 0, where + ".counit");
            d.delta = map_from_json(field(j, "coproduct", where), s, ss, 0, where + ".coproduct");
            d.antipode = map_from_json(field(j, "antipode", where), s, s, 0, where + ".antipode");
            it.hopf = d;
        }
    } else if (kind == "module") {
        it.kind = Kind::Module;
        it.over = text(j, "over", where);
        const Space os = space(it.over);
        const Space s = read_space(j, it.name, where);
        const Complex cx = structure_maps(s);
        if (j.contains("generators")) {
            std::vector<std::pair<std::string, GradedMap>> gens;
            for (const auto& [g, entries] : j.at("generators").items()) {
                const Space& gs = os;
                const int gi = gs.atom_index(g);
                if (gi < 0) fail(where, "'" + g + "' is not a basis element of " + it.over);
                gens.emplace_back(g, map_from_json(entries, s, s, gs.degree(gi), where + ".generators." + g));
            }
            const Hopf h = guarded(where, [&] { return hopf(it.over); });
            it.module = guarded(where, [&] { return generator_module(h, it.name, cx, gens).data(); });
        } else {
            it.module = ModuleData{it.name, cx, map_from_json(field(j, "action", where), tensor_space(os, s), s, 0, where + ".action")};
        }
    } else if (kind == "morphism" || kind == "tangential") {
        it.kind = kind == "morphism" ? Kind::Morphism : Kind::Tangential;
        it.source = text(j, "source", where);
        it.target = text(j, "target", where);
        const int degree = integer(j, "degree", where, 0);
        if (it.kind == Kind::Tangential && degree != 0) fail(where, "tangential elements have degree 0");
        it.map = map_from_json(field(j, "map", where), space(it.source), space(it.target), degree, where + ".map");
        if (it.kind == Kind::Morphism) {
            const Item* s = it.source == "k" ? nullptr : &get(it.source);
            const Item* t = it.target == "k" ? nullptr : &get(it.target);
            auto is_mod = [](const Item* x) { return x && x->kind == Kind::Module; };
            auto is_alg = [](const Item* x) { return !x || x->kind == Kind::Hopf || x->kind == Kind::Algebra; };
            std::string fallback = is_mod(s) || is_mod(t) ? "module" : "coalgebra";
            if (s && s->kind == Kind::Algebra && is_alg(t)) fallback = "algebra";
            it.map_class = j.contains("class") ? text(j, "class", where) : fallback;
            static const std::vector<std::string> classes{"coalgebra", "hopf", "algebra", "module", "linear"};
            if (std::find(classes.begin(), classes.end(), it.map_class) == classes.end())
                fail(where, "unknown morphism class '" + it.map_class + "'");
        }
    } else if (kind == "homotopy-pair") {
        it.kind = Kind::HomotopyPair;
        it.source = text(j, "source", where);
        it.target = text(j, "target", where);
        HomotopyPair p;
        p.kind = guarded(where, [&] { return parse_kind(j.contains("pair_kind") ? text(j, "pair_kind", where) : "coalgebra"); });
        if (p.kind == PairKind::NatEndo) fail(where, "natural pairs are not read from files");
        const Space s = space(it.source), t = space(it.target);
        const json& f = field(j, "f", where);
        if (!f.is_array() || f.empty()) fail(where, "'f' is a nonempty array of maps, one per power of t");
        for (size_t i = 0; i < f.size(); ++i)
            p.f.push_back(map_from_json(f[i], s, t, 0, where + ".f[" + std::to_string(i) + "]"));
        if (j.contains("xi"))
            for (size_t i = 0; i < j.at("xi").size(); ++i)
                p.xi.push_back(map_from_json(j.at("xi")[i], s, t, 1, where + ".xi[" + std::to_string(i) + "]"));
        if (p.xi.empty()) p.xi.push_back(GradedMap::zero(s, t, 1));
        it.pair = p;
    } else {
        fail(where, "unknown kind '" + kind + "'");
    }
    return it;
}

void Library::load(const json& doc, const LoadOptions& opt, const std::string& origin) {
    const json* list = &doc;
    if (doc.is_object() && doc.contains("structures")) list = &doc.at("structures");
    if (list->is_object()) {
        items_.push_back(parse_item(*list, opt));
        return;
    }
    if (!list->is_array()) throw ParseError(origin + ": expected a structure, an array, or {\"structures\": [...]}");
    for (const auto& j : *list) items_.push_back(parse_item(j, opt));
}

void Library::load_file(const std::string& path, const LoadOptions& opt) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        load(doc, opt, path);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json item_to_json(const Item& it) {
    json j{{"name", it.name}, {"kind", kind_text(it.kind)}};
    auto put_space = [&](const Space& s) {
        const json sj = space_json(s, it.name);
        for (const auto& [k, v] : sj.items()) j[k] = v;
    };
    auto put_d = [&](const GradedMap& d) {
        if (!d.is_zero()) j["d"] = map_to_json(d);
    };
    switch (it.kind) {
        case Kind::Coalgebra:
            if (it.coalgebra->cx.space == Space::ground()) {
                j["construction"] = {{"type", "ground"}};
                break;
            }
            put_space(it.coalgebra->cx.space);
            put_d(it.coalgebra->cx.d);
            j["counit"] = map_to_json(it.coalgebra->eps);
            j["coproduct"] = map_to_json(it.coalgebra->delta);
            break;
        case Kind::Algebra:
            put_space(it.algebra->cx.space);
            put_d(it.algebra->cx.d);
            j["unit"] = map_to_json(it.algebra->unit);
            j["product"] = map_to_json(it.algebra->mult);
            break;
        case Kind::Hopf:
            if (it.hopf->cx.space == Space::ground()) {
                j["construction"] = {{"type", "ground"}};
                break;
            }
            put_space(it.hopf->cx.space);
            put_d(it.hopf->cx.d);
            j["unit"] = map_to_json(it.hopf->unit);
            j["product"] = map_to_json(it.hopf->mult);
            j["counit"] = map_to_json(it.hopf->eps);
            j["coproduct"] = map_to_json(it.hopf->delta);
            j["antipode"] = map_to_json(it.hopf->antipode);
            break;
        case Kind::Module:
            j["over"] = it.over;
            put_space(it.module->cx.space);
            put_d(it.module->cx.d);
            j["action"] = map_to_json(it.module->action);
            break;
        case Kind::Morphism:
        case Kind::Tangential:
            j["source"] = it.source;
            j["target"] = it.target;
            if (it.map.degree() != 0) j["degree"] = it.map.degree();
            if (it.kind == Kind::Morphism) j["class"] = it.map_class;
            j["map"] = map_to_json(it.map);
            break;
        case Kind::HomotopyPair: {
            j["source"] = it.source;
            j["target"] = it.target;
            j["pair_kind"] = kind_name(it.pair->kind);
            json f = json::array(), xi = json::array();
            for (const auto& m : it.pair->f) f.push_back(map_to_json(m));
            for (const auto& m : it.pair->xi) xi.push_back(map_to_json(m));
            j["f"] = f;
            j["xi"] = xi;
            break;
        }
    }
    return j;
}

json library_to_json(const Library& lib) {
    json out = json::array();
    for (const auto& it : lib.items()) out.push_back(item_to_json(it));
    return {{"structures", out}};
}

namespace {

bool same_complex(const Complex& a, const Complex& b) { return a.space == b.space && a.d == b.d; }

}  // namespace

bool same_item(const Item& a, const Item& b) {
    if (a.name != b.name || a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Coalgebra:
            return same_complex(a.coalgebra->cx, b.coalgebra->cx) && a.coalgebra->eps == b.coalgebra->eps &&
                   a.coalgebra->delta == b.coalgebra->delta;
        case Kind::Algebra:
            return same_complex(a.algebra->cx, b.algebra->cx) && a.algebra->unit == b.algebra->unit &&
                   a.algebra->mult == b.algebra->mult;
        case Kind::Hopf: {
            const HopfData &x = *a.hopf, &y = *b.hopf;
            return same_complex(x.cx, y.cx) && x.unit == y.unit && x.mult == y.mult && x.eps == y.eps &&
                   x.delta == y.delta && x.antipode == y.antipode;
        }
        case Kind::Module:
            return a.over == b.over && same_complex(a.module->cx, b.module->cx) && a.module->action == b.module->action;
        case Kind::Morphism:
        case Kind::Tangential:
            return a.source == b.source && a.target == b.target && a.map_class == b.map_class && a.map == b.map;
        case Kind::HomotopyPair:
            return a.source == b.source && a.target == b.target && a.pair->kind == b.pair->kind && a.pair->f == b.pair->f &&
                   a.pair->xi == b.pair->xi;
    }
    return false;
}

}  // namespace hopfkit::io
