#include "hopfkit/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

const Space& k() {
    static const Space g = Space::ground();
    return g;
}

struct Words {
    std::vector<std::vector<int>> list;
    std::map<std::vector<int>, int> index;
};

Words enumerate_words(int gens, int n) {
    Words w;
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= n; ++len) {
        for (auto& word : layer) {
            w.index[word] = static_cast<int>(w.list.size());
            w.list.push_back(word);
        }
        if (len == n) break;
        std::vector<std::vector<int>> next;
        for (auto& word : layer)
            for (int g = 0; g < gens; ++g) {
                auto x = word;
                x.push_back(g);
                next.push_back(std::move(x));
            }
        layer = std::move(next);
    }
    return w;
}

}  // namespace

std::string word_label(const std::vector<std::string>& letters) {
    if (letters.empty()) return "1";
    std::string s = letters[0];
    for (size_t i = 1; i < letters.size(); ++i) s += "*" + letters[i];
    return s;
}

Hopf ground_hopf() {
    HopfData h;
    h.name = "k";
    h.cx = {k(), GradedMap::zero(k(), k(), -1)};
    h.unit = GradedMap::identity(k());
    h.mult = unit_left(k());
    h.eps = GradedMap::identity(k());
    h.delta = unit_left_inv(k());
    h.antipode = GradedMap::identity(k());
    return Hopf::make(std::move(h));
}

Coalgebra ground_coalgebra() {
    static const Coalgebra kv = [] {
        CoalgebraData c;
        c.name = "k^∨";
        c.cx = {k(), GradedMap::zero(k(), k(), -1)};
        c.eps = GradedMap::identity(k());
        c.delta = unit_left_inv(k());
        return Coalgebra::make(std::move(c));
    }();
    return kv;
}

Hopf build_group_algebra(const std::string& name, const std::vector<std::string>& elements,
                         const std::vector<std::vector<std::string>>& table) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw std::invalid_argument("group '" + name + "' has no elements");
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i)
        if (!idx.emplace(elements[i], i).second) throw std::invalid_argument("duplicate group element " + elements[i]);
    if (static_cast<int>(table.size()) != n) throw std::invalid_argument("group table has wrong number of rows");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw std::invalid_argument("group table row has wrong length");
        for (int j = 0; j < n; ++j) {
            auto it = idx.find(table[i][j]);
            if (it == idx.end()) throw std::invalid_argument("group table entry '" + table[i][j] + "' is not an element");
            mul[i][j] = it->second;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("not a group: (" + elements[a] + "·" + elements[b] + ")·" + elements[c] +
                                                " ≠ " + elements[a] + "·(" + elements[b] + "·" + elements[c] + ")");
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = mul[a][b] == b && mul[b][a] == b;
        if (ok) e = a;
    }
    if (e < 0) throw std::invalid_argument("not a group: no identity element");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == e && mul[b][a] == e) inv[a] = b;
        if (inv[a] < 0) throw std::invalid_argument("not a group: " + elements[a] + " has no inverse");
    }

    const Space s = Space::atomic(name, elements, std::vector<int>(n, 0));
    const Space ss = tensor_space(s, s);
    HopfData h;
    h.name = name;
    h.cx = {s, GradedMap::zero(s, s, -1)};
    h.unit = GradedMap(k(), s, 0);
    h.unit.add(e, 0, 1);
    h.mult = GradedMap(ss, s, 0);
    h.eps = GradedMap(s, k(), 0);
    h.delta = GradedMap(s, ss, 0);
    h.antipode = GradedMap(s, s, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int t[2] = {a, b};
            h.mult.add(mul[a][b], ss.find_tuple(t, 2), 1);
        }
        const int t[2] = {a, a};
        h.delta.add(ss.find_tuple(t, 2), a, 1);
        h.eps.add(0, a, 1);
        h.antipode.add(inv[a], a, 1);
    }
    return Hopf::make(std::move(h));
}

Hopf build_tensor_hopf(const std::string& name, const std::vector<Generator>& generators,
                       const std::map<std::string, WordPoly>& differential, int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be at least 1");
    const int g = static_cast<int>(generators.size());
    std::map<std::string, int> gidx;
    for (int i = 0; i < g; ++i) {
        const auto& nm = generators[i].name;
        if (nm.empty() || nm == "1" || nm.find('*') != std::string::npos)
            throw std::invalid_argument("bad generator name '" + nm + "'");
        if (!gidx.emplace(nm, i).second) throw std::invalid_argument("duplicate generator " + nm);
    }
    for (const auto& [gen, _] : differential)
        if (!gidx.count(gen)) throw std::invalid_argument("differential given for unknown generator " + gen);

    const Words words = enumerate_words(g, trunc);
    const int n = static_cast<int>(words.list.size());
    std::vector<std::string> labels;
    std::vector<int> degrees, weights;
    for (const auto& w : words.list) {
        std::vector<std::string> letters;
        int deg = 0;
        for (int x : w) {
            letters.push_back(generators[x].name);
            deg += generators[x].degree;
        }
        labels.push_back(word_label(letters));
        degrees.push_back(deg);
        weights.push_back(static_cast<int>(w.size()));
    }
    const Space s = Space::atomic(name, labels, degrees, weights, trunc);
    const Space ss = tensor_space(s, s);
    auto word_degree = [&](const std::vector<int>& w, size_t upto) {
        int d = 0;
        for (size_t i = 0; i < upto; ++i) d += generators[w[i]].degree;
        return d;
    };
    auto concat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    HopfData h;
    h.name = name;
    h.unit = GradedMap(k(), s, 0);
    h.unit.add(0, 0, 1);
    h.eps = GradedMap(s, k(), 0);
    h.eps.add(0, 0, 1);

    h.mult = GradedMap(ss, s, 0);
    for (int j = 0; j < ss.dim(); ++j) {
        const auto& t = ss.tuple(j);
        h.mult.add(words.index.at(concat(words.list[t[0]], words.list[t[1]])), j, 1);
    }

    // △ on a word is the product of (v⊗1 + 1⊗v) over its letters in the algebra Ω⊗Ω,
    // with (x⊗y)·(v⊗1) = (−1)^{|y||v|} xv⊗y.
    h.delta = GradedMap(s, ss, 0);
    for (int i = 0; i < n; ++i) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar> acc{{{{}, {}}, Scalar(1)}};
        for (int v : words.list[i]) {
            std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar> next;
            const int dv = generators[v].degree;
            for (const auto& [xy, c] : acc) {
                const auto& [x, y] = xy;
                next[{concat(x, {v}), y}] += c * sign_of(word_degree(y, y.size()) * dv);
                next[{x, concat(y, {v})}] += c;
            }
            acc = std::move(next);
        }
        for (const auto& [xy, c] : acc) {
            if (sgn(c) == 0) continue;
            const int t[2] = {words.index.at(xy.first), words.index.at(xy.second)};
            h.delta.add(ss.find_tuple(t, 2), i, c);
        }
    }

    // ς(wv) = (−1)^{|w||v|} (−v)·ς(w)
    h.antipode = GradedMap(s, s, 0);
    for (int i = 0; i < n; ++i) {
        const auto& w = words.list[i];
        int sign = 1;
        for (size_t j = 0; j < w.size(); ++j) {
            sign = -sign;
            if (is_odd(static_cast<long>(word_degree(w, j)) * generators[w[j]].degree)) sign = -sign;
        }
        std::vector<int> rev(w.rbegin(), w.rend());
        h.antipode.add(words.index.at(rev), i, sign);
    }

    // ∂ extended as a derivation: ∂(w v w′) picks up (−1)^{|w|}.
    std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> dgen(g);
    for (const auto& [gen, poly] : differential) {
        const int gi = gidx.at(gen);
        for (const auto& [letters, c] : poly) {
            std::vector<int> w;
            for (const auto& l : letters) {
                auto it = gidx.find(l);
                if (it == gidx.end()) throw std::invalid_argument("unknown generator '" + l + "' in differential");
                w.push_back(it->second);
            }
            if (word_degree(w, w.size()) != generators[gi].degree - 1)
                throw std::invalid_argument("differential of " + gen + " is not of degree " +
                                            std::to_string(generators[gi].degree - 1));
            if (w.empty()) throw std::invalid_argument("differential of " + gen + " has a constant term");
            dgen[gi].emplace_back(std::move(w), c);
        }
    }
    GradedMap d(s, s, -1);
    for (int i = 0; i < n; ++i) {
        const auto& w = words.list[i];
        for (size_t j = 0; j < w.size(); ++j) {
            const Scalar sg = sign_of(word_degree(w, j));
            for (const auto& [dw, c] : dgen[w[j]]) {
                std::vector<int> x(w.begin(), w.begin() + static_cast<long>(j));
                x.insert(x.end(), dw.begin(), dw.end());
                x.insert(x.end(), w.begin() + static_cast<long>(j) + 1, w.end());
                if (static_cast<int>(x.size()) > trunc) continue;
                d.add(words.index.at(x), i, sg * c);
            }
        }
    }
    h.cx = {s, std::move(d)};
    return Hopf::make(std::move(h));
}

Hopf build_cobar(const Coalgebra& c, const std::string& basepoint, int trunc) {
    const Space& s = c.space();
    if (s.arity() != 1) throw std::invalid_argument("cobar input must be an atomic coalgebra");
    const int b = s.atom_index(basepoint);
    if (b < 0) throw std::invalid_argument("basepoint '" + basepoint + "' is not a basis element");
    {
        // The basepoint must be group-like, a cycle, and of degree 0.
        GradedMap x = basis_element(s, b);
        Report r;
        r.expect_equal("basepoint.counit", "ε(c₀) = 1", compose(c.eps(), x), GradedMap::identity(k()));
        r.expect_equal("basepoint.grouplike", "△c₀ = c₀⊗c₀", compose(c.delta(), x),
                       compose(tensor_map(x, x), unit_left_inv(k())));
        r.expect_zero("basepoint.cycle", "∂c₀ = 0", compose(c.d(), x));
        if (!r.ok()) throw std::invalid_argument("basepoint is not a coaugmentation: " + r.first_failure()->anchor);
    }
    std::vector<Generator> gens;
    std::vector<int> coideal;
    for (int i = 0; i < s.dim(); ++i) {
        if (i == b) continue;
        std::string l = s.label(i)[0];
        std::replace(l.begin(), l.end(), '*', '.');
        gens.push_back({"[" + l + "]", s.degree(i) - 1});
        coideal.push_back(i);
    }
    std::map<int, std::string> gname;
    for (size_t j = 0; j < coideal.size(); ++j) gname[coideal[j]] = gens[j].name;

    std::map<std::string, WordPoly> diff;
    const Space ss = tensor_space(s, s);
    for (int i : coideal) {
        WordPoly p;
        for (const auto& [r, x] : c.d().column(i))
            if (r != b) p.push_back({{gname[r]}, -x});
        for (const auto& [r, x] : c.delta().column(i)) {
            const auto& t = ss.tuple(r);
            if (t[0] == b || t[1] == b) continue;
            p.push_back({{gname[t[0]], gname[t[1]]}, sign_of(s.degree(t[0])) * x});
        }
        if (!p.empty()) diff[gname[i]] = std::move(p);
    }
    return build_tensor_hopf("Ω(" + c.name() + ")", gens, diff, trunc);
}

Coalgebra build_primitive_coalgebra(const std::string& name, const std::vector<Generator>& generators,
                                    const std::vector<std::tuple<std::string, std::string, Scalar>>& differential) {
    std::vector<std::string> labels{"1"};
    std::vector<int> degrees{0};
    for (const auto& g : generators) {
        labels.push_back(g.name);
        degrees.push_back(g.degree);
    }
    const Space s = Space::atomic(name, labels, degrees);
    const Space ss = tensor_space(s, s);
    CoalgebraData c;
    c.name = name;
    c.eps = GradedMap(s, k(), 0);
    c.eps.add(0, 0, 1);
    c.delta = GradedMap(s, ss, 0);
    c.delta.add(ss.index_of({"1", "1"}), 0, 1);
    for (int i = 1; i < s.dim(); ++i) {
        c.delta.add(ss.index_of({s.label(i)[0], "1"}), i, 1);
        c.delta.add(ss.index_of({"1", s.label(i)[0]}), i, 1);
    }
    GradedMap d(s, s, -1);
    for (const auto& [from, to, x] : differential) {
        const int a = s.atom_index(from), t = s.atom_index(to);
        if (a <= 0 || t <= 0) throw std::invalid_argument("differential entry outside the generators");
        d.add(t, a, x);
    }
    c.cx = {s, std::move(d)};
    return Coalgebra::make(std::move(c));
}

}  // namespace hopfkit
