#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfkit {

namespace {

// a -= c * b, both sorted sparse.
void sub_scaled(SparseVec& a, const Scalar& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -c * b[j].second);
            ++j;
        } else {
            Scalar s = a[i].second - c * b[j].second;
            if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Scalar eval(const std::vector<Scalar>& p, const Scalar& x) {
    Scalar acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

bool LinearSystem::add_equation(SparseVec a, Scalar b) {
    if (!consistent_) return false;
    while (!a.empty()) {
        const int c = a.front().first;
        const int r = pivot_row_[c];
        if (r < 0) break;
        Scalar f = a.front().second;
        sub_scaled(a, f, rows_[r].a);
        b -= f * rows_[r].b;
    }
    if (a.empty()) {
        if (sgn(b) != 0) consistent_ = false;
        return consistent_;
    }
    Scalar lead = a.front().second;
    for (auto& e : a) e.second /= lead;
    b /= lead;
    pivot_row_[a.front().first] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(a), std::move(b)});
    return true;
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
    if (!consistent_) return std::nullopt;
    std::vector<int> pivots;
    for (int c = 0; c < n_; ++c)
        if (pivot_row_[c] >= 0) pivots.push_back(c);

    auto back_substitute = [&](std::vector<Scalar>& x, bool homogeneous) {
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const Row& row = rows_[pivot_row_[*it]];
            Scalar v = homogeneous ? Scalar(0) : row.b;
            for (size_t k = 1; k < row.a.size(); ++k) v -= row.a[k].second * x[row.a[k].first];
            x[*it] = v;
        }
    };
    auto sparse = [](const std::vector<Scalar>& x) {
        SparseVec s;
        for (int i = 0; i < static_cast<int>(x.size()); ++i)
            if (sgn(x[i]) != 0) s.emplace_back(i, x[i]);
        return s;
    };

    Solution sol;
    std::vector<Scalar> x(n_);
    back_substitute(x, false);
    sol.particular = sparse(x);
    for (int f = 0; f < n_; ++f) {
        if (pivot_row_[f] >= 0) continue;
        std::fill(x.begin(), x.end(), Scalar(0));
        x[f] = 1;
        back_substitute(x, true);
        sol.kernel.push_back(sparse(x));
    }
    return sol;
}

std::vector<SparseVec> kernel_basis(int rows, const std::vector<SparseVec>& columns) {
    // Transpose so each equation is one row of the matrix.
    std::vector<SparseVec> eq(rows);
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        for (const auto& [r, c] : columns[j]) eq[r].emplace_back(j, c);
    LinearSystem sys(static_cast<int>(columns.size()));
    for (auto& e : eq)
        if (!e.empty()) sys.add_equation(std::move(e), 0);
    return sys.solve()->kernel;
}

std::vector<Scalar> characteristic_polynomial(const std::vector<std::vector<Scalar>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n)), am(n, std::vector<Scalar>(n));
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar s = 0;
                for (int l = 0; l < n; ++l)
                    if (sgn(a[i][l]) != 0) s += a[i][l] * m[l][j];
                am[i][j] = s;
            }
        for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m.swap(am);
        Scalar tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (sgn(a[i][l]) != 0) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / k;
    }
    return c;
}

std::vector<Scalar> rational_roots(std::vector<Scalar> p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    std::vector<Scalar> roots;
    if (p.size() <= 1) return roots;
    size_t lead_zero = 0;
    while (sgn(p[lead_zero]) == 0) ++lead_zero;
    if (lead_zero > 0) {
        roots.push_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(lead_zero));
    }
    if (p.size() <= 1) return roots;
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, c.get_den());
    std::vector<mpz_class> z;
    for (const auto& c : p) z.push_back(mpz_class(c * l));
    for (const auto& q : divisors(z.back()))
        for (const auto& d : divisors(z.front()))
            for (int s : {1, -1}) {
                Scalar x(s * d, q);
                x.canonicalize();
                if (sgn(eval(p, x)) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

MapUnknown::MapUnknown(Space source, Space target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), deg_(degree) {
    for (int c = 0; c < src_.dim(); ++c)
        for (int r : tgt_.basis_of_degree(src_.degree(c) + deg_)) entries_.emplace_back(r, c);
}

GradedMap MapUnknown::basis(int var) const {
    GradedMap m(src_, tgt_, deg_);
    m.add(entries_[var].first, entries_[var].second, 1);
    return m;
}

GradedMap MapUnknown::assemble(const SparseVec& values, int offset) const {
    GradedMap m(src_, tgt_, deg_);
    for (const auto& [v, c] : values) {
        const int k = v - offset;
        if (k < 0 || k >= size()) continue;
        m.add(entries_[k].first, entries_[k].second, c);
    }
    return m;
}

std::optional<MapSolution> solve_for_maps(const std::vector<MapUnknown>& unknowns,
                                          const std::vector<MapConstraint>& constraints) {
    std::vector<int> offset;
    int total = 0;
    for (const auto& u : unknowns) {
        offset.push_back(total);
        total += u.size();
    }
    std::vector<GradedMap> zero;
    for (const auto& u : unknowns) zero.push_back(GradedMap::zero(u.source(), u.target(), u.degree()));

    LinearSystem sys(total);
    for (const auto& con : constraints) {
        std::map<std::pair<int, int>, SparseVec> rows;
        for (size_t k = 0; k < unknowns.size(); ++k) {
            for (int v = 0; v < unknowns[k].size(); ++v) {
                std::vector<GradedMap> arg = zero;
                arg[k] = unknowns[k].basis(v);
                GradedMap img = con.op(arg);
                require_same(img.source(), con.rhs.source(), "constraint source");
                require_same(img.target(), con.rhs.target(), "constraint target");
                for (int c = 0; c < img.source().dim(); ++c)
                    for (const auto& [r, x] : img.column(c)) rows[{c, r}].emplace_back(offset[k] + v, x);
            }
        }
        for (int c = 0; c < con.rhs.source().dim(); ++c)
            for (const auto& [r, x] : con.rhs.column(c)) rows[{c, r}];
        for (auto& [key, row] : rows) {
            if (!sys.add_equation(std::move(row), con.rhs.entry(key.second, key.first))) return std::nullopt;
        }
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    MapSolution out;
    for (size_t k = 0; k < unknowns.size(); ++k) out.particular.push_back(unknowns[k].assemble(sol->particular, offset[k]));
    for (const auto& kv : sol->kernel) {
        std::vector<GradedMap> v;
        for (size_t k = 0; k < unknowns.size(); ++k) v.push_back(unknowns[k].assemble(kv, offset[k]));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace hopfkit
