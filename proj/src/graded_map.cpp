#include "hopfkit/graded_map.hpp"

#include <algorithm>
#include <sstream>

namespace hopfkit {

namespace {

void axpy(SparseVec& acc, const Scalar& c, const SparseVec& v) {
    if (sgn(c) == 0 || v.empty()) return;
    SparseVec out;
    out.reserve(acc.size() + v.size());
    size_t i = 0, j = 0;
    while (i < acc.size() || j < v.size()) {
        if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || v[j].first < acc[i].first) {
            out.emplace_back(v[j].first, c * v[j].second);
            ++j;
        } else {
            Scalar s = acc[i].second + c * v[j].second;
            if (sgn(s) != 0) out.emplace_back(acc[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

// Dense accumulator reused across the columns of one product.
struct Accumulator {
    std::vector<Scalar> val;
    std::vector<char> hit;
    std::vector<int> touched;
    explicit Accumulator(int n) : val(n), hit(n, 0) {}
    void add(int r, const Scalar& c) {
        if (!hit[r]) {
            hit[r] = 1;
            touched.push_back(r);
            val[r] = c;
        } else {
            val[r] += c;
        }
    }
    SparseVec take() {
        std::sort(touched.begin(), touched.end());
        SparseVec out;
        for (int r : touched) {
            if (sgn(val[r]) != 0) out.emplace_back(r, val[r]);
            hit[r] = 0;
        }
        touched.clear();
        return out;
    }
};

}  // namespace

void require_same(const Space& a, const Space& b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": space mismatch (" << a.name() << "/" << a.arity() << "/" << a.dim() << " vs "
           << b.name() << "/" << b.arity() << "/" << b.dim() << ")";
        throw SpaceMismatch(os.str());
    }
}

GradedMap::GradedMap(Space source, Space target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), deg_(degree), cols_(src_.dim()) {}

GradedMap GradedMap::identity(const Space& v) {
    GradedMap m(v, v, 0);
    for (int i = 0; i < v.dim(); ++i) m.cols_[i].emplace_back(i, Scalar(1));
    return m;
}

Scalar GradedMap::entry(int row, int col) const {
    const auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return Scalar(0);
}

void GradedMap::add(int row, int col, const Scalar& c) {
    if (sgn(c) == 0) return;
    if (row < 0 || row >= tgt_.dim() || col < 0 || col >= src_.dim()) throw std::out_of_range("map entry out of range");
    if (tgt_.degree(row) != src_.degree(col) + deg_) {
        std::ostringstream os;
        os << "entry " << src_.label_text(col) << " -> " << tgt_.label_text(row) << " breaks degree " << deg_;
        throw std::invalid_argument(os.str());
    }
    Scalar v = c;
    v.canonicalize();
    axpy(cols_[col], Scalar(1), SparseVec{{row, v}});
}

void GradedMap::add(const std::vector<std::string>& row, const std::vector<std::string>& col, const Scalar& c) {
    const int r = tgt_.index_of(row), k = src_.index_of(col);
    if (k < 0) throw std::invalid_argument("unknown source label in map entry");
    if (r < 0) {
        // A target tuple dropped by truncation is zero in the quotient.
        if (!tgt_.filtered()) throw std::invalid_argument("unknown target label in map entry");
        return;
    }
    add(r, k, c);
}

void GradedMap::set_column(int col, SparseVec v) {
    for (auto& [r, c] : v) {
        if (tgt_.degree(r) != src_.degree(col) + deg_) throw std::invalid_argument("column breaks homogeneity");
        c.canonicalize();
    }
    cols_[col] = std::move(v);
}

bool GradedMap::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

size_t GradedMap::nonzeros() const {
    size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
    require_same(src_, o.src_, "map sum (source)");
    require_same(tgt_, o.tgt_, "map sum (target)");
    if (deg_ != o.deg_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("sum of maps of different degrees");
    if (is_zero()) deg_ = o.deg_;
    for (size_t j = 0; j < cols_.size(); ++j) axpy(cols_[j], Scalar(1), o.cols_[j]);
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
    require_same(src_, o.src_, "map difference (source)");
    require_same(tgt_, o.tgt_, "map difference (target)");
    if (deg_ != o.deg_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("difference of maps of different degrees");
    if (is_zero()) deg_ = o.deg_;
    for (size_t j = 0; j < cols_.size(); ++j) axpy(cols_[j], Scalar(-1), o.cols_[j]);
    return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        for (auto& col : cols_) col.clear();
        return *this;
    }
    for (auto& col : cols_)
        for (auto& e : col) e.second *= c;
    return *this;
}

GradedMap GradedMap::operator-() const {
    GradedMap m = *this;
    m *= Scalar(-1);
    return m;
}

bool GradedMap::operator==(const GradedMap& o) const {
    require_same(src_, o.src_, "map comparison (source)");
    require_same(tgt_, o.tgt_, "map comparison (target)");
    if (cols_ != o.cols_) return false;
    return deg_ == o.deg_ || is_zero();
}

SparseVec GradedMap::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v) axpy(out, c, cols_[i]);
    return out;
}

GradedMap GradedMap::retarget(const Space& s, const Space& t) const {
    GradedMap m(s, t, deg_);
    for (int j = 0; j < src_.dim(); ++j) {
        if (cols_[j].empty()) continue;
        const int nj = s.index_of(src_.label(j));
        if (nj < 0) throw std::invalid_argument("retarget: source label missing");
        for (const auto& [r, c] : cols_[j]) {
            const int nr = t.index_of(tgt_.label(r));
            if (nr < 0) throw std::invalid_argument("retarget: target label missing");
            m.add(nr, nj, c);
        }
    }
    return m;
}

std::string describe_vector(const Space& s, const SparseVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : v) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Scalar a = abs(c);
        if (a != 1) os << format_scalar(a) << "*";
        os << s.label_text(r);
    }
    return os.str();
}

std::string GradedMap::describe_column(int j) const { return describe_vector(tgt_, cols_[j]); }

std::optional<std::string> difference_witness(const GradedMap& a, const GradedMap& b) {
    require_same(a.source(), b.source(), "witness (source)");
    require_same(a.target(), b.target(), "witness (target)");
    for (int j = 0; j < a.source().dim(); ++j) {
        if (a.column(j) != b.column(j)) {
            return "at " + a.source().label_text(j) + ": " + a.describe_column(j) + " vs " + b.describe_column(j);
        }
    }
    if (a.degree() != b.degree() && !a.is_zero()) return std::string("degrees differ");
    return std::nullopt;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    require_same(f.target(), g.source(), "compose");
    GradedMap out(f.source(), g.target(), f.degree() + g.degree());
    Accumulator acc(g.target().dim());
    for (int j = 0; j < f.source().dim(); ++j) {
        const auto& col = f.column(j);
        if (col.empty()) continue;
        for (const auto& [k, c] : col)
            for (const auto& [r, d] : g.column(k)) acc.add(r, c * d);
        out.set_column(j, acc.take());
    }
    return out;
}

GradedMap compose(std::initializer_list<GradedMap> chain) {
    if (chain.size() == 0) throw std::invalid_argument("empty composition");
    auto it = std::rbegin(chain);
    GradedMap acc = *it;
    for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
    return acc;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
    const Space src = tensor_space(f.source(), g.source());
    const Space tgt = tensor_space(f.target(), g.target());
    GradedMap out(src, tgt, f.degree() + g.degree());
    const int na = f.source().arity(), nb = g.source().arity();
    const int ta = f.target().arity(), tb = g.target().arity();
    std::vector<int> row(ta + tb);
    for (int j = 0; j < src.dim(); ++j) {
        const auto& tup = src.tuple(j);
        const int ia = f.source().find_tuple(tup.data(), na);
        const int ib = g.source().find_tuple(tup.data() + na, nb);
        const auto& ca = f.column(ia);
        const auto& cb = g.column(ib);
        if (ca.empty() || cb.empty()) continue;
        const bool flip = is_odd(static_cast<long>(g.degree()) * f.source().degree(ia));
        SparseVec col;
        for (const auto& [ra, va] : ca) {
            const auto& tra = f.target().tuple(ra);
            std::copy(tra.begin(), tra.end(), row.begin());
            for (const auto& [rb, vb] : cb) {
                const auto& trb = g.target().tuple(rb);
                std::copy(trb.begin(), trb.end(), row.begin() + ta);
                const int r = tgt.find_tuple(row.data(), ta + tb);
                if (r < 0) continue;
                Scalar v = va * vb;
                if (flip) v = -v;
                col.emplace_back(r, std::move(v));
            }
        }
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.set_column(j, std::move(col));
    }
    return out;
}

GradedMap tensor_maps(std::initializer_list<GradedMap> fs) {
    if (fs.size() == 0) throw std::invalid_argument("empty tensor product of maps");
    auto it = fs.begin();
    GradedMap acc = *it;
    for (++it; it != fs.end(); ++it) acc = tensor_map(acc, *it);
    return acc;
}

GradedMap koszul_twist(const Space& v, const Space& w) {
    const Space src = tensor_space(v, w);
    const Space tgt = tensor_space(w, v);
    GradedMap out(src, tgt, 0);
    const int nv = v.arity(), nw = w.arity();
    std::vector<int> row(nv + nw);
    for (int j = 0; j < src.dim(); ++j) {
        const auto& tup = src.tuple(j);
        const int iv = v.find_tuple(tup.data(), nv);
        const int iw = w.find_tuple(tup.data() + nv, nw);
        std::copy(tup.begin() + nv, tup.end(), row.begin());
        std::copy(tup.begin(), tup.begin() + nv, row.begin() + nw);
        const int r = tgt.find_tuple(row.data(), nv + nw);
        out.add(r, j, sign_of(v.degree(iv) * w.degree(iw)));
    }
    return out;
}

GradedMap hom_differential(const GradedMap& f, const GradedMap& dv, const GradedMap& dw) {
    GradedMap a = compose(dw, f);
    GradedMap b = compose(f, dv);
    if (is_odd(f.degree())) return a + b;
    return a - b;
}

GradedMap tensor_differential(const GradedMap& dv, const GradedMap& dw) {
    return tensor_id(dv, dw.source()) + id_tensor(dv.source(), dw);
}

GradedMap unit_left(const Space& v) {
    const Space src = tensor_space(Space::ground(), v);
    GradedMap out(src, v, 0);
    for (int j = 0; j < src.dim(); ++j) out.add(v.find_tuple(src.tuple(j).data() + 1, v.arity()), j, Scalar(1));
    return out;
}

GradedMap unit_left_inv(const Space& v) {
    const Space tgt = tensor_space(Space::ground(), v);
    GradedMap out(v, tgt, 0);
    for (int r = 0; r < tgt.dim(); ++r) out.add(r, v.find_tuple(tgt.tuple(r).data() + 1, v.arity()), Scalar(1));
    return out;
}

GradedMap unit_right(const Space& v) {
    const Space src = tensor_space(v, Space::ground());
    GradedMap out(src, v, 0);
    for (int j = 0; j < src.dim(); ++j) out.add(v.find_tuple(src.tuple(j).data(), v.arity()), j, Scalar(1));
    return out;
}

GradedMap unit_right_inv(const Space& v) {
    const Space tgt = tensor_space(v, Space::ground());
    GradedMap out(v, tgt, 0);
    for (int r = 0; r < tgt.dim(); ++r) out.add(r, v.find_tuple(tgt.tuple(r).data(), v.arity()), Scalar(1));
    return out;
}

GradedMap id_tensor(const Space& left, const GradedMap& f) { return tensor_map(GradedMap::identity(left), f); }

GradedMap tensor_id(const GradedMap& f, const Space& right) { return tensor_map(f, GradedMap::identity(right)); }

GradedMap element(const Space& v, const SparseVec& x, int degree) {
    GradedMap m(Space::ground(), v, degree);
    m.set_column(0, x);
    return m;
}

GradedMap basis_element(const Space& v, int i) { return element(v, SparseVec{{i, Scalar(1)}}, v.degree(i)); }

SparseVec value_at_one(const GradedMap& x) {
    if (x.source().dim() != 1) throw std::invalid_argument("value_at_one: source is not one-dimensional");
    return x.column(0);
}

Scalar scalar_entry(const GradedMap& f, int col) {
    if (f.target().dim() != 1) throw std::invalid_argument("scalar_entry: target is not one-dimensional");
    return f.entry(0, col);
}

}  // namespace hopfkit
