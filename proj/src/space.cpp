#include "hopfkit/space.hpp"
#include "hopfkit/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hopfkit {

struct SpaceData {
    std::string name;
    bool atomic = true;
    std::vector<std::shared_ptr<const SpaceData>> atoms;  // empty when atomic
    std::vector<std::vector<std::string>> labels;
    std::vector<int> degree;
    std::vector<int> weight;
    int cap = kNoCap;
    std::vector<std::vector<int>> tuples;
    std::vector<uint64_t> stride;
    std::unordered_map<uint64_t, int> by_key;
    std::map<std::vector<std::string>, int> by_label;
    uint64_t hash = 0;
};

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

uint64_t hash_string(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool same_atom(const SpaceData& a, const SpaceData& b) {
    if (&a == &b) return true;
    return a.hash == b.hash && a.cap == b.cap && a.labels == b.labels && a.degree == b.degree &&
           a.weight == b.weight;
}

std::shared_ptr<const SpaceData> ground_data() {
    static const std::shared_ptr<const SpaceData> k = [] {
        auto d = std::make_shared<SpaceData>();
        d->name = "k";
        d->labels = {{"1"}};
        d->degree = {0};
        d->weight = {0};
        d->tuples = {{0}};
        d->stride = {1};
        d->by_key[0] = 0;
        d->by_label[{"1"}] = 0;
        d->hash = mix(hash_string("1"), 0);
        return d;
    }();
    return k;
}

struct TensorKey {
    std::vector<const SpaceData*> atoms;
    bool operator<(const TensorKey& o) const { return atoms < o.atoms; }
};

std::mutex cache_mutex;
std::map<TensorKey, std::weak_ptr<const SpaceData>>& tensor_cache() {
    static std::map<TensorKey, std::weak_ptr<const SpaceData>> c;
    return c;
}

std::shared_ptr<const SpaceData> build_tensor(const std::vector<std::shared_ptr<const SpaceData>>& atoms) {
    auto d = std::make_shared<SpaceData>();
    d->atomic = false;
    d->atoms = atoms;
    int cap = kNoCap;
    uint64_t h = 0xabcdef;
    for (auto& a : atoms) {
        cap = std::min(cap, a->cap);
        h = mix(h, a->hash);
    }
    d->cap = cap;
    d->hash = mix(h, static_cast<uint64_t>(cap));
    const int n = static_cast<int>(atoms.size());

    d->stride.assign(n, 1);
    long double range = 1;
    for (int k = n - 1; k >= 0; --k) {
        if (k < n - 1) d->stride[k] = d->stride[k + 1] * atoms[k + 1]->labels.size();
        range *= static_cast<long double>(atoms[k]->labels.size());
    }
    if (range > 9.0e18L) throw std::length_error("tensor space too large to index");

    std::vector<int> min_w_suffix(n + 1, 0);
    for (int k = n - 1; k >= 0; --k) {
        int mw = *std::min_element(atoms[k]->weight.begin(), atoms[k]->weight.end());
        min_w_suffix[k] = min_w_suffix[k + 1] + mw;
    }

    std::vector<int> idx(n, 0);
    // Depth-first enumeration in lexicographic order with weight pruning.
    std::vector<int> wsum(n + 1, 0);
    int k = 0;
    idx.assign(n, -1);
    while (k >= 0) {
        if (k == n) {
            std::vector<std::string> lab;
            int deg = 0;
            uint64_t key = 0;
            for (int j = 0; j < n; ++j) {
                const auto& a = *atoms[j];
                lab.insert(lab.end(), a.labels[idx[j]].begin(), a.labels[idx[j]].end());
                deg += a.degree[idx[j]];
                key += d->stride[j] * static_cast<uint64_t>(idx[j]);
            }
            const int id = static_cast<int>(d->labels.size());
            d->by_key[key] = id;
            d->by_label[lab] = id;
            d->labels.push_back(std::move(lab));
            d->degree.push_back(deg);
            d->weight.push_back(wsum[n]);
            d->tuples.push_back(idx);
            --k;
            continue;
        }
        const auto& a = *atoms[k];
        int next = idx[k] + 1;
        bool placed = false;
        while (next < static_cast<int>(a.labels.size())) {
            const long w = static_cast<long>(wsum[k]) + a.weight[next] + min_w_suffix[k + 1];
            if (cap == kNoCap || w <= cap) {
                idx[k] = next;
                wsum[k + 1] = wsum[k] + a.weight[next];
                placed = true;
                break;
            }
            ++next;
        }
        if (placed) {
            ++k;
            if (k < n) idx[k] = -1;
        } else {
            idx[k] = -1;
            --k;
        }
    }
    return d;
}

}  // namespace

Space::Space() : d_(ground_data()) {}

Space Space::ground() { return Space(); }

Space Space::atomic(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
                    std::vector<int> weights, int cap) {
    if (labels.size() != degrees.size()) throw std::invalid_argument("labels/degrees size mismatch");
    if (labels.empty()) throw std::invalid_argument("space '" + name + "' has an empty basis");
    if (weights.empty()) weights.assign(labels.size(), 0);
    if (weights.size() != labels.size()) throw std::invalid_argument("labels/weights size mismatch");
    auto d = std::make_shared<SpaceData>();
    d->name = std::move(name);
    d->cap = cap;
    uint64_t h = 0x1234567;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (weights[i] < 0) throw std::invalid_argument("negative weight on '" + labels[i] + "'");
        if (cap != kNoCap && weights[i] > cap)
            throw std::invalid_argument("weight of '" + labels[i] + "' exceeds the truncation");
        std::vector<std::string> lab{labels[i]};
        if (!d->by_label.emplace(lab, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate basis label '" + labels[i] + "'");
        d->labels.push_back(std::move(lab));
        d->tuples.push_back({static_cast<int>(i)});
        d->by_key[i] = static_cast<int>(i);
        h = mix(h, hash_string(labels[i]));
        h = mix(h, static_cast<uint64_t>(degrees[i] + 1000003));
        h = mix(h, static_cast<uint64_t>(weights[i]));
    }
    d->degree = std::move(degrees);
    d->weight = std::move(weights);
    d->stride = {1};
    d->hash = mix(h, static_cast<uint64_t>(cap));
    return Space(d);
}

int Space::dim() const { return static_cast<int>(d_->labels.size()); }
int Space::arity() const { return d_->atomic ? 1 : static_cast<int>(d_->atoms.size()); }
int Space::cap() const { return d_->cap; }
const std::string& Space::name() const { return d_->name; }
int Space::degree(int i) const { return d_->degree[i]; }
int Space::weight(int i) const { return d_->weight[i]; }
const std::vector<std::string>& Space::label(int i) const { return d_->labels[i]; }

std::string Space::label_text(int i) const {
    const auto& l = d_->labels[i];
    if (l.size() == 1) return l[0];
    std::string s = "(";
    for (size_t k = 0; k < l.size(); ++k) {
        if (k) s += ",";
        s += l[k];
    }
    return s + ")";
}

int Space::index_of(const std::vector<std::string>& label) const {
    auto it = d_->by_label.find(label);
    return it == d_->by_label.end() ? -1 : it->second;
}

int Space::atom_index(const std::string& atomic_label) const {
    return index_of(std::vector<std::string>{atomic_label});
}

Space Space::factor(int k) const {
    if (d_->atomic) return *this;
    return Space(d_->atoms.at(k));
}

std::vector<Space> Space::factors() const {
    std::vector<Space> out;
    for (int k = 0; k < arity(); ++k) out.push_back(factor(k));
    return out;
}

const std::vector<int>& Space::tuple(int i) const { return d_->tuples[i]; }

int Space::find_tuple(const int* idx, int n) const {
    if (n != arity()) return -1;
    uint64_t key = 0;
    for (int k = 0; k < n; ++k) key += d_->stride[k] * static_cast<uint64_t>(idx[k]);
    auto it = d_->by_key.find(key);
    return it == d_->by_key.end() ? -1 : it->second;
}

Space Space::slice(int first, int count) const {
    if (first < 0 || count < 1 || first + count > arity()) throw std::out_of_range("bad space slice");
    if (d_->atomic) return *this;
    std::vector<Space> parts;
    for (int k = first; k < first + count; ++k) parts.push_back(factor(k));
    return tensor_of(parts);
}

std::vector<int> Space::degrees_present() const {
    std::vector<int> out(d_->degree);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Space::basis_of_degree(int deg) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (d_->degree[i] == deg) out.push_back(i);
    return out;
}

bool Space::operator==(const Space& other) const {
    const SpaceData& a = *d_;
    const SpaceData& b = *other.d_;
    if (&a == &b) return true;
    if (a.hash != b.hash || a.atomic != b.atomic || a.cap != b.cap) return false;
    if (a.atomic) return same_atom(a, b);
    if (a.atoms.size() != b.atoms.size()) return false;
    for (size_t k = 0; k < a.atoms.size(); ++k)
        if (!same_atom(*a.atoms[k], *b.atoms[k])) return false;
    return true;
}

Space tensor_of(const std::vector<Space>& parts) {
    std::vector<std::shared_ptr<const SpaceData>> atoms;
    for (const auto& p : parts) {
        if (p.d_->atomic)
            atoms.push_back(p.d_);
        else
            atoms.insert(atoms.end(), p.d_->atoms.begin(), p.d_->atoms.end());
    }
    if (atoms.empty()) return Space::ground();
    if (atoms.size() == 1) return Space(atoms[0]);
    TensorKey key;
    for (auto& a : atoms) key.atoms.push_back(a.get());
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = tensor_cache();
    auto it = cache.find(key);
    if (it != cache.end()) {
        if (auto sp = it->second.lock()) return Space(sp);
    }
    auto d = build_tensor(atoms);
    cache[key] = d;
    return Space(d);
}

Space tensor_space(const Space& v, const Space& w) { return tensor_of({v, w}); }

Space tensor_power(const Space& v, int n) {
    if (n < 0) throw std::invalid_argument("negative tensor power");
    if (n == 0) return Space::ground();
    return tensor_of(std::vector<Space>(static_cast<size_t>(n), v));
}

}  // namespace hopfkit
