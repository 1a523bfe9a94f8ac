#include "hopfkit/report.hpp"

namespace hopfkit {

void Report::add(std::string name, std::string anchor, bool pass, std::string witness) {
    entries.push_back({std::move(name), std::move(anchor), pass, pass ? std::string() : std::move(witness)});
}

bool Report::expect_equal(std::string name, std::string anchor, const GradedMap& lhs, const GradedMap& rhs) {
    try {
        auto w = difference_witness(lhs, rhs);
        add(std::move(name), std::move(anchor), !w, w.value_or(""));
        return !w;
    } catch (const SpaceMismatch& e) {
        add(std::move(name), std::move(anchor), false, e.what());
        return false;
    }
}

bool Report::expect_zero(std::string name, std::string anchor, const GradedMap& f) {
    return expect_equal(std::move(name), std::move(anchor), f, GradedMap::zero(f.source(), f.target(), f.degree()));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& e : other.entries) {
        CheckResult c = e;
        if (!prefix.empty()) c.name = prefix + (prefix.back() == '.' ? "" : ".") + c.name;
        entries.push_back(std::move(c));
    }
}

bool Report::ok() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
    for (const auto& e : entries)
        if (!e.pass) return &e;
    return nullptr;
}

size_t Report::failures() const {
    size_t n = 0;
    for (const auto& e : entries) n += e.pass ? 0 : 1;
    return n;
}

}  // namespace hopfkit
