#include "hopfkit/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hopfkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational 'p/q': \"" + std::string(text) + "\"");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    if (!s.empty() && s.front() == '-') n = -n;
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

}  // namespace hopfkit
