#include "steklov/rational.hpp"

#include <cctype>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw DomainError("not a rational number: '" + std::string(text) + "'");
        }
        Integer d(std::string(den), 10);
        if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        result = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw DomainError("not a rational number: '" + std::string(text) + "'");
        }
        std::string digits = std::string(whole) + std::string(frac);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(Integer(digits, 10), scale);
    } else {
        if (!all_digits(body)) {
            throw DomainError("not a rational number: '" + std::string(text) + "'");
        }
        result = Rational(Integer(std::string(body), 10));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

}  // namespace steklov
