#include "heisorb/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace heisorb {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.find('.') != std::string::npos) {
        // decimal literal, exact
        bool neg = s[0] == '-';
        std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
        auto dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (digits.empty()) throw std::invalid_argument("bad decimal: " + std::string(text));
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal: " + std::string(text));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
    if (r.get_den() == 0) throw std::domain_error("zero denominator");
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a + bz)(c + dz) = ac - bd + (ad + bc - bd) z
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Scalar Scalar::conj() const { return Scalar(a_ - b_, -b_); }

Rational Scalar::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(z)");
    Rational n = norm();
    Scalar c = conj();
    return Scalar(c.a_ / n, c.b_ / n);
}

namespace {

std::string rat_factor(const Rational& r) {
    if (r.get_den() == 1) return r.get_str();
    return "(" + r.get_str() + ")";
}

}  // namespace

std::string Scalar::str() const {
    if (is_rational()) return a_.get_str();
    std::string zpart;
    if (b_ == 1)
        zpart = "z";
    else if (b_ == -1)
        zpart = "-z";
    else
        zpart = rat_factor(b_) + "*z";
    if (sgn(a_) == 0) return zpart;
    if (zpart[0] == '-') return a_.get_str() + " - " + zpart.substr(1);
    return a_.get_str() + " + " + zpart;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Scalar out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::size_t j = i;
        int depth = 0;
        while (j < s.size()) {
            if (s[j] == '(') ++depth;
            if (s[j] == ')') --depth;
            if (depth == 0 && (s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '*' && s[j - 1] != '(') break;
            ++j;
        }
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("bad scalar: " + std::string(text));
        bool has_z = !term.empty() && term.back() == 'z';
        if (has_z) {
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        if (term.size() >= 2 && term.front() == '(' && term.back() == ')') term = term.substr(1, term.size() - 2);
        Scalar c = term.empty() ? Scalar(1)
                   : term.find_first_of("z+-", 1) != std::string::npos ? Scalar::parse(term)
                                                                        : Scalar(parse_rational(term));
        if (sign < 0) c = -c;
        out += has_z ? c * Scalar::zeta() : c;
        i = j;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace heisorb
