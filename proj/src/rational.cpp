#include "rbmono/rational.hpp"

#include <stdexcept>

namespace rbm {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    q_ = mpq_class(num, 1) / mpq_class(den, 1);
    q_.canonicalize();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view n = body.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    mpz_class zn(std::string(n), 10), zd(std::string(d), 10);
    if (zd == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    if (neg) zn = -zn;
    mpq_class q(zn, zd);
    return Rational(q);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

} // namespace rbm
