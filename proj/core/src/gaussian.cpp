#include "superaudit/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace superaudit {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = re * re + im * im;
    if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {re / n, -(im / n)};
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re.is_zero()) out += re.str();
    if (!im.is_zero()) {
        if (!re.is_zero()) out += im.is_negative() ? "-" : "+";
        Rational a = (!re.is_zero() && im.is_negative()) ? -im : im;
        if (a.is_one()) {
            out += "i";
        } else if (a == Rational(-1)) {
            out += "-i";
        } else {
            out += a.str() + "*i";
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

}  // namespace superaudit
