#include "pmv/rational.hpp"

namespace pmv {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string num, den = "1";
    size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
        if (num.empty() || den.empty()) return std::nullopt;
    } else {
        num = std::string(text);
    }
    auto valid = [](const std::string& s, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); i++)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, true)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    return Rational(n, d);
}

Rational Rational::div(const Rational& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::div_int(long n) const {
    if (n == 0) throw Error("division by zero");
    return Rational(mpq_class(v_ / mpq_class(n)));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace pmv
