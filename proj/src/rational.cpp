#include "gnb/rational.hpp"

#include "gnb/errors.hpp"

namespace gnb {

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view s) {
    auto parse_int = [&](std::string_view t) {
        if (t.empty()) throw InvalidInput("malformed rational '" + std::string(s) + "'");
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw InvalidInput("malformed rational '" + std::string(s) + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw InvalidInput("malformed rational '" + std::string(s) + "'");
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("rational with zero denominator");
    return Rational(parse_int(s.substr(0, slash)), den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gnb
