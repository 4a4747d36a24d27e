#include "dqp/rational.hpp"

#include "dqp/errors.hpp"

namespace dqp {

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

} // namespace

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("malformed rational '" + s + "'");
    const BigInt d(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + s + "'");
    Rational r(BigInt(num), d);
    r.canonicalize();
    return r;
}

} // namespace dqp
