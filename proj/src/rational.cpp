#include "symf/rational.hpp"

#include "symf/errors.hpp"

#include <cctype>

namespace symf {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text)
{
    auto digits_ok = [](const std::string& s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        throw UsageError("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw UsageError("zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

Rational ratio(const Integer& n, const Integer& d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace symf
