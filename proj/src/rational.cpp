#include "cyq/rational.hpp"

#include "cyq/errors.hpp"

#include <cctype>

namespace cyq {

std::string to_string(const Rational& x)
{
    Rational q = x;
    q.canonicalize();
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ValidationError("syntax", "malformed rational literal '" + text + "'");
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0)
        throw ValidationError("syntax", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
    // Products of two residues must fit in unsigned __int128; keep p below 2^62.
    if (!is_prime(p) || p >= (std::uint64_t{1} << 62))
        throw ValidationError("field", "not a supported prime: " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return is_rational() ? "q" : "p" + std::to_string(p_);
}

std::uint64_t Field::reduce(const Rational& q) const
{
    Integer p(static_cast<unsigned long>(p_));
    Integer num = q.get_num() % p;
    if (num < 0)
        num += p;
    Integer den = q.get_den() % p;
    if (den == 0)
        throw ValidationError("field", "coefficient " + to_string(q) + " has denominator divisible by " +
                                           std::to_string(p_));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    Integer r = (num * inv) % p;
    return r.get_ui();
}

Field parse_field(const std::string& spec)
{
    if (spec == "q" || spec == "Q")
        return Field::rational();
    if (spec.size() > 1 && (spec[0] == 'p' || spec[0] == 'P')) {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < spec.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(spec[i])))
                throw ValidationError("field", "bad field spec '" + spec + "'");
            p = p * 10 + static_cast<std::uint64_t>(spec[i] - '0');
            if (p > (std::uint64_t{1} << 62))
                throw ValidationError("field", "prime too large in '" + spec + "'");
        }
        return Field::prime(p);
    }
    throw ValidationError("field", "bad field spec '" + spec + "' (expected q or p<prime>)");
}

} // namespace cyq
