#include "lojex/rat.hpp"

#include "lojex/error.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace lojex {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Int parse_int(std::string_view s)
{
    if (!is_integer_literal(s))
        throw InvalidInput("not a rational literal: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Int(std::string(s), 10);
}

} // namespace

Rat::Rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rat::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Int Rat::floor() const
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Int Rat::ceil() const
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw InvalidInput("inverse of zero");
    return Rat(mpq_class(1 / q_));
}

std::int64_t Rat::to_int64() const
{
    if (!is_integer())
        throw InvalidInput("expected an integer, got " + str());
    const Int& n = q_.get_num();
    if (!n.fits_slong_p())
        throw InvalidInput("integer out of range: " + str());
    return n.get_si();
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw InvalidInput("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat pow(const Rat& base, unsigned exp)
{
    return Rat(pow(base.num(), exp), pow(base.den(), exp));
}

Int pow(const Int& base, unsigned exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace lojex
