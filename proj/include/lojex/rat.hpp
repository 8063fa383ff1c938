#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lojex {

using Int = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value wrapper around mpq_class so that expression templates never leak
// into `auto` declarations.
class Rat {
public:
    Rat() = default;
    template <std::signed_integral T>
    Rat(T v) : q_(static_cast<long>(v)) {}
    template <std::unsigned_integral T>
    Rat(T v) : q_(static_cast<unsigned long>(v)) {}
    Rat(const Int& v) : q_(v) {}
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "a", "-a", "a/b"; throws InvalidInput otherwise or on b == 0.
    static Rat parse(std::string_view text);

    // "a/b" in lowest terms, or just "a" for integers.
    std::string str() const;

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    Int floor() const;
    Int ceil() const;
    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const;

    // Exact conversion; throws InvalidInput if not an integer or out of range.
    std::int64_t to_int64() const;
    double to_double() const { return q_.get_d(); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using RatVec = std::vector<Rat>;

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// Exact powers with a nonnegative integer exponent.
Rat pow(const Rat& base, unsigned exp);
Int pow(const Int& base, unsigned exp);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

} // namespace lojex
