#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilpo {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// kept inline; anything larger spills to a GMP rational. The two
/// representations are never observable: arithmetic, comparison and
/// printing agree regardless of which one holds the value.
class Rational {
public:
    Rational() = default;
    Rational(int value) : num_(value) {}
    Rational(long value) : num_(value) { fix_min(); }
    Rational(long long value) : num_(value) { fix_min(); }
    Rational(std::int64_t num, std::int64_t den) { assign(static_cast<__int128>(num), static_cast<__int128>(den)); }
    explicit Rational(const mpq_class& q) { assign(q); }

    Rational(const Rational& other) : num_(other.num_), den_(other.den_)
    {
        if (other.big_)
            big_ = std::make_unique<mpq_class>(*other.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other)
    {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q" (q != 0); the result is normalized.
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto valid = [](std::string_view part, bool allow_sign) {
            if (part.empty())
                return false;
            std::size_t start = 0;
            if (allow_sign && (part[0] == '-' || part[0] == '+'))
                start = 1;
            if (start == part.size())
                return false;
            for (std::size_t i = start; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9')
                    return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num_part = s.substr(0, slash);
        std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid(num_part, true) || !valid(den_part, false))
            throw std::invalid_argument("malformed rational '" + s + "'");
        if (num_part[0] == '+')
            num_part.erase(0, 1);
        mpz_class n(num_part, 10), d(den_part, 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    bool is_small() const { return !big_; }
    int sign() const
    {
        if (big_)
            return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const
    {
        if (big_)
            return *big_;
        mpq_class q;
        q.get_num() = to_mpz(num_);
        q.get_den() = to_mpz(den_);
        return q;
    }

    std::string numerator_string() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
    std::string denominator_string() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string to_string() const
    {
        if (big_)
            return big_->get_str();
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const
    {
        if (big_)
            return Rational(mpq_class(-*big_));
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational reciprocal() const
    {
        if (is_zero())
            throw std::domain_error("reciprocal of zero");
        if (big_)
            return Rational(mpq_class(1 / *big_));
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1)
                return from_int128(static_cast<__int128>(a.num_) + b.num_, 1);
            std::int64_t g = std::gcd(a.den_, b.den_);
            __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
            __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
            return from_int128_reduce(n, d);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1)
                return from_int128(static_cast<__int128>(a.num_) - b.num_, 1);
            std::int64_t g = std::gcd(a.den_, b.den_);
            __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) - static_cast<__int128>(b.num_) * (a.den_ / g);
            __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
            return from_int128_reduce(n, d);
        }
        return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0)
                return Rational();
            if (a.den_ == 1 && b.den_ == 1)
                return from_int128(static_cast<__int128>(a.num_) * b.num_, 1);
            std::int64_t g1 = std::gcd(a.num_, b.den_);
            std::int64_t g2 = std::gcd(b.num_, a.den_);
            __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
            __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
            return from_int128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        // Normalization keeps representations canonical, so a mixed pair differs.
        if (!a.big_ || !b.big_)
            return false;
        return *a.big_ == *b.big_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.num_) * b.den_;
            __int128 r = static_cast<__int128>(b.num_) * a.den_;
            return l <=> r;
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;

    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    static bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

    static mpz_class to_mpz(__int128 v)
    {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b)
    {
        while (b != 0) {
            if ((a >> 64) == 0 && (b >> 64) == 0)
                return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // n/d already in lowest terms with d > 0.
    static Rational from_int128(__int128 n, __int128 d)
    {
        Rational r;
        if (fits(n) && fits(d)) {
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = static_cast<std::int64_t>(d);
            return r;
        }
        mpq_class q;
        q.get_num() = to_mpz(n);
        q.get_den() = to_mpz(d);
        r.big_ = std::make_unique<mpq_class>(std::move(q));
        return r;
    }

    static Rational from_int128_reduce(__int128 n, __int128 d)
    {
        if (n == 0)
            return Rational();
        unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
        unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
        if (g > 1) {
            n /= static_cast<__int128>(g);
            d /= static_cast<__int128>(g);
        }
        return from_int128(n, d);
    }

    void assign(__int128 n, __int128 d)
    {
        if (d == 0)
            throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        *this = from_int128_reduce(n, d);
    }

    void assign(const mpq_class& q)
    {
        mpq_class c = q;
        c.canonicalize();
        const mpz_class& n = c.get_num();
        const mpz_class& d = c.get_den();
        if (n.fits_slong_p() && d.fits_slong_p() && n != mpz_class(std::numeric_limits<long>::min())) {
            num_ = n.get_si();
            den_ = d.get_si();
            big_.reset();
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_unique<mpq_class>(std::move(c));
        }
    }

    void fix_min()
    {
        if (num_ == std::numeric_limits<std::int64_t>::min()) {
            num_ = 0;
            big_ = std::make_unique<mpq_class>(mpz_class(std::numeric_limits<long>::min()));
        }
    }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace nilpo
