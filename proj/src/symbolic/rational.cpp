#include "mjets/symbolic/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mjets {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

int ctz128(u128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

bool fits64(i128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from(i128 x) {
    const u128 mag = uabs(x);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (x < 0) z = -z;
    return z;
}

bool mpz_fits_i64(const mpz_class& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
    // Only called after mpz_fits_i64.
    std::uint64_t mag = 0;
    std::size_t count = 0;
    mpz_export(&mag, &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
    const auto v = static_cast<std::int64_t>(mag);
    return sgn(z) < 0 ? -v : v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    assign_wide(d < 0 ? -static_cast<i128>(n) : static_cast<i128>(n), d < 0 ? -static_cast<i128>(d) : d);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    if (mpz_fits_i64(q.get_num()) && mpz_fits_i64(q.get_den())) {
        num_ = mpz_to_i64(q.get_num());
        den_ = mpz_to_i64(q.get_den());
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::assign_wide(i128 n, i128 d) {
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    const u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q;
    q.get_num() = mpz_from(n);
    q.get_den() = mpz_from(d);
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = mpz_from(num_);
    q.get_den() = mpz_from(den_);
    return q;
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

long double Rational::to_long_double() const {
    if (!big_) return static_cast<long double>(num_) / static_cast<long double>(den_);
    // Split off 64 leading bits of each side so the quotient keeps extended precision.
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    const long sn = std::max(0L, static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 64);
    const long sd = std::max(0L, static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 64);
    const mpz_class nn = n >> static_cast<mp_bitcnt_t>(sn);
    const mpz_class dd = d >> static_cast<mp_bitcnt_t>(sd);
    auto to_ld = [](const mpz_class& z) {
        const mpz_class hi = z >> 32;
        const mpz_class lo = z - (hi << 32);
        return std::ldexp(static_cast<long double>(hi.get_d()), 32) + static_cast<long double>(lo.get_d());
    };
    return std::ldexp(to_ld(nn) / to_ld(dd), static_cast<int>(sn - sd));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.assign_wide(-static_cast<i128>(num_), den_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            assign_wide(static_cast<i128>(num_) + o.num_, den_);
        } else {
            const i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
            assign_wide(n, static_cast<i128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(uabs(num_)), static_cast<std::uint64_t>(o.den_));
        const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(uabs(o.num_)), static_cast<std::uint64_t>(den_));
        const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
        if (fits64(n) && fits64(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_wide(n, d);
        }
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        const i128 sn = o.num_ < 0 ? -static_cast<i128>(o.den_) : static_cast<i128>(o.den_);
        const i128 sd = uabs(o.num_);
        assign_wide(static_cast<i128>(num_) * sn, static_cast<i128>(den_) * sd);
        return *this;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return;
        const std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(uabs(a.num_)), static_cast<std::uint64_t>(b.den_));
        const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(uabs(b.num_)), static_cast<std::uint64_t>(a.den_));
        const i128 pn = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) * (b.num_ / static_cast<std::int64_t>(g2));
        const i128 pd = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) * (b.den_ / static_cast<std::int64_t>(g1));
        if (fits64(pn) && fits64(pd)) {
            if (pd == den_) {
                assign_wide(static_cast<i128>(num_) + pn, den_);
                return;
            }
            // |num_*pd| < 2^126 and |pn*den_| < 2^126, so the sum fits in i128.
            assign_wide(static_cast<i128>(num_) * pd + pn * den_, static_cast<i128>(den_) * pd);
            return;
        }
    }
    *this += a * b;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::size_t Rational::hash() const {
    if (!big_) {
        return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
    }
    return std::hash<std::string>{}(big_->get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace mjets
