#include "mjets/trig/rseries.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace mjets {

namespace {
const QuasiTrigPoly kZero;
}

RSeries::RSeries(unsigned order, bool truncated) : order_(order), truncated_(truncated), c_(order + 1) {}

const QuasiTrigPoly& RSeries::operator[](unsigned k) const { return k <= order_ ? c_[k] : kZero; }

QuasiTrigPoly& RSeries::coeff(unsigned k) {
    if (k > order_) throw std::out_of_range("RSeries::coeff beyond order");
    return c_[k];
}

RSeries RSeries::truncate(unsigned order) const {
    RSeries r(std::min(order, order_), truncated_);
    for (unsigned k = 0; k <= r.order_; ++k) r.c_[k] = c_[k];
    for (unsigned k = r.order_ + 1; k <= order_; ++k) {
        if (!c_[k].is_zero()) r.truncated_ = true;
    }
    return r;
}

RSeries& RSeries::operator+=(const RSeries& o) {
    // An exact (untruncated) series has zero coefficients past its order, so
    // only truncated operands limit the order of the result.
    unsigned n;
    if (truncated_ || o.truncated_) {
        n = std::min(truncated_ ? order_ : UINT_MAX, o.truncated_ ? o.order_ : UINT_MAX);
    } else {
        n = std::max(order_, o.order_);
    }
    RSeries r(n, truncated_ || o.truncated_);
    for (unsigned k = 0; k <= n; ++k) r.c_[k] = (*this)[k] + o[k];
    for (unsigned k = n + 1; k <= std::max(order_, o.order_); ++k) {
        if (!(*this)[k].is_zero() || !o[k].is_zero()) r.truncated_ = true;
    }
    return *this = std::move(r);
}

RSeries& RSeries::operator-=(const RSeries& o) { return *this += o.scaled(Rational(-1)); }

RSeries RSeries::scaled(const Rational& c) const {
    RSeries r = *this;
    for (auto& q : r.c_) q *= c;
    return r;
}

RSeries operator*(const RSeries& a, const RSeries& b) {
    unsigned n;
    if (a.truncated_ || b.truncated_) {
        n = std::min(a.truncated_ ? a.order_ : UINT_MAX, b.truncated_ ? b.order_ : UINT_MAX);
    } else {
        n = a.order_ + b.order_;
    }
    RSeries r(n, a.truncated_ || b.truncated_);
    for (unsigned k = 0; k <= n; ++k) {
        QuasiTrigAccumulator acc;
        for (unsigned i = 0; i <= std::min(k, a.order_); ++i) {
            if (k - i <= b.order_) acc.add_product(a.c_[i], b.c_[k - i]);
        }
        r.c_[k] = acc.finish();
    }
    return r;
}

RSeries RSeries::d_dr() const {
    if (order_ == 0) return RSeries(0, truncated_);
    RSeries r(order_ - 1, truncated_);
    for (unsigned k = 0; k + 1 <= order_; ++k) r.c_[k] = c_[k + 1] * Rational(static_cast<std::int64_t>(k + 1));
    return r;
}

RSeries RSeries::compose(const RSeries& L) const {
    if (!L[0].is_zero()) throw std::invalid_argument("series_compose: inner series has a nonzero constant term");
    const unsigned n = std::min(order_, L.order_);
    RSeries result(n, truncated_ || L.truncated_);
    result.c_[0] = c_[0];
    // power = L^m truncated at n
    const RSeries Ln = L.truncate(n);
    RSeries power = Ln;
    for (unsigned m = 1; m <= n; ++m) {
        if (!c_[m].is_zero()) {
            for (unsigned k = m; k <= n; ++k) {
                if (!power.c_[k].is_zero()) result.c_[k] += c_[m] * power.c_[k];
            }
        }
        if (m < n) power = (power * Ln).truncate(n);
    }
    for (unsigned m = n + 1; m <= order_; ++m) {
        if (!c_[m].is_zero()) result.truncated_ = true;
    }
    return result;
}

RSeries RSeries::substitute(const Bindings& b) const {
    RSeries r = *this;
    for (auto& q : r.c_) q = q.substitute(b);
    return r;
}

long double RSeries::evaluate(long double theta, long double r, const NumericBindings& values) const {
    long double s = 0;
    long double rk = 1;
    for (unsigned k = 0; k <= order_; ++k) {
        if (!c_[k].is_zero()) s += rk * c_[k].evaluate(theta, values);
        rk *= r;
    }
    return s;
}

bool operator==(const RSeries& a, const RSeries& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

}  // namespace mjets
