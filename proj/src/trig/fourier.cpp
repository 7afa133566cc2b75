#include "mjets/trig/fourier.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace mjets {

namespace {
const ParamPoly kZero;
}

FourierPoly::FourierPoly(ParamPoly constant) {
    if (!constant.is_zero()) {
        cos_.push_back(std::move(constant));
        sin_.emplace_back();
    }
}

FourierPoly FourierPoly::cos(unsigned k, ParamPoly coef) {
    FourierPoly f;
    f.add_cos(k, coef);
    return f;
}

FourierPoly FourierPoly::sin(unsigned k, ParamPoly coef) {
    FourierPoly f;
    f.add_sin(k, coef);
    return f;
}

const ParamPoly& FourierPoly::cos_coef(unsigned k) const { return k < cos_.size() ? cos_[k] : kZero; }
const ParamPoly& FourierPoly::sin_coef(unsigned k) const { return k < sin_.size() ? sin_[k] : kZero; }

void FourierPoly::ensure(unsigned k) {
    if (cos_.size() <= k) {
        cos_.resize(k + 1);
        sin_.resize(k + 1);
    }
}

void FourierPoly::trim() {
    while (!cos_.empty() && cos_.back().is_zero() && sin_.back().is_zero()) {
        cos_.pop_back();
        sin_.pop_back();
    }
}

void FourierPoly::add_cos(unsigned k, const ParamPoly& p) {
    if (p.is_zero()) return;
    ensure(k);
    cos_[k] += p;
    trim();
}

void FourierPoly::add_sin(unsigned k, const ParamPoly& p) {
    if (p.is_zero() || k == 0) return;
    ensure(k);
    sin_[k] += p;
    trim();
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& o) {
    if (o.cos_.empty()) return *this;
    ensure(o.harmonics() - 1);
    for (unsigned k = 0; k < o.harmonics(); ++k) {
        if (!o.cos_[k].is_zero()) cos_[k] += o.cos_[k];
        if (!o.sin_[k].is_zero()) sin_[k] += o.sin_[k];
    }
    trim();
    return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& o) { return *this += -o; }

FourierPoly& FourierPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        cos_.clear();
        sin_.clear();
        return *this;
    }
    for (auto& p : cos_) p *= c;
    for (auto& p : sin_) p *= c;
    return *this;
}

FourierPoly FourierPoly::operator-() const { return FourierPoly(*this) *= Rational(-1); }

FourierPoly FourierPoly::scaled(const ParamPoly& p) const {
    FourierPoly r;
    if (p.is_zero()) return r;
    r.cos_.reserve(cos_.size());
    r.sin_.reserve(sin_.size());
    for (unsigned k = 0; k < harmonics(); ++k) {
        r.cos_.push_back(cos_[k] * p);
        r.sin_.push_back(sin_[k] * p);
    }
    r.trim();
    return r;
}

FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
    if (a.is_zero() || b.is_zero()) return FourierPoly();
    if (a.harmonics() == 1) return b.scaled(a.cos_[0]);
    if (b.harmonics() == 1) return a.scaled(b.cos_[0]);
    FourierAccumulator acc;
    acc.add_product(a, b);
    return acc.finish();
}

FourierPoly FourierPoly::derivative() const {
    FourierPoly r;
    for (unsigned k = 1; k < harmonics(); ++k) {
        const Rational kk(static_cast<std::int64_t>(k));
        if (!sin_[k].is_zero()) r.add_cos(k, sin_[k] * kk);
        if (!cos_[k].is_zero()) r.add_sin(k, cos_[k] * -kk);
    }
    return r;
}

ParamPoly FourierPoly::at_zero() const {
    ParamPoly s;
    for (const auto& c : cos_) s += c;
    return s;
}

long double FourierPoly::evaluate(long double theta, const NumericBindings& values) const {
    long double s = 0;
    for (unsigned k = 0; k < harmonics(); ++k) {
        if (!cos_[k].is_zero()) s += cos_[k].evaluate(values) * std::cos(k * theta);
        if (!sin_[k].is_zero()) s += sin_[k].evaluate(values) * std::sin(k * theta);
    }
    return s;
}

FourierPoly FourierPoly::substitute(const Bindings& b) const {
    FourierPoly r;
    r.cos_.reserve(cos_.size());
    r.sin_.reserve(sin_.size());
    for (unsigned k = 0; k < harmonics(); ++k) {
        r.cos_.push_back(cos_[k].substitute(b));
        r.sin_.push_back(sin_[k].substitute(b));
    }
    r.trim();
    return r;
}

std::size_t FourierPoly::term_count() const {
    std::size_t n = 0;
    for (unsigned k = 0; k < harmonics(); ++k) n += cos_[k].size() + sin_[k].size();
    return n;
}

std::string FourierPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const ParamPoly& p, const std::string& basis) {
        if (p.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << '(' << p.to_string() << ')';
        if (!basis.empty()) os << '*' << basis;
    };
    for (unsigned k = 0; k < harmonics(); ++k) {
        const std::string arg = k == 1 ? "t" : std::to_string(k) + "*t";
        emit(cos_[k], k == 0 ? "" : "cos(" + arg + ")");
        if (k > 0) emit(sin_[k], "sin(" + arg + ")");
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FourierPoly& f) { return os << f.to_string(); }

void FourierAccumulator::grow(unsigned k) {
    if (cos_.size() <= k) {
        cos_.resize(k + 1);
        sin_.resize(k + 1);
    }
}

void FourierAccumulator::add(const FourierPoly& a) {
    if (a.is_zero()) return;
    grow(a.harmonics() - 1);
    for (unsigned k = 0; k < a.harmonics(); ++k) {
        cos_[k].add_scaled(a.cos_[k], Rational(2));
        sin_[k].add_scaled(a.sin_[k], Rational(2));
    }
}

void FourierAccumulator::add_product(const FourierPoly& a, const FourierPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    grow(a.harmonics() + b.harmonics() - 2);
    const Rational one(1);
    const Rational minus_one(-1);
    // 2 cos(i) cos(j) = cos(i-j) + cos(i+j)
    // 2 sin(i) sin(j) = cos(i-j) - cos(i+j)
    // 2 sin(i) cos(j) = sin(i+j) + sin(i-j)
    // 2 cos(i) sin(j) = sin(i+j) - sin(i-j)
    auto add_sin = [&](int k, const ParamPoly& p, bool negate) {
        if (k == 0) return;
        if (k < 0) {
            k = -k;
            negate = !negate;
        }
        sin_[static_cast<unsigned>(k)].add_scaled(p, negate ? minus_one : one);
    };
    for (unsigned i = 0; i < a.harmonics(); ++i) {
        for (unsigned j = 0; j < b.harmonics(); ++j) {
            const unsigned sum = i + j;
            const unsigned diff = i > j ? i - j : j - i;
            const int sdiff = static_cast<int>(i) - static_cast<int>(j);
            const ParamPoly& ac = a.cos_[i];
            const ParamPoly& as = a.sin_[i];
            const ParamPoly& bc = b.cos_[j];
            const ParamPoly& bs = b.sin_[j];
            if (!ac.is_zero() && !bc.is_zero()) {
                const ParamPoly p = ac * bc;
                cos_[diff].add(p);
                cos_[sum].add(p);
            }
            if (!as.is_zero() && !bs.is_zero()) {
                const ParamPoly p = as * bs;
                cos_[diff].add(p);
                cos_[sum].add_scaled(p, minus_one);
            }
            if (!as.is_zero() && !bc.is_zero()) {
                const ParamPoly p = as * bc;
                add_sin(static_cast<int>(sum), p, false);
                add_sin(sdiff, p, false);
            }
            if (!ac.is_zero() && !bs.is_zero()) {
                const ParamPoly p = ac * bs;
                add_sin(static_cast<int>(sum), p, false);
                add_sin(sdiff, p, true);
            }
        }
    }
}

FourierPoly FourierAccumulator::finish() {
    FourierPoly r;
    const Rational half(1, 2);
    r.cos_.resize(cos_.size());
    r.sin_.resize(sin_.size());
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        r.cos_[k] = cos_[k].finish(half);
        r.sin_[k] = sin_[k].finish(half);
    }
    r.trim();
    cos_.clear();
    sin_.clear();
    return r;
}

}  // namespace mjets
