#include "mjets/trig/quasi_trig.hpp"

#include <cmath>
#include <sstream>

namespace mjets {

namespace {
const FourierPoly kZeroLayer;
}

QuasiTrigPoly::QuasiTrigPoly(FourierPoly f) {
    if (!f.is_zero()) layers_.push_back(std::move(f));
}

QuasiTrigPoly QuasiTrigPoly::theta(unsigned p) {
    QuasiTrigPoly q;
    q.layers_.resize(p + 1);
    q.layers_[p] = FourierPoly(ParamPoly(1));
    return q;
}

const FourierPoly& QuasiTrigPoly::layer(unsigned p) const { return p < layers_.size() ? layers_[p] : kZeroLayer; }

void QuasiTrigPoly::trim() {
    while (!layers_.empty() && layers_.back().is_zero()) layers_.pop_back();
}

void QuasiTrigPoly::add_to_layer(unsigned p, const FourierPoly& f) {
    if (f.is_zero()) return;
    if (layers_.size() <= p) layers_.resize(p + 1);
    layers_[p] += f;
    trim();
}

QuasiTrigPoly& QuasiTrigPoly::operator+=(const QuasiTrigPoly& o) {
    if (layers_.size() < o.layers_.size()) layers_.resize(o.layers_.size());
    for (std::size_t p = 0; p < o.layers_.size(); ++p) layers_[p] += o.layers_[p];
    trim();
    return *this;
}

QuasiTrigPoly& QuasiTrigPoly::operator-=(const QuasiTrigPoly& o) { return *this += -o; }

QuasiTrigPoly& QuasiTrigPoly::operator*=(const Rational& c) {
    for (auto& l : layers_) l *= c;
    trim();
    return *this;
}

QuasiTrigPoly QuasiTrigPoly::operator-() const { return QuasiTrigPoly(*this) *= Rational(-1); }

QuasiTrigPoly QuasiTrigPoly::scaled(const ParamPoly& p) const {
    QuasiTrigPoly r;
    for (const auto& l : layers_) r.layers_.push_back(l.scaled(p));
    r.trim();
    return r;
}

QuasiTrigPoly operator*(const QuasiTrigPoly& a, const QuasiTrigPoly& b) {
    if (a.is_zero() || b.is_zero()) return QuasiTrigPoly();
    if (a.layers() == 1 && b.layers() == 1) return QuasiTrigPoly(a.layers_[0] * b.layers_[0]);
    QuasiTrigAccumulator acc;
    acc.add_product(a, b);
    return acc.finish();
}

QuasiTrigPoly QuasiTrigPoly::derivative() const {
    QuasiTrigPoly r;
    r.layers_.resize(layers_.size());
    for (unsigned p = 0; p < layers(); ++p) {
        r.layers_[p] += layers_[p].derivative();
        if (p > 0) r.layers_[p - 1] += layers_[p] * Rational(static_cast<std::int64_t>(p));
    }
    r.trim();
    return r;
}

QuasiTrigPoly QuasiTrigPoly::antiderivative() const {
    // Integration by parts from the top theta power down:
    //   int t^p cos kt = t^p sin kt / k - (p/k) int t^(p-1) sin kt
    //   int t^p sin kt = -t^p cos kt / k + (p/k) int t^(p-1) cos kt
    // The pending integrand at power p-1 collects the carried terms.
    QuasiTrigPoly r;
    if (is_zero()) return r;
    r.layers_.resize(layers_.size() + 1);
    FourierPoly carry;
    for (int p = static_cast<int>(layers_.size()) - 1; p >= 0; --p) {
        FourierPoly integrand = layers_[static_cast<unsigned>(p)] + carry;
        carry = FourierPoly();
        if (integrand.is_zero()) continue;
        const ParamPoly& c0 = integrand.mean();
        if (!c0.is_zero()) r.layers_[static_cast<unsigned>(p) + 1] += FourierPoly(c0 * Rational(1, p + 1));
        FourierPoly out;
        for (unsigned k = 1; k < integrand.harmonics(); ++k) {
            const Rational inv_k(1, static_cast<std::int64_t>(k));
            const ParamPoly& ck = integrand.cos_coef(k);
            const ParamPoly& sk = integrand.sin_coef(k);
            if (!ck.is_zero()) {
                out.add_sin(k, ck * inv_k);
                if (p > 0) carry.add_sin(k, ck * Rational(-p, static_cast<std::int64_t>(k)));
            }
            if (!sk.is_zero()) {
                out.add_cos(k, sk * -inv_k);
                if (p > 0) carry.add_cos(k, sk * Rational(p, static_cast<std::int64_t>(k)));
            }
        }
        r.layers_[static_cast<unsigned>(p)] += out;
    }
    const ParamPoly v0 = r.at_zero();
    if (!v0.is_zero()) r.layers_[0] -= FourierPoly(v0);
    r.trim();
    return r;
}

ParamPoly QuasiTrigPoly::at_zero() const { return layer(0).at_zero(); }

ParamPoly QuasiTrigPoly::eval_2pi() const {
    ParamPoly s;
    const ParamPoly two_pi = ParamPoly::pi() * Rational(2);
    ParamPoly power(1);
    for (unsigned p = 0; p < layers(); ++p) {
        if (p > 0) power = power * two_pi;
        const ParamPoly v = layers_[p].at_zero();
        if (!v.is_zero()) s += v * power;
    }
    return s;
}

long double QuasiTrigPoly::evaluate(long double theta, const NumericBindings& values) const {
    long double s = 0;
    long double tp = 1;
    for (unsigned p = 0; p < layers(); ++p) {
        s += tp * layers_[p].evaluate(theta, values);
        tp *= theta;
    }
    return s;
}

QuasiTrigPoly QuasiTrigPoly::substitute(const Bindings& b) const {
    QuasiTrigPoly r;
    for (const auto& l : layers_) r.layers_.push_back(l.substitute(b));
    r.trim();
    return r;
}

std::size_t QuasiTrigPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.term_count();
    return n;
}

std::string QuasiTrigPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned p = 0; p < layers(); ++p) {
        if (layers_[p].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (p == 0) {
            os << layers_[p].to_string();
        } else {
            os << "t^" << p << "*[" << layers_[p].to_string() << ']';
        }
    }
    return os.str();
}

void QuasiTrigAccumulator::add_product(const QuasiTrigPoly& a, const QuasiTrigPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const std::size_t need = a.layers() + b.layers() - 1;
    if (layers_.size() < need) layers_.resize(need);
    for (unsigned p = 0; p < a.layers(); ++p) {
        if (a.layers_[p].is_zero()) continue;
        for (unsigned q = 0; q < b.layers(); ++q) {
            if (!b.layers_[q].is_zero()) layers_[p + q].add_product(a.layers_[p], b.layers_[q]);
        }
    }
}

void QuasiTrigAccumulator::add(const QuasiTrigPoly& a) {
    if (layers_.size() < a.layers()) layers_.resize(a.layers());
    for (unsigned p = 0; p < a.layers(); ++p) layers_[p].add(a.layers_[p]);
}

QuasiTrigPoly QuasiTrigAccumulator::finish() {
    QuasiTrigPoly r;
    for (auto& l : layers_) r.layers_.push_back(l.finish());
    r.trim();
    layers_.clear();
    return r;
}

ParamPoly eval_2pi(const QuasiTrigPoly& u) { return u.eval_2pi(); }
QuasiTrigPoly antiderivative(const QuasiTrigPoly& u) { return u.antiderivative(); }
QuasiTrigPoly trig_mul(const QuasiTrigPoly& a, const QuasiTrigPoly& b) { return a * b; }

}  // namespace mjets
