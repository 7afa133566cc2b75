#include "mjets/averaging/jet.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace mjets {

namespace {

using Table = std::vector<std::vector<QuasiTrigPoly>>;

// pow[m][k]: coefficient of r^k in L0^m.
struct Powers {
    Table pow;

    explicit Powers(unsigned j) : pow(j + 1, std::vector<QuasiTrigPoly>(j + 1)) {
        pow[0][0] = QuasiTrigPoly(ParamPoly(1));
    }

    // Fills pow[m][k] for m >= 2; needs l0_1..l0_{k-1}.
    void fill_column(unsigned k) {
        for (unsigned m = 2; m <= k; ++m) {
            QuasiTrigAccumulator acc;
            acc.add(pow[m - 1][k - 1]);  // l0_1 = 1
            for (unsigned i = 2; i + m - 1 <= k; ++i) acc.add_product(pow[1][i], pow[m - 1][k - i]);
            pow[m][k] = acc.finish();
        }
    }

    static Powers of(const FlowJet& L0, unsigned j) {
        if (L0.j() < j) throw std::invalid_argument("order-0 flow jet is shorter than the requested order");
        Powers p(j);
        for (unsigned k = 1; k <= j; ++k) {
            p.fill_column(k);
            p.pow[1][k] = L0[k];
        }
        return p;
    }
};

// Coefficient of r^k in (d^deriv F/dr^deriv)(theta, L0).
QuasiTrigPoly composed(const RSeries& F, const Powers& P, unsigned k, unsigned deriv) {
    QuasiTrigAccumulator acc;
    bool any = false;
    for (unsigned m = deriv; m <= F.order() && m - deriv <= k; ++m) {
        if (F[m].is_zero()) continue;
        const QuasiTrigPoly& pw = P.pow[m - deriv][k];
        if (pw.is_zero()) continue;
        std::int64_t w = 1;
        for (unsigned t = 0; t < deriv; ++t) w *= static_cast<std::int64_t>(m - t);
        if (w == 1) {
            acc.add_product(F[m], pw);
        } else {
            acc.add_product(F[m] * Rational(w), pw);
        }
        any = true;
    }
    return any ? acc.finish() : QuasiTrigPoly();
}

RSeries composed_series(const RSeries& F, const Powers& P, unsigned j, unsigned deriv) {
    RSeries out(j, true);
    for (unsigned k = 0; k <= j; ++k) out.coeff(k) = composed(F, P, k, deriv);
    return out;
}

void log_order(const JetOptions& opt, int i, unsigned k, const QuasiTrigPoly& l,
               std::chrono::steady_clock::time_point start) {
    if (!opt.log) return;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "l" << i << "," << k << ": layers=" << l.layers() << " terms=" << l.term_count() << " elapsed_ms=" << ms;
    opt.log(os.str());
}

void check_order(unsigned j, const JetOptions& opt) {
    if (j < 1) throw std::invalid_argument("jet order must be at least 1");
    if (j > opt.cap) {
        throw std::out_of_range("jet order " + std::to_string(j) + " exceeds the configured cap " +
                                std::to_string(opt.cap));
    }
}

void check_polar(const PolarForm& polar, unsigned j) {
    if (polar.order < j) throw std::invalid_argument("polar form computed to a lower order than requested");
}

FlowJet order0(const PolarForm& polar, unsigned j, Powers& P, const JetOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    FlowJet L0;
    L0.order = 0;
    L0.l.resize(j + 1);
    L0.l[1] = QuasiTrigPoly(ParamPoly(1));
    P.pow[1][1] = L0.l[1];
    for (unsigned k = 2; k <= j; ++k) {
        P.fill_column(k);
        L0.l[k] = composed(polar.F0, P, k, 0).antiderivative();
        P.pow[1][k] = L0.l[k];
        log_order(opt, 0, k, L0.l[k], start);
    }
    return L0;
}

FlowJet order1(const PolarForm& polar, const Powers& P, unsigned j, const RSeries& A, const JetOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    FlowJet L1;
    L1.order = 1;
    L1.l.resize(j + 1);
    for (unsigned k = 1; k <= j; ++k) {
        QuasiTrigAccumulator acc;
        acc.add(composed(polar.F1, P, k, 0));
        for (unsigned i = 1; i < k; ++i) acc.add_product(A[k - i], L1.l[i]);
        L1.l[k] = acc.finish().antiderivative();
        log_order(opt, 1, k, L1.l[k], start);
    }
    return L1;
}

// Second-order term in the normalization y2 = d^2 L / d eps^2 at eps = 0
// (twice the eps^2 coefficient):
//   y2' = 2 F2(L0) + 2 F1_r(L0) L1 + F0_rr(L0) L1^2 + F0_r(L0) y2
FlowJet order2(const PolarForm& polar, const Powers& P, const FlowJet& L1, unsigned j, const RSeries& A,
               const JetOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const RSeries B = composed_series(polar.F0, P, j, 2);
    const RSeries C2 = composed_series(polar.F1, P, j, 1).scaled(Rational(2));
    std::vector<QuasiTrigPoly> sq(j + 1);
    for (unsigned i = 2; i <= j; ++i) {
        QuasiTrigAccumulator acc;
        for (unsigned a = 1; 2 * a < i; ++a) acc.add_product(L1[a], L1[i - a]);
        QuasiTrigPoly s = acc.finish() * Rational(2);
        if (i % 2 == 0) s += L1[i / 2] * L1[i / 2];
        sq[i] = std::move(s);
    }
    FlowJet L2;
    L2.order = 2;
    L2.l.resize(j + 1);
    for (unsigned k = 1; k <= j; ++k) {
        QuasiTrigAccumulator acc;
        acc.add(composed(polar.F2, P, k, 0) * Rational(2));
        for (unsigned i = 1; i <= k; ++i) acc.add_product(C2[k - i], L1[i]);
        for (unsigned i = 2; i <= k; ++i) acc.add_product(B[k - i], sq[i]);
        for (unsigned i = 1; i < k; ++i) acc.add_product(A[k - i], L2.l[i]);
        L2.l[k] = acc.finish().antiderivative();
        log_order(opt, 2, k, L2.l[k], start);
    }
    return L2;
}

}  // namespace

Jet Jet::substitute(const Bindings& b) const {
    Jet r = *this;
    for (auto& c : r.m) c = c.substitute(b);
    return r;
}

bool Jet::is_zero() const {
    for (const auto& c : m) {
        if (!c.is_zero()) return false;
    }
    return true;
}

long double Jet::evaluate(long double r, const NumericBindings& values) const {
    long double s = 0;
    long double rk = 1;
    for (unsigned k = 1; k <= j(); ++k) {
        rk *= r;
        if (!m[k].is_zero()) s += m[k].evaluate(values) * rk;
    }
    return s;
}

FlowJet flow_jet_0(const PolarForm& polar, unsigned j, const JetOptions& opt) {
    check_order(j, opt);
    check_polar(polar, j);
    Powers P(j);
    return order0(polar, j, P, opt);
}

FlowJet flow_jet_1(const PolarForm& polar, const FlowJet& L0, unsigned j, const JetOptions& opt) {
    check_order(j, opt);
    check_polar(polar, j);
    const Powers P = Powers::of(L0, j);
    return order1(polar, P, j, composed_series(polar.F0, P, j, 1), opt);
}

FlowJet flow_jet_2(const PolarForm& polar, const FlowJet& L0, const FlowJet& L1, unsigned j,
                   const JetOptions& opt) {
    check_order(j, opt);
    check_polar(polar, j);
    if (L1.j() < j) throw std::invalid_argument("order-1 flow jet is shorter than the requested order");
    const Powers P = Powers::of(L0, j);
    return order2(polar, P, L1, j, composed_series(polar.F0, P, j, 1), opt);
}

Jet jet_at_2pi(const FlowJet& L) {
    Jet jet;
    jet.order = L.order;
    jet.m.resize(L.l.size());
    for (unsigned k = 1; k < L.l.size(); ++k) jet.m[k] = L.l[k].eval_2pi();
    return jet;
}

JetPair averaging_jets(const PerturbedSystem& s, unsigned j, const JetOptions& opt) {
    check_order(j, opt);
    const PolarForm polar = to_polar(s, j, opt.cap);
    Powers P(j);
    order0(polar, j, P, opt);
    const RSeries A = composed_series(polar.F0, P, j, 1);
    const FlowJet L1 = order1(polar, P, j, A, opt);
    JetPair out;
    out.first = jet_at_2pi(L1);
    out.second = jet_at_2pi(order2(polar, P, L1, j, A, opt));
    return out;
}

Jet averaging_jet(const PerturbedSystem& s, int i, unsigned j, const JetOptions& opt) {
    if (i != 1 && i != 2) throw std::invalid_argument("averaging order must be 1 or 2");
    if (i == 2 && !s.Z1) throw std::invalid_argument("second-order jet requested without first-order perturbation");
    check_order(j, opt);
    if (i == 2) return averaging_jets(s, j, opt).second;
    const PolarForm polar = to_polar(s, j, opt.cap);
    Powers P(j);
    order0(polar, j, P, opt);
    return jet_at_2pi(order1(polar, P, j, composed_series(polar.F0, P, j, 1), opt));
}

}  // namespace mjets
