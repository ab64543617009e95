#include "mdsl/ivp.hpp"

#include "mdsl/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace mdsl {

namespace {

template <std::size_t N>
using Vec = std::array<double, N>;

// Dormand-Prince 8(5,3) coefficients (Hairer & Wanner, DOP853).
namespace dp {
constexpr double c2 = 0.526001519587677318785587544488e-01;
constexpr double c3 = 0.789002279381515978178381316732e-01;
constexpr double c4 = 0.118350341907227396726757197510e+00;
constexpr double c5 = 0.281649658092772603273242802490e+00;
constexpr double c6 = 0.333333333333333333333333333333e+00;
constexpr double c7 = 0.25e+00;
constexpr double c8 = 0.307692307692307692307692307692e+00;
constexpr double c9 = 0.651282051282051282051282051282e+00;
constexpr double c10 = 0.6e+00;
constexpr double c11 = 0.857142857142857142857142857142e+00;

constexpr double b1 = 5.42937341165687622380535766363e-2;
constexpr double b6 = 4.45031289275240888144113950566e0;
constexpr double b7 = 1.89151789931450038304281599044e0;
constexpr double b8 = -5.8012039600105847814672114227e0;
constexpr double b9 = 3.1116436695781989440891606237e-1;
constexpr double b10 = -1.52160949662516078556178806805e-1;
constexpr double b11 = 2.01365400804030348374776537501e-1;
constexpr double b12 = 4.47106157277725905176885569043e-2;

constexpr double bhh1 = 0.244094488188976377952755905512e+00;
constexpr double bhh2 = 0.733846688281611857341361741547e+00;
constexpr double bhh3 = 0.220588235294117647058823529412e-01;

constexpr double er1 = 0.1312004499419488073250102996e-01;
constexpr double er6 = -0.1225156446376204440720569753e+01;
constexpr double er7 = -0.4957589496572501915214079952e+00;
constexpr double er8 = 0.1664377182454986536961530415e+01;
constexpr double er9 = -0.3503288487499736816886487290e+00;
constexpr double er10 = 0.3341791187130174790297318841e+00;
constexpr double er11 = 0.8192320648511571246570742613e-01;
constexpr double er12 = -0.2235530786388629525884427845e-01;

constexpr double a21 = 5.26001519587677318785587544488e-2;
constexpr double a31 = 1.97250569845378994544595329183e-2;
constexpr double a32 = 5.91751709536136983633785987549e-2;
constexpr double a41 = 2.95875854768068491816892993775e-2;
constexpr double a43 = 8.87627564304205475450678981324e-2;
constexpr double a51 = 2.41365134159266685502369798665e-1;
constexpr double a53 = -8.84549479328286085344864962717e-1;
constexpr double a54 = 9.24834003261792003115737966543e-1;
constexpr double a61 = 3.7037037037037037037037037037e-2;
constexpr double a64 = 1.70828608729473871279604482173e-1;
constexpr double a65 = 1.25467687566822425016691814123e-1;
constexpr double a71 = 3.7109375e-2;
constexpr double a74 = 1.70252211019544039314978060272e-1;
constexpr double a75 = 6.02165389804559606850219397283e-2;
constexpr double a76 = -1.7578125e-2;
constexpr double a81 = 3.70920001185047927108779319836e-2;
constexpr double a84 = 1.70383925712239993810214054705e-1;
constexpr double a85 = 1.07262030446373284651809199168e-1;
constexpr double a86 = -1.53194377486244017527936158236e-2;
constexpr double a87 = 8.27378916381402288758473766002e-3;
constexpr double a91 = 6.24110958716075717114429577812e-1;
constexpr double a94 = -3.36089262944694129406857109825e0;
constexpr double a95 = -8.68219346841726006818189891453e-1;
constexpr double a96 = 2.75920996994467083049415600797e1;
constexpr double a97 = 2.01540675504778934086186788979e1;
constexpr double a98 = -4.34898841810699588477366255144e1;
constexpr double a101 = 4.77662536438264365890433908527e-1;
constexpr double a104 = -2.48811461997166764192642586468e0;
constexpr double a105 = -5.90290826836842996371446475743e-1;
constexpr double a106 = 2.12300514481811942347288949897e1;
constexpr double a107 = 1.52792336328824235832596922938e1;
constexpr double a108 = -3.32882109689848629194453265587e1;
constexpr double a109 = -2.03312017085086261358222928593e-2;
constexpr double a111 = -9.3714243008598732571704021658e-1;
constexpr double a114 = 5.18637242884406370830023853209e0;
constexpr double a115 = 1.09143734899672957818500254654e0;
constexpr double a116 = -8.14978701074692612513997267357e0;
constexpr double a117 = -1.85200656599969598641566180701e1;
constexpr double a118 = 2.27394870993505042818970056734e1;
constexpr double a119 = 2.49360555267965238987089396762e0;
constexpr double a1110 = -3.0467644718982195003823669022e0;
constexpr double a121 = 2.27331014751653820792359768449e0;
constexpr double a124 = -1.05344954667372501984066689879e1;
constexpr double a125 = -2.00087205822486249909675718444e0;
constexpr double a126 = -1.79589318631187989172765950534e1;
constexpr double a127 = 2.79488845294199600508499808837e1;
constexpr double a128 = -2.85899827713502369474065508674e0;
constexpr double a129 = -8.87285693353062954433549289258e0;
constexpr double a1210 = 1.23605671757943030647266201528e1;
constexpr double a1211 = 6.43392746015763530355970484046e-1;
}  // namespace dp

template <std::size_t N>
struct StepResult {
    Vec<N> y;
    double err = 0.0;  // scaled error norm; <= 1 means accept
};

/// One DOP853 step of size h from (x, y) with k1 = f(x, y).
template <std::size_t N, class Rhs>
StepResult<N> dop853_step(const Rhs& f, double x, const Vec<N>& y, const Vec<N>& k1, double h,
                          const IntegratorOptions* control) {
    using namespace dp;
    Vec<N> w, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12;
    auto stage = [&](auto&& combine, double c, Vec<N>& out) {
        for (std::size_t i = 0; i < N; ++i) w[i] = y[i] + h * combine(i);
        out = f(x + c * h, w);
    };
    stage([&](std::size_t i) { return a21 * k1[i]; }, c2, k2);
    stage([&](std::size_t i) { return a31 * k1[i] + a32 * k2[i]; }, c3, k3);
    stage([&](std::size_t i) { return a41 * k1[i] + a43 * k3[i]; }, c4, k4);
    stage([&](std::size_t i) { return a51 * k1[i] + a53 * k3[i] + a54 * k4[i]; }, c5, k5);
    stage([&](std::size_t i) { return a61 * k1[i] + a64 * k4[i] + a65 * k5[i]; }, c6, k6);
    stage([&](std::size_t i) { return a71 * k1[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]; }, c7,
          k7);
    stage(
        [&](std::size_t i) {
            return a81 * k1[i] + a84 * k4[i] + a85 * k5[i] + a86 * k6[i] + a87 * k7[i];
        },
        c8, k8);
    stage(
        [&](std::size_t i) {
            return a91 * k1[i] + a94 * k4[i] + a95 * k5[i] + a96 * k6[i] + a97 * k7[i] +
                   a98 * k8[i];
        },
        c9, k9);
    stage(
        [&](std::size_t i) {
            return a101 * k1[i] + a104 * k4[i] + a105 * k5[i] + a106 * k6[i] + a107 * k7[i] +
                   a108 * k8[i] + a109 * k9[i];
        },
        c10, k10);
    stage(
        [&](std::size_t i) {
            return a111 * k1[i] + a114 * k4[i] + a115 * k5[i] + a116 * k6[i] + a117 * k7[i] +
                   a118 * k8[i] + a119 * k9[i] + a1110 * k10[i];
        },
        c11, k11);
    stage(
        [&](std::size_t i) {
            return a121 * k1[i] + a124 * k4[i] + a125 * k5[i] + a126 * k6[i] + a127 * k7[i] +
                   a128 * k8[i] + a129 * k9[i] + a1210 * k10[i] + a1211 * k11[i];
        },
        1.0, k12);

    StepResult<N> out;
    Vec<N> incr;
    for (std::size_t i = 0; i < N; ++i) {
        incr[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                  b10 * k10[i] + b11 * k11[i] + b12 * k12[i];
        out.y[i] = y[i] + h * incr[i];
    }
    if (control == nullptr) return out;

    double err5 = 0.0;
    double err3 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sk =
            control->atol + control->rtol * std::max(std::abs(y[i]), std::abs(out.y[i]));
        const double e3 = (incr[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i]) / sk;
        const double e5 = (er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] +
                           er10 * k10[i] + er11 * k11[i] + er12 * k12[i]) /
                          sk;
        err3 += e3 * e3;
        err5 += e5 * e5;
    }
    double deno = err5 + 0.01 * err3;
    if (deno <= 0.0) deno = 1.0;
    out.err = std::abs(h) * err5 / std::sqrt(static_cast<double>(N) * deno);
    return out;
}

/// Adaptive driver; calls on_accept(x, y) after every accepted step.
template <std::size_t N, class Rhs, class OnAccept>
Vec<N> drive(const Rhs& f, double x0, double x1, Vec<N> y, double scale_hint,
             const IntegratorOptions& opt, OnAccept&& on_accept) {
    const double span = x1 - x0;
    if (span == 0.0) return y;
    const double dir = span > 0 ? 1.0 : -1.0;
    double h = dir * std::min(std::abs(span), 0.2 / (1.0 + std::sqrt(scale_hint)));
    double x = x0;
    Vec<N> k1 = f(x, y);
    bool reject_prev = false;
    const double h_floor = 1e-14 * std::max({1.0, std::abs(x0), std::abs(x1)});

    for (std::size_t steps = 0; steps < opt.max_steps; ++steps) {
        bool last = false;
        if (dir * (x + h - x1) >= 0.0 || std::abs(x1 - (x + h)) < h_floor) {
            h = x1 - x;
            last = true;
        }
        const StepResult<N> r = dop853_step<N>(f, x, y, k1, h, &opt);
        if (!std::isfinite(r.err)) {
            throw Error(Errc::StepSizeUnderflow,
                        "non-finite error estimate at x = " + std::to_string(x));
        }
        double fac = std::pow(r.err, 1.0 / 8.0) / 0.9;
        fac = std::clamp(fac, 1.0 / 6.0, 3.0);
        double h_new = h / fac;
        if (r.err <= 1.0) {
            x = last ? x1 : x + h;
            y = r.y;
            on_accept(x, y);
            if (last) return y;
            k1 = f(x, y);
            if (reject_prev) h_new = dir * std::min(std::abs(h_new), std::abs(h));
            reject_prev = false;
        } else {
            h_new = h / std::min(fac, 3.0);
            reject_prev = true;
        }
        if (std::abs(h_new) < h_floor) {
            throw Error(Errc::StepSizeUnderflow, "step size underflow at x = " + std::to_string(x));
        }
        h = h_new;
    }
    throw Error(Errc::StepSizeUnderflow, "step budget exhausted before reaching x = " +
                                             std::to_string(x1));
}

double checked_q(const Potential& q, double x) {
    const double v = q(x);
    if (!std::isfinite(v)) {
        throw Error(Errc::NonFinitePotential, "potential is not finite at x = " + std::to_string(x));
    }
    return v;
}

struct RealRhs {
    const Potential* q;
    double lambda;
    Vec<2> operator()(double x, const Vec<2>& y) const {
        return {y[1], (checked_q(*q, x) - lambda) * y[0]};
    }
};

struct ComplexRhs {
    const Potential* q;
    std::complex<double> lambda;
    // (ur, ui, upr, upi)
    Vec<4> operator()(double x, const Vec<4>& y) const {
        const double qr = checked_q(*q, x) - lambda.real();
        const double li = lambda.imag();
        return {y[2], y[3], qr * y[0] + li * y[1], qr * y[1] - li * y[0]};
    }
};

void check_span(double x_from, double x_to) {
    if (!std::isfinite(x_from) || !std::isfinite(x_to) || x_from == x_to) {
        throw Error(Errc::InvalidArgument, "integration span must be finite and non-empty");
    }
}

}  // namespace

StateVector SolutionPath::at(double x) const {
    const bool fwd = forward();
    const double lo = fwd ? xs_.front() : xs_.back();
    const double hi = fwd ? xs_.back() : xs_.front();
    const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
    if (x < lo - slack || x > hi + slack) {
        throw Error(Errc::InvalidArgument, "evaluation point " + std::to_string(x) +
                                               " outside the solution span");
    }
    // Index of the last node not beyond x in the integration direction.
    std::size_t i = 0;
    if (fwd) {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
    } else {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x, std::greater<>());
        i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
    }
    if (i + 1 >= xs_.size()) i = xs_.size() - 1;
    if (x == xs_[i]) return ys_[i];
    const double h = x - xs_[i];
    const RealRhs f{&q_, lambda_};
    const Vec<2> y{ys_[i].u, ys_[i].up};
    const StepResult<2> r = dop853_step<2>(f, xs_[i], y, f(xs_[i], y), h, nullptr);
    return {r.y[0], r.y[1]};
}

SolutionPath SolutionPath::scaled(double c) const {
    SolutionPath out = *this;
    for (StateVector& s : out.ys_) {
        s.u *= c;
        s.up *= c;
    }
    return out;
}

SolutionPath integrate(const Potential& q, double lambda, double x_from, double x_to,
                       StateVector init, const IntegratorOptions& options) {
    check_span(x_from, x_to);
    SolutionPath path;
    path.q_ = q;
    path.lambda_ = lambda;
    path.xs_.push_back(x_from);
    path.ys_.push_back(init);
    const RealRhs f{&path.q_, lambda};
    const double hint = std::abs(lambda) + std::abs(checked_q(q, x_from));
    drive<2>(f, x_from, x_to, Vec<2>{init.u, init.up}, hint, options,
             [&](double x, const Vec<2>& y) {
                 path.xs_.push_back(x);
                 path.ys_.push_back({y[0], y[1]});
             });
    return path;
}

StateVector propagate(const Potential& q, double lambda, double x_from, double x_to,
                      StateVector init, const IntegratorOptions& options) {
    check_span(x_from, x_to);
    const RealRhs f{&q, lambda};
    const double hint = std::abs(lambda) + std::abs(checked_q(q, x_from));
    const Vec<2> y =
        drive<2>(f, x_from, x_to, Vec<2>{init.u, init.up}, hint, options, [](double, auto&) {});
    return {y[0], y[1]};
}

ComplexState propagate(const Potential& q, std::complex<double> lambda, double x_from, double x_to,
                       ComplexState init, const IntegratorOptions& options) {
    check_span(x_from, x_to);
    const ComplexRhs f{&q, lambda};
    const double hint = std::abs(lambda) + std::abs(checked_q(q, x_from));
    const Vec<4> y = drive<4>(f, x_from, x_to,
                              Vec<4>{init.u.real(), init.u.imag(), init.up.real(), init.up.imag()},
                              hint, options, [](double, auto&) {});
    return {{y[0], y[1]}, {y[2], y[3]}};
}

}  // namespace mdsl
