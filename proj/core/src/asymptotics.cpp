#include "mdsl/asymptotics.hpp"

#include "mdsl/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <tuple>

namespace mdsl {

namespace {

constexpr double pi = std::numbers::pi;

bool beta2_nonzero(const ValidatedProblem& p) { return p.left_bc().beta2 != 0.0; }

int sequence_rank(SequenceTag t) {
    switch (t) {
        case SequenceTag::prime: return 0;
        case SequenceTag::double_prime: return 1;
        case SequenceTag::triple_prime: return 2;
        default: throw Error(Errc::InvalidArgument, "not an asymptotic sequence");
    }
}

/// Index offset of each sequence: s_n = (n - offset) pi / L.
double offset(AsymptoticCase c, SequenceTag t) {
    static constexpr std::array<std::array<double, 3>, 4> table{{
        {1.0, 1.0, 2.0},
        {1.0, 1.0, 0.5},
        {0.5, 1.0, 1.0},
        {0.5, 1.0, 0.5},
    }};
    return table[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(sequence_rank(t))];
}

double length(const ValidatedProblem& p, SequenceTag t) {
    return p.piece(sequence_rank(t)).length();
}

}  // namespace

AsymptoticCase classify_case(const ValidatedProblem& problem) noexcept {
    const bool b2 = beta2_nonzero(problem);
    const bool a2p = problem.right_bc().alpha2p != 0.0;
    if (b2) return a2p ? AsymptoticCase::case1 : AsymptoticCase::case2;
    return a2p ? AsymptoticCase::case3 : AsymptoticCase::case4;
}

AsymptoticPrediction predict_s(const ValidatedProblem& problem, AsymptoticCase c,
                               SequenceTag sequence, int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "sequence index n must be >= 1");
    const double s = (n - offset(c, sequence)) * pi / length(problem, sequence);
    return {sequence, n, s, s * s};
}

std::vector<AsymptoticPrediction> predictions_up_to(const ValidatedProblem& problem,
                                                    double s_max) {
    const AsymptoticCase c = classify_case(problem);
    std::vector<AsymptoticPrediction> out;
    for (SequenceTag t : {SequenceTag::prime, SequenceTag::double_prime, SequenceTag::triple_prime}) {
        for (int n = 1;; ++n) {
            const AsymptoticPrediction p = predict_s(problem, c, t, n);
            if (p.s_pred > s_max) break;
            if (p.s_pred > 0.0) out.push_back(p);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.s_pred, x.sequence) < std::tie(y.s_pred, y.sequence);
    });
    return out;
}

double asymptotic_omega(const ValidatedProblem& problem, AsymptoticCase c, double s) {
    const LeftBC& l = problem.left_bc();
    const RightBC& r = problem.right_bc();
    const double mu2 = problem.t_left().m12;
    const double eta2 = problem.t_right().m12;
    const double l1 = problem.piece(0).length();
    const double l2 = problem.piece(1).length();
    const double l3 = problem.piece(2).length();
    double coeff = 0.0;
    double power = 0.0;
    double f1 = 0.0;
    double f3 = 0.0;
    switch (c) {
        case AsymptoticCase::case1:
            coeff = l.beta2 * r.alpha2p;
            power = 5;
            f1 = std::sin(s * l1);
            f3 = std::sin(s * l3);
            break;
        case AsymptoticCase::case2:
            coeff = l.beta2 * r.alpha1p;
            power = 4;
            f1 = std::sin(s * l1);
            f3 = std::cos(s * l3);
            break;
        case AsymptoticCase::case3:
            coeff = l.beta1 * r.alpha2p;
            power = 4;
            f1 = std::cos(s * l1);
            f3 = std::sin(s * l3);
            break;
        case AsymptoticCase::case4:
            coeff = l.beta1 * r.alpha1p;
            power = 3;
            f1 = std::cos(s * l1);
            f3 = std::cos(s * l3);
            break;
    }
    coeff *= mu2 * eta2;
    if (coeff == 0.0) {
        throw Error(Errc::DegenerateLeadingCoefficient,
                    "leading coefficient of omega vanishes (mu2 * eta2 * boundary product = 0)");
    }
    return coeff * std::pow(s, power) * f1 * std::sin(s * l2) * f3 /
           (problem.d1() * problem.d2());
}

double asymptotic_phi(const ValidatedProblem& problem, double lambda, double x, int k) {
    if (k != 0 && k != 1) throw Error(Errc::InvalidArgument, "derivative order must be 0 or 1");
    if (!(lambda > 0.0)) throw Error(Errc::InvalidArgument, "asymptotic forms need lambda > 0");
    const int piece = problem.piece_of(x);
    if (piece < 0) {
        throw Error(Errc::PointOnInterface, "asymptotic phi is defined on the open pieces only");
    }
    const double s = std::sqrt(lambda);
    const double a = problem.a();
    const double xm = problem.x_minus();
    const double xp = problem.x_plus();
    const double l1 = xm - a;
    const double l2 = xp - xm;
    const double mu2 = problem.t_left().m12;
    const double eta2 = problem.t_right().m12;
    const double b1 = problem.left_bc().beta1;
    const double b2 = problem.left_bc().beta2;
    // d^k/dx^k of cos(s(x - c)) and sin(s(x - c)).
    const auto dcos = [&](double c) {
        return k == 0 ? std::cos(s * (x - c)) : -s * std::sin(s * (x - c));
    };
    const auto dsin = [&](double c) {
        return k == 0 ? std::sin(s * (x - c)) : s * std::cos(s * (x - c));
    };
    if (b2 != 0.0) {
        switch (piece) {
            case 0: return b2 * dcos(a);
            case 1: return -s * mu2 * b2 * std::sin(s * l1) * dcos(xm);
            default: return s * s * mu2 * eta2 * b2 * std::sin(s * l1) * std::sin(s * l2) * dcos(xp);
        }
    }
    switch (piece) {
        case 0: return -(b1 / s) * dsin(a);
        case 1: return -mu2 * b1 * std::cos(s * l1) * dcos(xm);
        default: return s * mu2 * eta2 * b1 * std::cos(s * l1) * std::sin(s * l2) * dcos(xp);
    }
}

AsymptoticValue asymptotic_eigenfunction(const ValidatedProblem& problem, AsymptoticCase c,
                                         SequenceTag sequence, int n, double x) {
    const int piece = problem.piece_of(x);
    if (piece < 0) {
        throw Error(Errc::PointOnInterface, "asymptotic eigenfunction is defined on open pieces");
    }
    const bool explicit_term = piece == 0 || (piece == 1 && sequence != SequenceTag::prime) ||
                               (piece == 2 && sequence == SequenceTag::triple_prime);
    if (!explicit_term) {
        const bool beta_case = c == AsymptoticCase::case1 || c == AsymptoticCase::case2;
        if (piece == 1 || beta_case) return OrderOnly{-1};
        return OrderOnly{0};
    }
    const double s = predict_s(problem, c, sequence, n).s_pred;
    if (!(s > 0.0)) throw Error(Errc::InvalidArgument, "predicted s must be positive");
    return asymptotic_phi(problem, s * s, x, 0);
}

double default_match_window(const ValidatedProblem& problem) {
    double longest = 0.0;
    for (int i = 0; i < 3; ++i) longest = std::max(longest, problem.piece(i).length());
    return 0.5 * pi / longest;
}

void match_to_sequences(std::vector<Eigenpair>& pairs,
                        const std::vector<AsymptoticPrediction>& predictions, double window) {
    struct Candidate {
        double distance;
        int rank;
        std::size_t pair;
        std::size_t prediction;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pairs[i].sequence_tag = SequenceTag::unmatched;
        pairs[i].s_pred.reset();
        if (pairs[i].s_imaginary || pairs[i].lambda <= 0.0) continue;
        for (std::size_t j = 0; j < predictions.size(); ++j) {
            const double d = std::abs(pairs[i].s - predictions[j].s_pred);
            if (d <= window) {
                candidates.push_back({d, sequence_rank(predictions[j].sequence), i, j});
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.distance, x.rank, x.pair, x.prediction) <
               std::tie(y.distance, y.rank, y.pair, y.prediction);
    });
    std::vector<bool> pair_used(pairs.size(), false);
    std::vector<bool> pred_used(predictions.size(), false);
    for (const Candidate& c : candidates) {
        if (pair_used[c.pair] || pred_used[c.prediction]) continue;
        pair_used[c.pair] = pred_used[c.prediction] = true;
        pairs[c.pair].sequence_tag = predictions[c.prediction].sequence;
        pairs[c.pair].s_pred = predictions[c.prediction].s_pred;
    }
}

}  // namespace mdsl
