#pragma once

#include "mdsl/eigen.hpp"
#include "mdsl/problem.hpp"

#include <variant>
#include <vector>

namespace mdsl {

/// 1: beta2 != 0, alpha2' != 0; 2: beta2 != 0, alpha2' = 0;
/// 3: beta2 = 0, alpha2' != 0; 4: beta2 = 0, alpha2' = 0.
enum class AsymptoticCase { case1 = 1, case2 = 2, case3 = 3, case4 = 4 };

struct AsymptoticPrediction {
    SequenceTag sequence = SequenceTag::prime;
    int n = 1;
    double s_pred = 0.0;
    double lambda_pred = 0.0;
};

[[nodiscard]] AsymptoticCase classify_case(const ValidatedProblem& problem) noexcept;

/// Leading term of the root sequence; sequence must be prime, double_prime or triple_prime.
[[nodiscard]] AsymptoticPrediction predict_s(const ValidatedProblem& problem, AsymptoticCase c,
                                             SequenceTag sequence, int n);

/// All positive predictions of the three sequences with s_pred <= s_max,
/// ordered by (s_pred, sequence).
[[nodiscard]] std::vector<AsymptoticPrediction> predictions_up_to(const ValidatedProblem& problem,
                                                                  double s_max);

/// Leading term of omega(s^2) for the given case, 1/(D1 D2) included.
/// Throws DegenerateLeadingCoefficient if the coefficient product vanishes.
[[nodiscard]] double asymptotic_omega(const ValidatedProblem& problem, AsymptoticCase c, double s);

/// Leading term of phi^(k)(x), k in {0, 1}, for the piece containing x.
[[nodiscard]] double asymptotic_phi(const ValidatedProblem& problem, double lambda, double x,
                                    int k = 0);

/// Entry that the asymptotic list only bounds: O(n^order).
struct OrderOnly {
    int order = 0;
};

using AsymptoticValue = std::variant<double, OrderOnly>;

/// Leading eigenfunction term of the n-th member of a sequence at x.
[[nodiscard]] AsymptoticValue asymptotic_eigenfunction(const ValidatedProblem& problem,
                                                       AsymptoticCase c, SequenceTag sequence,
                                                       int n, double x);

/// Default matching window: half a root spacing of the longest piece.
[[nodiscard]] double default_match_window(const ValidatedProblem& problem);

/// Greedy nearest-s matching; each prediction is used at most once. Ties are
/// broken by sequence order. Pairs with lambda <= 0 or no partner are tagged
/// unmatched.
void match_to_sequences(std::vector<Eigenpair>& pairs,
                        const std::vector<AsymptoticPrediction>& predictions, double window);

}  // namespace mdsl
