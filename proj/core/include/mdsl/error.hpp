#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsl {

/// Failure categories raised by the solver. Admissibility violations come
/// first; numerical failures after.
enum class Errc {
    RhoNotPositive,
    DeterminantNotPositive,
    DegenerateLeftBC,
    EpsilonOutOfRange,
    PotentialNonFinite,
    StepSizeUnderflow,
    NonFinitePotential,
    MismatchedLambda,
    PointOnInterface,
    BoundSearchExhausted,
    ZeroOnContour,
    DegenerateLeadingCoefficient,
    NotInDomain,
    LambdaIsEigenvalue,
    GridTooCoarse,
    EigensolverFailure,
    SingularSystem,
    InvalidArgument,
};

[[nodiscard]] std::string_view to_string(Errc code) noexcept;

/// True for the admissibility checks performed by `validate`.
[[nodiscard]] constexpr bool is_validation_error(Errc code) noexcept {
    return code == Errc::RhoNotPositive || code == Errc::DeterminantNotPositive ||
           code == Errc::DegenerateLeftBC || code == Errc::EpsilonOutOfRange ||
           code == Errc::PotentialNonFinite;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mdsl
