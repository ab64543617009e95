#include "mdsl/error.hpp"

namespace mdsl {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::RhoNotPositive: return "RhoNotPositive";
        case Errc::DeterminantNotPositive: return "DeterminantNotPositive";
        case Errc::DegenerateLeftBC: return "DegenerateLeftBC";
        case Errc::EpsilonOutOfRange: return "EpsilonOutOfRange";
        case Errc::PotentialNonFinite: return "PotentialNonFinite";
        case Errc::StepSizeUnderflow: return "StepSizeUnderflow";
        case Errc::NonFinitePotential: return "NonFinitePotential";
        case Errc::MismatchedLambda: return "MismatchedLambda";
        case Errc::PointOnInterface: return "PointOnInterface";
        case Errc::BoundSearchExhausted: return "BoundSearchExhausted";
        case Errc::ZeroOnContour: return "ZeroOnContour";
        case Errc::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
        case Errc::NotInDomain: return "NotInDomain";
        case Errc::LambdaIsEigenvalue: return "LambdaIsEigenvalue";
        case Errc::GridTooCoarse: return "GridTooCoarse";
        case Errc::EigensolverFailure: return "EigensolverFailure";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace mdsl
