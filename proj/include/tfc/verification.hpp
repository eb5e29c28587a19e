#pragma once

#include <string>

#include "tfc/types.hpp"

namespace tfc {

/// One executed theorem instance: what was checked, both sides, and the
/// outcome. For identities `residual_or_slack` is a residual (pass iff
/// residual <= tol); for inequalities it is the slack LHS - RHS (pass iff
/// slack >= -tol).
struct VerificationRecord {
    enum class TheoremId {
        Inversion,
        LemmaComposition,
        TaylorTelescope,
        Ineq1,
        Ineq2,
        Ineq3,
        SeriesStep,
    };

    /// Which sign of the boundary-correction term matched numerically.
    /// Undetermined means the instance cannot distinguish (the correction
    /// vanishes) or neither sign matched.
    enum class SignConvention { PropSign, LemmaSign, Undetermined };

    TheoremId theorem_id;
    std::string inputs;
    ComplexScalar lhs{0.0, 0.0};
    ComplexScalar rhs{0.0, 0.0};
    double residual_or_slack = 0.0;
    bool pass = false;
    SignConvention sign_convention = SignConvention::Undetermined;
};

inline const char* to_string(VerificationRecord::TheoremId id) {
    switch (id) {
        case VerificationRecord::TheoremId::Inversion: return "inversion";
        case VerificationRecord::TheoremId::LemmaComposition: return "lemma-composition";
        case VerificationRecord::TheoremId::TaylorTelescope: return "taylor-telescope";
        case VerificationRecord::TheoremId::Ineq1: return "ineq1";
        case VerificationRecord::TheoremId::Ineq2: return "ineq2";
        case VerificationRecord::TheoremId::Ineq3: return "ineq3";
        case VerificationRecord::TheoremId::SeriesStep: return "series-step";
    }
    return "unknown";
}

inline const char* to_string(VerificationRecord::SignConvention s) {
    switch (s) {
        case VerificationRecord::SignConvention::PropSign: return "prop";
        case VerificationRecord::SignConvention::LemmaSign: return "lemma";
        case VerificationRecord::SignConvention::Undetermined: return "undetermined";
    }
    return "unknown";
}

}  // namespace tfc
