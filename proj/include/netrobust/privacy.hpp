#pragma once

#include <cstdint>

namespace netrobust {

struct PrivacyParams {
    double epsilon = 1.0;  // DP budget, > 0
    double delta = 0.0;    // DP slack, [0, 1)
    double Delta = 1.0;    // sensitivity, > 0
    double s = 1.0;        // group-size parameter, > 0
    double xi = 1.0;       // measured strength, [0, 1]

    void validate() const;
};

struct PaalecParams {
    double alpha = 0.0;  // exp(epsilon / Delta)
    double beta = 0.0;   // 2 ln(1/delta) / s
};

// Aggregation-protocol parameters derived from the DP budget. delta must
// be positive (beta is undefined at delta = 0).
PaalecParams paalec_params(const PrivacyParams& p);

struct DpGuarantee {
    // Nodes inside the largest honest component.
    double epsilon_component = 0.0;
    double delta_component = 0.0;
    // Any arbitrary node: delta degrades by the mass outside the component.
    double epsilon_any = 0.0;
    double delta_any = 0.0;  // min(1, delta + (1 - xi))
};

DpGuarantee dp_guarantee(const PrivacyParams& p);

// Heuristic advisory only: noiseless aggregation is plausible when the
// largest honest component exceeds a caller-chosen group size.
bool noiseless_aggregation_plausible(double xi, std::int64_t honest_count,
                                     std::int64_t group_threshold);

}  // namespace netrobust
