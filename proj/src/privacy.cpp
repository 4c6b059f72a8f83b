#include "netrobust/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netrobust {

void PrivacyParams::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be finite and > 0");
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in [0, 1)");
    if (!(Delta > 0.0) || !std::isfinite(Delta))
        throw std::invalid_argument("sensitivity Delta must be finite and > 0");
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("group-size parameter s must be finite and > 0");
    if (!(xi >= 0.0 && xi <= 1.0))
        throw std::invalid_argument("xi must lie in [0, 1]");
}

PaalecParams paalec_params(const PrivacyParams& p) {
    p.validate();
    if (p.delta == 0.0)
        throw std::invalid_argument("beta is undefined at delta = 0 (needs delta > 0)");
    return {std::exp(p.epsilon / p.Delta), 2.0 * std::log(1.0 / p.delta) / p.s};
}

DpGuarantee dp_guarantee(const PrivacyParams& p) {
    p.validate();
    DpGuarantee g;
    g.epsilon_component = p.epsilon;
    g.delta_component = p.delta;
    g.epsilon_any = p.epsilon;
    g.delta_any = std::min(1.0, p.delta + (1.0 - p.xi));
    return g;
}

bool noiseless_aggregation_plausible(double xi, std::int64_t honest_count,
                                     std::int64_t group_threshold) {
    return xi * static_cast<double>(honest_count) >= static_cast<double>(group_threshold);
}

}  // namespace netrobust
