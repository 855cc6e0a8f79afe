#pragma once

#include <string>
#include <vector>

#include "secnet/dist.hpp"

namespace secnet {

enum class LogBase { Two, E, Q };

struct Measure {
    double value = 0.0;
    LogBase base = LogBase::Two;
    double base_value = 2.0;  // numeric base behind Q
};

// Shannon entropy of the marginal on the named variables.
Measure entropy(const JointDist& dist, const std::vector<std::string>& vars,
                LogBase base = LogBase::Two, double q = 2.0);

// I(A;B) = H(A) + H(B) - H(A,B) from exact marginals.
Measure mutual_info(const JointDist& dist, const std::vector<std::string>& a,
                    const std::vector<std::string>& b, LogBase base = LogBase::Two,
                    double q = 2.0);

// Distribution-level independence, exact (no logarithms): P(a,b) == P(a)P(b).
bool exactly_independent(const JointDist& dist, const std::vector<std::string>& a,
                         const std::vector<std::string>& b);

// l1 security distance: sum_y sum_x | P_Y(y)/|X| - P_XY(x,y) |, exact.
// |X| is the support size of the secret's marginal.
Rational l1_security(const JointDist& dist, const std::string& secret,
                     const std::vector<std::string>& observed);

// Conditional Renyi entropy H_{1+s}(X|Z) for s in (0, 1].
Measure renyi_cond(const JointDist& dist, const std::vector<std::string>& x,
                   const std::vector<std::string>& z, double s,
                   LogBase base = LogBase::Two, double q = 2.0);

// Privacy-amplification leakage bound exp(s*log|Y| - s*H_{1+s}) / s with both
// arguments in nats; returns nats.
double leakage_bound(double log_y_nats, double h1s_nats, double s);

// Floor for uniform X: H_{1+s}(X|Z) >= log(|X|/|Z|) (nats).
double renyi_uniform_floor(double x_count, double z_count);

}  // namespace secnet
