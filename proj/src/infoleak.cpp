#include "secnet/infoleak.hpp"

#include <cmath>

namespace secnet {

namespace {

double base_divisor(LogBase base, double q) {
    switch (base) {
        case LogBase::Two: return std::log(2.0);
        case LogBase::E: return 1.0;
        case LogBase::Q: return std::log(q);
    }
    return std::log(2.0);
}

double entropy_nats(const std::map<std::vector<std::uint64_t>, Rational>& pmf) {
    double h = 0.0;
    for (const auto& [k, p] : pmf) {
        if (p.num() == 0) continue;  // 0 log 0 = 0
        double pd = p.to_double();
        h -= pd * std::log(pd);
    }
    return h;
}

std::vector<std::string> concat(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
    std::vector<std::string> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

Measure entropy(const JointDist& dist, const std::vector<std::string>& vars, LogBase base,
                double q) {
    double h = entropy_nats(dist.marginal_by_name(vars));
    return Measure{h / base_divisor(base, q), base, base == LogBase::Q ? q : (base == LogBase::Two ? 2.0 : std::exp(1.0))};
}

Measure mutual_info(const JointDist& dist, const std::vector<std::string>& a,
                    const std::vector<std::string>& b, LogBase base, double q) {
    double ha = entropy_nats(dist.marginal_by_name(a));
    double hb = entropy_nats(dist.marginal_by_name(b));
    double hab = entropy_nats(dist.marginal_by_name(concat(a, b)));
    double nats = ha + hb - hab;
    return Measure{nats / base_divisor(base, q), base, base == LogBase::Q ? q : (base == LogBase::Two ? 2.0 : std::exp(1.0))};
}

bool exactly_independent(const JointDist& dist, const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
    auto pa = dist.marginal_by_name(a);
    auto pb = dist.marginal_by_name(b);
    auto pab = dist.marginal_by_name(concat(a, b));
    std::size_t na = a.size();
    // Every support point must factorize, and the support must be the product
    // support (missing joint entries with positive product mass fail too).
    if (pab.size() != pa.size() * pb.size()) {
        // could still factorize only if some product entries are zero, which
        // cannot happen for marginals of a real distribution
        return false;
    }
    for (const auto& [key, p] : pab) {
        std::vector<std::uint64_t> ka(key.begin(), key.begin() + (long)na);
        std::vector<std::uint64_t> kb(key.begin() + (long)na, key.end());
        if (p != pa.at(ka) * pb.at(kb)) return false;
    }
    return true;
}

Rational l1_security(const JointDist& dist, const std::string& secret,
                     const std::vector<std::string>& observed) {
    auto px = dist.marginal_by_name({secret});
    auto py = dist.marginal_by_name(observed);
    auto pxy = dist.marginal_by_name(concat({secret}, observed));
    Rational inv_x(1, (std::int64_t)px.size());
    Rational d1;
    for (const auto& [y, pyv] : py) {
        Rational uniform_term = inv_x * pyv;
        for (const auto& [x, pxv] : px) {
            std::vector<std::uint64_t> key;
            key.reserve(1 + y.size());
            key.push_back(x[0]);
            key.insert(key.end(), y.begin(), y.end());
            auto it = pxy.find(key);
            Rational joint = it == pxy.end() ? Rational(0) : it->second;
            d1 += (uniform_term - joint).abs();
        }
    }
    return d1;
}

Measure renyi_cond(const JointDist& dist, const std::vector<std::string>& x,
                   const std::vector<std::string>& z, double s, LogBase base, double q) {
    if (!(s > 0.0) || s > 1.0) throw Error("Renyi order parameter must lie in (0, 1]");
    auto pz = dist.marginal_by_name(z);
    auto pxz = dist.marginal_by_name(concat(x, z));
    std::size_t nx = x.size();
    // acc = sum_z P(z) sum_x P(x|z)^{1+s}
    double acc = 0.0;
    for (const auto& [key, pj] : pxz) {
        std::vector<std::uint64_t> kz(key.begin() + (long)nx, key.end());
        double pzv = pz.at(kz).to_double();
        double cond = pj.to_double() / pzv;
        acc += pzv * std::pow(cond, 1.0 + s);
    }
    double nats = -std::log(acc) / s;
    return Measure{nats / base_divisor(base, q), base, base == LogBase::Q ? q : (base == LogBase::Two ? 2.0 : std::exp(1.0))};
}

double leakage_bound(double log_y_nats, double h1s_nats, double s) {
    if (!(s > 0.0) || s > 1.0) throw Error("Renyi order parameter must lie in (0, 1]");
    return std::exp(s * (log_y_nats - h1s_nats)) / s;
}

double renyi_uniform_floor(double x_count, double z_count) {
    return std::log(x_count) - std::log(z_count);
}

}  // namespace secnet
