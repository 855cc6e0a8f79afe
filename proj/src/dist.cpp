#include "secnet/dist.hpp"

#include "secnet/util.hpp"

namespace secnet {

int JointDist::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return (int)i;
    throw Error("unknown variable '" + name + "'");
}

void JointDist::add(const std::vector<std::uint64_t>& outcome, const Rational& p) {
    if (outcome.size() != vars_.size()) throw DimensionError("outcome width mismatch");
    auto it = pmf_.find(outcome);
    if (it == pmf_.end())
        pmf_.emplace(outcome, p);
    else
        it->second += p;
}

Rational JointDist::total() const {
    Rational t;
    for (const auto& [k, p] : pmf_) t += p;
    return t;
}

std::vector<int> JointDist::resolve(const std::vector<std::string>& names) const {
    std::vector<int> idx;
    idx.reserve(names.size());
    for (const auto& n : names) idx.push_back(index_of(n));
    return idx;
}

std::map<std::vector<std::uint64_t>, Rational>
JointDist::marginal(const std::vector<int>& var_indices) const {
    std::map<std::vector<std::uint64_t>, Rational> out;
    std::vector<std::uint64_t> key(var_indices.size());
    for (const auto& [outcome, p] : pmf_) {
        for (std::size_t i = 0; i < var_indices.size(); ++i) key[i] = outcome[var_indices[i]];
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, p);
        else
            it->second += p;
    }
    return out;
}

std::map<std::vector<std::uint64_t>, Rational>
JointDist::marginal_by_name(const std::vector<std::string>& names) const {
    return marginal(resolve(names));
}

std::uint64_t JointDist::pack(const std::vector<std::uint32_t>& symbols, std::uint64_t alphabet) {
    std::uint64_t code = 0;
    for (std::size_t i = symbols.size(); i-- > 0;) code = code * alphabet + symbols[i];
    return code;
}

std::vector<std::uint32_t> JointDist::unpack(std::uint64_t code, std::uint64_t alphabet, int symbols) {
    std::vector<std::uint32_t> v((std::size_t)symbols);
    for (int i = 0; i < symbols; ++i) {
        v[(std::size_t)i] = (std::uint32_t)(code % alphabet);
        code /= alphabet;
    }
    return v;
}

}  // namespace secnet
