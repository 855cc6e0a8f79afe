#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "secnet/rational.hpp"

namespace secnet {

struct VarSpec {
    std::string name;
    int symbols = 1;              // tuple width
    std::uint64_t alphabet = 2;   // per-symbol alphabet size
};

// Finite joint distribution with exact rational probabilities. Outcomes hold
// one packed code per variable (symbols packed little-endian base `alphabet`).
class JointDist {
public:
    JointDist() = default;
    explicit JointDist(std::vector<VarSpec> vars) : vars_(std::move(vars)) {}

    const std::vector<VarSpec>& vars() const { return vars_; }
    int index_of(const std::string& name) const;

    void add(const std::vector<std::uint64_t>& outcome, const Rational& p);
    const std::map<std::vector<std::uint64_t>, Rational>& pmf() const { return pmf_; }

    Rational total() const;

    // Marginal aggregates over the named variables.
    std::map<std::vector<std::uint64_t>, Rational>
    marginal(const std::vector<int>& var_indices) const;
    std::map<std::vector<std::uint64_t>, Rational>
    marginal_by_name(const std::vector<std::string>& names) const;

    std::vector<int> resolve(const std::vector<std::string>& names) const;

    static std::uint64_t pack(const std::vector<std::uint32_t>& symbols, std::uint64_t alphabet);
    static std::vector<std::uint32_t> unpack(std::uint64_t code, std::uint64_t alphabet, int symbols);

private:
    std::vector<VarSpec> vars_;
    std::map<std::vector<std::uint64_t>, Rational> pmf_;
};

}  // namespace secnet
