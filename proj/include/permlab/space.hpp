#pragma once

#include <set>
#include <string>
#include <vector>

#include "permlab/error.hpp"

namespace permlab {

inline constexpr std::size_t kMaxDim = 16;

// Named finite-dimensional space with an ordered basis. The dual is the same
// space tagged dual with the canonically paired basis e_i*; taking the dual
// twice returns the original (finite dimension throughout).
struct Space {
    std::string name;
    std::vector<std::string> basis;
    bool is_dual = false;

    std::size_t dim() const { return basis.size(); }

    friend bool operator==(const Space& a, const Space& b) {
        return a.name == b.name && a.is_dual == b.is_dual && a.basis == b.basis;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
};

inline Space make_space(std::string name, std::vector<std::string> basis) {
    if (basis.empty()) throw DimTooLarge("space '" + name + "' must have dimension >= 1");
    if (basis.size() > kMaxDim)
        throw DimTooLarge("space '" + name + "' exceeds the dimension cap of " + std::to_string(kMaxDim));
    std::set<std::string> seen(basis.begin(), basis.end());
    if (seen.size() != basis.size()) throw Error("space '" + name + "' has duplicate basis names");
    return Space{std::move(name), std::move(basis), false};
}

inline Space dual_of(const Space& s) {
    Space d = s;
    d.is_dual = !s.is_dual;
    if (!s.is_dual) {
        d.name = s.name + "*";
        for (auto& b : d.basis) b += "*";
    } else {
        // strip the trailing stars added when the dual was formed
        if (!d.name.empty() && d.name.back() == '*') d.name.pop_back();
        for (auto& b : d.basis)
            if (!b.empty() && b.back() == '*') b.pop_back();
    }
    return d;
}

inline Space direct_sum(const Space& a, const Space& b) {
    std::vector<std::string> basis = a.basis;
    std::set<std::string> taken(basis.begin(), basis.end());
    for (const auto& x : b.basis) {
        std::string name = x;
        while (taken.count(name)) name += "'";
        taken.insert(name);
        basis.push_back(name);
    }
    return make_space(a.name + "+" + b.name, std::move(basis));
}

inline void require_same_space(const Space& a, const Space& b, const std::string& what) {
    if (a != b) throw SpaceMismatch(what + ": expected space '" + a.name + "', got '" + b.name + "'");
}

}  // namespace permlab
