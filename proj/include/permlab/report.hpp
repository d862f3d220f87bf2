#pragma once

#include <set>
#include <string>
#include <vector>

#include "permlab/scalar.hpp"

namespace permlab {

enum class Verdict { holds, fails, conditional };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::conditional: return "conditional";
    }
    return "?";
}

// A failing basis tuple together with the nonzero normal form found there.
struct Witness {
    std::string where;
    std::string value;
};

// Verdict of one identity check. `fails` always carries a witness;
// `conditional` only occurs under symbolic (polynomial) scalars and lists
// the distinct nonzero normal forms as constraints.
struct Report {
    std::string check;
    Verdict verdict = Verdict::holds;
    std::vector<Witness> witnesses;
    std::vector<std::string> constraints;
    std::vector<Report> parts;
    std::size_t witness_count = 0;

    bool ok() const { return verdict == Verdict::holds; }

    static Report combine(std::string name, std::vector<Report> subs) {
        Report r;
        r.check = std::move(name);
        r.verdict = Verdict::holds;
        for (auto& s : subs) {
            if (s.verdict == Verdict::fails && r.verdict != Verdict::fails) r.verdict = Verdict::fails;
            if (s.verdict == Verdict::conditional && r.verdict == Verdict::holds)
                r.verdict = Verdict::conditional;
            for (const auto& c : s.constraints)
                if (std::find(r.constraints.begin(), r.constraints.end(), c) == r.constraints.end())
                    r.constraints.push_back(c);
            r.witness_count += s.witness_count;
        }
        r.parts = std::move(subs);
        return r;
    }

    std::string summary() const {
        std::string s = check + ": " + verdict_str(verdict);
        if (!witnesses.empty()) s += " [witness " + witnesses.front().where + " -> " + witnesses.front().value + "]";
        if (!constraints.empty()) {
            s += " {constraints:";
            for (const auto& c : constraints) s += " " + c;
            s += "}";
        }
        return s;
    }
};

inline constexpr std::size_t kMaxWitnesses = 32;

// Accumulates the nonzero entries of LHS-RHS across all quantified tuples
// and classifies the outcome.
template <class K>
class CheckAcc {
  public:
    explicit CheckAcc(std::string name) : name_(std::move(name)) {}

    void add(const std::string& where, const K& value) {
        if (kzero(value)) return;
        ++count_;
        if (wit_.size() < kMaxWitnesses) wit_.push_back({where, kstr(value)});
        if constexpr (scalar_is_symbolic_v<K>) {
            if (ScalarInfo<K>::is_constant(value)) has_constant_ = true;
            else constraints_.insert(kstr(constraint_normal(value)));
        } else {
            has_constant_ = true;
        }
    }

    Report finish() const {
        Report r;
        r.check = name_;
        r.witnesses = wit_;
        r.witness_count = count_;
        r.constraints.assign(constraints_.begin(), constraints_.end());
        if (count_ == 0) {
            r.verdict = Verdict::holds;
        } else if (!constraints_.empty() && !has_constant_) {
            r.verdict = Verdict::conditional;
        } else {
            // a nonzero constant normal form cannot be fixed by any
            // parameter choice, so the identity fails outright
            r.verdict = Verdict::fails;
        }
        return r;
    }

  private:
    std::string name_;
    std::vector<Witness> wit_;
    std::set<std::string> constraints_;
    std::size_t count_ = 0;
    bool has_constant_ = false;
};

}  // namespace permlab
