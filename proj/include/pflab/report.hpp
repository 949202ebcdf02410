#ifndef PFLAB_REPORT_HPP
#define PFLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pflab/scalar.hpp"

namespace pflab {

// One checked case: a parameter description, the largest residual seen
// (stringified scalar), and whether the case passed.
struct CheckCase {
    std::string params;
    std::string residual_max;
    bool pass = true;
};

// Structured result of an identity / lattice-solution verification run.
struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckCase c) { cases.push_back(std::move(c)); }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.cases) cases.push_back(c);
    }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : cases)
            cs.push_back({{"params", c.params}, {"residual_max", c.residual_max}, {"pass", c.pass}});
        return {{"suite", suite}, {"cases", cs}, {"seed", seed}};
    }
};

// Tracks the largest residual of a batch of exact checks together with the
// cell description it occurred at.
template <Field S>
class ResidualTracker {
public:
    void observe(const S& residual, const std::string& where) {
        if (ScalarTraits<S>::is_zero(residual)) return;
        fail_count_++;
        if (first_failure_.empty()) first_failure_ = where;
        worst_ = ScalarTraits<S>::str(residual);
    }

    bool clean() const { return fail_count_ == 0; }

    CheckCase as_case(std::string params) const {
        CheckCase c;
        c.params = std::move(params);
        if (clean()) {
            c.residual_max = "0";
            c.pass = true;
        } else {
            c.residual_max = worst_;
            c.pass = false;
            c.params += " [first failing cell: " + first_failure_ + "]";
        }
        return c;
    }

private:
    std::size_t fail_count_ = 0;
    std::string first_failure_;
    std::string worst_ = "0";
};

} // namespace pflab

#endif
