#ifndef QPL_REPORT_HPP
#define QPL_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpl/integer.hpp"

namespace qpl {

struct Mismatch {
    std::int64_t q_exponent;
    std::optional<std::int64_t> z_exponent;
    Integer lhs;
    Integer rhs;
    std::string detail; // which side pair disagreed, when a check has several
};

/// Outcome of one exact identity check.
struct VerificationReport {
    std::string identity;
    /// Named integer parameters in insertion order (k, l, sign, s, window...).
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::int64_t order = 0;
    std::optional<Mismatch> failure;

    bool passed() const noexcept { return !failure.has_value(); }

    VerificationReport& with(std::string name, std::int64_t value)
    {
        parameters.emplace_back(std::move(name), value);
        return *this;
    }
};

/// Compares lhs[0..order] with rhs[0..order] and records the first mismatch.
/// `detail` labels the comparison in a failure record.
void compare_into(VerificationReport& report, std::span<const Integer> lhs, std::span<const Integer> rhs,
                  std::int64_t order, const std::string& detail = {});

nlohmann::json to_json(const VerificationReport& r);

/// Stable ordering used when aggregating reports from worker threads.
bool report_less(const VerificationReport& a, const VerificationReport& b);

} // namespace qpl

#endif
