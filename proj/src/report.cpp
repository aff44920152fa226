#include "qpl/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qpl {

void compare_into(VerificationReport& report, std::span<const Integer> lhs, std::span<const Integer> rhs,
                  std::int64_t order, const std::string& detail)
{
    if (report.failure)
        return;
    if (order < 0)
        return;
    const auto n = static_cast<std::size_t>(order);
    if (lhs.size() <= n || rhs.size() <= n)
        throw std::out_of_range("compare_into: tables shorter than the compared order");
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] != rhs[i]) {
            report.failure = Mismatch{static_cast<std::int64_t>(i), std::nullopt, lhs[i], rhs[i], detail};
            return;
        }
    }
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.parameters)
        params[name] = value;
    nlohmann::json j{
        {"schema", 1},
        {"identity", r.identity},
        {"parameters", std::move(params)},
        {"order", r.order},
        {"outcome", r.passed() ? "pass" : "fail"},
    };
    if (r.failure) {
        const auto& f = *r.failure;
        nlohmann::json loc{{"q", f.q_exponent}};
        loc["z"] = f.z_exponent ? nlohmann::json(*f.z_exponent) : nlohmann::json(nullptr);
        j["failure"] = {
            {"location", std::move(loc)},
            {"lhs", to_decimal(f.lhs)},
            {"rhs", to_decimal(f.rhs)},
            {"detail", f.detail},
        };
    }
    return j;
}

bool report_less(const VerificationReport& a, const VerificationReport& b)
{
    return std::tie(a.identity, a.parameters, a.order) < std::tie(b.identity, b.parameters, b.order);
}

} // namespace qpl
