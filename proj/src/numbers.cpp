#include "qpl/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "qpl/error.hpp"

namespace qpl {

namespace {

ParamClass classify(std::int64_t k, std::int64_t ell)
{
    if (ell == 0 || ell == k)
        return ParamClass::boundary_zero;
    if (k % 2 == 0 && 2 * ell == k)
        return ParamClass::boundary_half;
    // k = 1, 2 have no l strictly between the boundary cases.
    return ParamClass::interior;
}

// Largest j >= 0 that can satisfy k j (j-1) / 2 <= bound, plus a margin.
std::int64_t scan_limit(std::int64_t k, std::int64_t bound)
{
    const double disc = 1.0 + 8.0 * static_cast<double>(bound) / static_cast<double>(k);
    return static_cast<std::int64_t>((1.0 + std::sqrt(disc)) / 2.0) + 2;
}

} // namespace

const char* to_string(ParamClass c)
{
    switch (c) {
    case ParamClass::interior:
        return "interior";
    case ParamClass::boundary_zero:
        return "boundary-zero";
    case ParamClass::boundary_half:
        return "boundary-half";
    }
    return "?";
}

ModularParams::ModularParams(std::int64_t k, std::int64_t ell) : k_(k), ell_(ell), cls_(ParamClass::interior)
{
    if (k < 1)
        throw ParameterError("modulus k must be a positive integer, got " + std::to_string(k));
    if (ell < 0 || ell > k)
        throw ParameterError("residue must satisfy 0 <= l <= k, got (k, l) = (" + std::to_string(k) + ", " +
                             std::to_string(ell) + ")");
    cls_ = classify(k, ell);
}

ModularParams ModularParams::scaled(std::int64_t c) const
{
    if (c < 1)
        throw ParameterError("scale factor must be positive");
    return ModularParams(c * k_, c * ell_);
}

void ModularParams::require_interior(const std::string& what) const
{
    if (is_interior())
        return;
    throw ParameterError(what + " requires k >= 3, 0 < l < k and l != k/2; " + str() + " is " +
                         to_string(cls_));
}

std::string ModularParams::str() const
{
    return "(k, l) = (" + std::to_string(k_) + ", " + std::to_string(ell_) + ")";
}

std::int64_t gnomon(const ModularParams& p, std::int64_t i)
{
    if (i < 1)
        throw IndexError("gnomon index must be >= 1, got " + std::to_string(i));
    return p.k() * (i - 1) + p.ell();
}

std::int64_t figurate(const ModularParams& p, std::int64_t j)
{
    // j (j - 1) is even, so the division is exact before scaling by k.
    return p.k() * ((j * (j - 1)) / 2) + p.ell() * j;
}

std::int64_t pentagonal(std::int64_t j)
{
    return figurate(ModularParams(3, 1), j);
}

std::vector<FigurateEntry> figurate_enumerate(const ModularParams& p, std::int64_t bound)
{
    std::vector<FigurateEntry> out;
    if (bound < 0)
        return out;
    const std::int64_t limit = scan_limit(p.k(), bound);
    for (std::int64_t j = -limit; j <= limit; ++j) {
        const std::int64_t v = figurate(p, j);
        if (v >= 0 && v <= bound)
            out.push_back({j, v});
    }
    std::sort(out.begin(), out.end(), [](const FigurateEntry& a, const FigurateEntry& b) {
        return a.value != b.value ? a.value < b.value : a.j < b.j;
    });
    return out;
}

Integer QPolynomial::sum() const
{
    Integer s = 0;
    for (const auto& c : coeffs)
        s += c;
    return s;
}

QPolynomial gaussian_binomial(std::int64_t n, std::int64_t m)
{
    if (n < 0 || m < 0 || m > n)
        return {};
    if (m > n - m)
        m = n - m;

    // Per-thread memo of the q-Pascal rule
    //   [n, m] = [n-1, m-1] + q^m [n-1, m].
    thread_local std::map<std::pair<std::int64_t, std::int64_t>, QPolynomial> memo;
    const auto key = std::make_pair(n, m);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    QPolynomial result;
    if (m == 0) {
        result.coeffs = {Integer(1)};
    } else {
        const QPolynomial left = gaussian_binomial(n - 1, m - 1);
        const QPolynomial right = gaussian_binomial(n - 1, m);
        const auto shift = static_cast<std::size_t>(m);
        const std::size_t len = std::max(left.coeffs.size(), right.coeffs.empty() ? 0 : right.coeffs.size() + shift);
        result.coeffs.assign(len, Integer(0));
        for (std::size_t i = 0; i < left.coeffs.size(); ++i)
            result.coeffs[i] += left.coeffs[i];
        for (std::size_t i = 0; i < right.coeffs.size(); ++i)
            result.coeffs[i + shift] += right.coeffs[i];
    }
    memo.emplace(key, result);
    return result;
}

} // namespace qpl
