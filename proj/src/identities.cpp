#include "qpl/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "qpl/divisors.hpp"
#include "qpl/error.hpp"
#include "qpl/partitions.hpp"
#include "qpl/partsets.hpp"
#include "qpl/qseries.hpp"

namespace qpl {

namespace {

void require_order(std::int64_t order)
{
    if (order < 0)
        throw ParameterError("order must be non-negative, got " + std::to_string(order));
}

void require_sign(int sign)
{
    if (sign != 1 && sign != -1)
        throw ParameterError("sign must be +1 or -1, got " + std::to_string(sign));
}

VerificationReport make_report(std::string identity, std::int64_t order)
{
    VerificationReport r;
    r.identity = std::move(identity);
    r.order = order;
    return r;
}

// sum_j w(j) q^{M(j)} truncated at order; boundary collisions add up.
QSeries figurate_series(const ModularParams& p, std::size_t order, const std::function<int(std::int64_t)>& w)
{
    SeriesBuilder s(order);
    for (const auto& e : figurate_enumerate(p, static_cast<std::int64_t>(order)))
        s[static_cast<std::size_t>(e.value)] += w(e.j);
    return s.take();
}

// 1 + c q^a z^b as a Laurent series.
ZLaurentSeries binomial_factor(std::size_t order, long c, std::size_t a, std::int64_t b)
{
    const std::int64_t lo = std::min<std::int64_t>(0, b);
    const std::int64_t hi = std::max<std::int64_t>(0, b);
    std::vector<QSeries> coeffs(static_cast<std::size_t>(hi - lo + 1), QSeries(order));
    if (b == 0) {
        SeriesBuilder one(order);
        one[0] = 1;
        one.mul_binomial(c, a);
        coeffs[0] = one.take();
    } else {
        coeffs[static_cast<std::size_t>(-lo)] = QSeries::one(order);
        coeffs[static_cast<std::size_t>(b - lo)] = QSeries::monomial(order, a, c);
    }
    return ZLaurentSeries(lo, std::move(coeffs));
}

void compare_laurent(VerificationReport& r, const ZLaurentSeries& lhs, const ZLaurentSeries& rhs, std::int64_t lo,
                     std::int64_t hi, const std::string& detail)
{
    if (r.failure)
        return;
    for (std::int64_t d = lo; d <= hi; ++d) {
        const QSeries a = lhs.coeff(d);
        const QSeries b = rhs.coeff(d);
        for (std::size_t n = 0; n <= lhs.order(); ++n) {
            if (a[n] != b[n]) {
                r.failure = Mismatch{static_cast<std::int64_t>(n), d, a[n], b[n], detail};
                return;
            }
        }
    }
}

// Oracle cross-check limited to the oracle's own bound.
void compare_with_oracle(VerificationReport& r, const std::vector<Integer>& values, const PartSet& set,
                         const CountMode& mode, std::int64_t order, const std::string& detail)
{
    const std::int64_t n = std::min(order, oracle_bound());
    if (n < 0 || r.failure)
        return;
    const auto oracle = oracle_table(set, mode, n).values;
    compare_into(r, values, oracle, n, detail);
}

} // namespace

VerificationReport verify_triple_product(std::int64_t order, std::int64_t window)
{
    require_order(order);
    if (window < 0)
        throw ParameterError("z-window must be non-negative");
    auto r = make_report("triple-product", order);
    r.with("window", window);

    const auto n = static_cast<std::size_t>(order);
    const std::int64_t factors = order + window + 2;

    // A partial product term q^a z^d with d > 0 uses d distinct factors
    // (1 + q^{m-1} z), so a >= d(d-1)/2; for d < 0 likewise a >= d(d+1)/2.
    // z-degrees beyond `reach` therefore only carry q-exponents above the
    // order and are dropped from every intermediate product.
    std::int64_t reach = 0;
    while ((reach + 1) * reach / 2 <= order)
        ++reach;
    const std::int64_t w = std::max(window, reach);

    ZLaurentSeries prod(0, std::vector<QSeries>{QSeries::one(n)});
    for (std::int64_t m = 1; m <= factors; ++m) {
        const auto um = static_cast<std::size_t>(m);
        prod = laurent_mul(prod, binomial_factor(n, -1, um, 0), -w, w);
        prod = laurent_mul(prod, binomial_factor(n, 1, um, -1), -w, w);
        prod = laurent_mul(prod, binomial_factor(n, 1, um - 1, 1), -w, w);
    }

    std::vector<QSeries> rhs;
    for (std::int64_t j = -window; j <= window; ++j)
        rhs.push_back(QSeries::monomial(n, static_cast<std::size_t>((j * j - j) / 2)));
    compare_laurent(r, prod, ZLaurentSeries(-window, std::move(rhs)), -window, window,
                    "truncated triple product vs theta series");
    return r;
}

VerificationReport verify_specialized(const ModularParams& p, int sign, std::int64_t order)
{
    require_order(order);
    require_sign(sign);
    auto r = make_report("specialized", order);
    r.with("k", p.k()).with("l", p.ell()).with("sign", sign);
    const auto n = static_cast<std::size_t>(order);
    const QSeries lhs = triple_pochhammer(p.k(), p.ell(), sign, n);
    const QSeries rhs = figurate_series(p, n, [sign](std::int64_t j) { return sign_pow(sign, j); });
    compare_into(r, lhs.coeffs(), rhs.coeffs(), order, "product vs signed figurate series");
    return r;
}

VerificationReport verify_berger(std::int64_t k, std::int64_t order)
{
    if (k < 1)
        throw ParameterError("polygonal identities need k >= 1");
    auto r = make_report("berger", order);
    r.with("k", k);
    for (const int sign : {1, -1}) {
        const auto sub = verify_specialized(ModularParams(k, 1), sign, order);
        if (!sub.passed()) {
            r.failure = sub.failure;
            r.failure->detail = "sign " + std::to_string(sign) + ": " + r.failure->detail;
            break;
        }
    }
    return r;
}

VerificationReport verify_hermite(std::int64_t s, const std::vector<ModularParams>& grid)
{
    if (s < 0)
        throw ParameterError("Hermite check needs s >= 0");
    const std::int64_t degree = s * s;
    auto r = make_report("hermite", degree);
    r.with("s", s);
    const auto n = static_cast<std::size_t>(degree);

    ZLaurentSeries lhs(0, std::vector<QSeries>{QSeries::one(n)});
    for (std::int64_t m = 1; m <= s; ++m) {
        const auto um = static_cast<std::size_t>(m);
        lhs = laurent_mul(lhs, binomial_factor(n, 1, um, -1));
        lhs = laurent_mul(lhs, binomial_factor(n, 1, um - 1, 1));
    }
    std::vector<QSeries> rhs_coeffs;
    for (std::int64_t j = -s; j <= s; ++j) {
        const auto g = gaussian_binomial(2 * s, s + j);
        const auto shift = static_cast<std::size_t>((j * j - j) / 2);
        SeriesBuilder c(n);
        for (std::size_t i = 0; i < g.coeffs.size(); ++i)
            c[i + shift] = g.coeffs[i];
        rhs_coeffs.push_back(c.take());
    }
    compare_laurent(r, lhs, ZLaurentSeries(-s, std::move(rhs_coeffs)), -s, s, "finite product vs Gaussian sum");
    if (s == 0 || r.failure)
        return r;

    for (const auto& p : grid) {
        const PartSet js = PartSet::Js(p, s);
        std::int64_t top = 0;
        for (auto m : js.members_upto(2 * p.k() * s))
            top += m;
        const auto un = static_cast<std::size_t>(top);
        for (const int gamma : {1, -1}) {
            SeriesBuilder gauss(un);
            for (std::int64_t j = -s; j <= s; ++j) {
                const auto g = gaussian_binomial(2 * s, s + j);
                const std::int64_t shift = figurate(p, j);
                for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
                    // [2s, s+j] evaluated at q^k.
                    const auto e = static_cast<std::size_t>(shift) + i * static_cast<std::size_t>(p.k());
                    gauss[e] += sign_pow(gamma, j) * g.coeffs[i];
                }
            }
            const QSeries rhs = gauss.take();
            const auto mode = CountMode::distinct_gamma(gamma);
            const auto gf = gf_count(js, mode, top).values;
            const std::string tag = js.str() + " gamma " + std::to_string(gamma);
            compare_into(r, gf, rhs.coeffs(), top, tag + ": generating function vs Gaussian sum");
            compare_with_oracle(r, gf, js, mode, top, tag + ": generating function vs oracle");
        }
    }
    return r;
}

VerificationReport verify_hermite(std::int64_t s)
{
    return verify_hermite(s, {ModularParams(3, 1), ModularParams(4, 1), ModularParams(5, 2)});
}

VerificationReport verify_boundary_half(std::int64_t k, std::int64_t order)
{
    if (k < 2 || k % 2 != 0)
        throw ParameterError("boundary-half identities need an even k >= 2, got " + std::to_string(k));
    require_order(order);
    auto r = make_report("boundary-half", order);
    r.with("k", k);
    const auto n = static_cast<std::size_t>(order);
    const std::int64_t h = k / 2;

    SeriesBuilder num(n), den(n), unit(n);
    num[0] = 1;
    den[0] = 1;
    unit[0] = 1;
    for (std::int64_t m = 1; k * m - h <= order; ++m) {
        const auto full = static_cast<std::size_t>(k * m);
        const auto half = static_cast<std::size_t>(k * m - h);
        num.mul_binomial(-1, full);
        num.mul_binomial(1, half);
        den.mul_binomial(1, full);
        den.mul_binomial(-1, half);
        unit.mul_binomial(1, full);
        unit.mul_binomial(1, half);
        unit.mul_binomial(-1, half);
    }
    const QSeries quotient = series_mul(num.take(), series_reciprocal(den.take()));
    SeriesBuilder squares(n);
    for (std::int64_t j = 0; h * j * j <= order; ++j)
        squares[static_cast<std::size_t>(h * j * j)] += (j == 0) ? 1 : 2;
    const QSeries theta = squares.take();
    compare_into(r, quotient.coeffs(), theta.coeffs(), order, "quotient vs sum_j q^{(k/2) j^2}");

    const QSeries product = unit.take();
    const QSeries one = QSeries::one(n);
    compare_into(r, product.coeffs(), one.coeffs(), order, "three-factor product vs 1");
    return r;
}

VerificationReport verify_signed_distinct(const ModularParams& p, std::int64_t order)
{
    p.require_interior("signed distinct-partition identity on Jbar");
    require_order(order);
    auto r = make_report("signed-distinct", order);
    r.with("k", p.k()).with("l", p.ell());
    const auto gf = gf_count(PartSet::Jbar(p), CountMode::distinct_gamma(-1), order).values;
    const QSeries indicator =
        figurate_series(p, static_cast<std::size_t>(order), [](std::int64_t j) { return sign_pow(-1, j); });
    compare_into(r, gf, indicator.coeffs(), order, "r_dt on Jbar vs signed figurate indicator");
    const std::vector<Integer> expected(indicator.coeffs().begin(), indicator.coeffs().end());
    compare_with_oracle(r, expected, PartSet::Jbar(p), CountMode::distinct_gamma(-1), order,
                        "signed figurate indicator vs oracle");
    return r;
}

VerificationReport verify_pbar_recursion(const ModularParams& p, std::int64_t order)
{
    auto r = make_report("pbar-recursion", order);
    r.with("k", p.k()).with("l", p.ell());
    const auto rec = recursion_pbar(p, order).values;
    const auto set = PartSet::Jbar(p);
    const auto mode = CountMode::unrestricted();
    compare_into(r, rec, gf_count(set, mode, order).values, order, "recursion vs generating function");
    compare_with_oracle(r, rec, set, mode, order, "recursion vs oracle");
    return r;
}

VerificationReport verify_quotient_recursion(const ModularParams& p1, int gamma1, const ModularParams& p2,
                                             int gamma2, std::int64_t order)
{
    auto r = make_report("quotient-recursion", order);
    r.with("k1", p1.k()).with("l1", p1.ell()).with("gamma1", gamma1);
    r.with("k2", p2.k()).with("l2", p2.ell()).with("gamma2", gamma2);
    const auto rec = recursion_general(p1, gamma1, p2, gamma2, order).values;
    const QSeries h = general_quotient_series(p1, gamma1, p2, gamma2, static_cast<std::size_t>(order));
    compare_into(r, rec, h.coeffs(), order, "recursion vs quotient series");
    return r;
}

VerificationReport verify_pdt_recursion(const ModularParams& p, int gamma, std::int64_t order)
{
    auto r = make_report("pdt-recursion", order);
    r.with("k", p.k()).with("l", p.ell()).with("gamma", gamma);
    const auto rec = recursion_pdt_gamma(p, gamma, order).values;
    const auto set = PartSet::J(p);
    const auto mode = CountMode::distinct_gamma(gamma);
    const ModularParams pent(3 * p.k(), p.k());
    const QSeries h = general_quotient_series(pent, 1, p, gamma, static_cast<std::size_t>(order));
    compare_into(r, rec, h.coeffs(), order, "recursion vs quotient series");
    compare_into(r, rec, recursion_general(pent, 1, p, gamma, order).values, order, "recursion vs general recursion");
    compare_into(r, rec, gf_count(set, mode, order).values, order, "recursion vs generating function");
    compare_with_oracle(r, rec, set, mode, order, "recursion vs oracle");
    return r;
}

VerificationReport verify_p_gamma_recursion(const ModularParams& p, int gamma, std::int64_t order)
{
    auto r = make_report("p-gamma-recursion", order);
    r.with("k", p.k()).with("l", p.ell()).with("gamma", gamma);
    const auto rec = recursion_p_gamma(p, gamma, order).values;
    const auto set = PartSet::J(p);
    const auto mode = CountMode::unrestricted_gamma(gamma);
    const ModularParams pent(3 * p.k(), p.k());
    const QSeries h = general_quotient_series(p, gamma, pent, -1, static_cast<std::size_t>(order));
    compare_into(r, rec, h.coeffs(), order, "recursion vs quotient series");
    compare_into(r, rec, recursion_general(p, gamma, pent, -1, order).values, order, "recursion vs general recursion");
    compare_into(r, rec, gf_count(set, mode, order).values, order, "recursion vs generating function");
    compare_with_oracle(r, rec, set, mode, order, "recursion vs oracle");
    return r;
}

VerificationReport verify_pdhat_recursion(const ModularParams& p, std::int64_t d, std::int64_t order)
{
    auto r = make_report("pdhat-recursion", order);
    r.with("k", p.k()).with("l", p.ell()).with("d", d);
    const auto rec = recursion_pdhat(p, d, order).values;
    const auto set = PartSet::Jbar(p);
    const auto mode = CountMode::at_most(d);
    const QSeries h = general_quotient_series(p, 1, p.scaled(d + 1), -1, static_cast<std::size_t>(order));
    compare_into(r, rec, h.coeffs(), order, "recursion vs quotient series");
    compare_into(r, rec, gf_count(set, mode, order).values, order, "recursion vs generating function");
    compare_with_oracle(r, rec, set, mode, order, "recursion vs oracle");
    return r;
}

VerificationReport verify_divisor_recursion(const ModularParams& p, std::int64_t order)
{
    auto r = make_report("divisor-recursion", order);
    r.with("k", p.k()).with("l", p.ell());
    const auto rec = recursion_fkl(p, order).values;
    compare_into(r, rec, divisor_table(PartSet::Jbar(p), order).values, order, "recursion vs divisor scan");
    compare_into(r, rec, kim_fkl(p, order).values, order, "recursion vs expanded Kim identity");
    return r;
}

std::vector<VerificationReport> verify_all(const GridOptions& o)
{
    if (o.k_min < 1 || o.k_max < o.k_min)
        throw ParameterError("grid needs 1 <= k_min <= k_max");
    require_order(o.order);
    const std::int64_t N = o.order;

    std::vector<std::function<VerificationReport()>> tasks;
    tasks.emplace_back([=] { return verify_triple_product(N, o.window); });
    for (std::int64_t s = 0; s <= 6; ++s)
        tasks.emplace_back([=] { return verify_hermite(s); });

    std::vector<ModularParams> interior;
    for (std::int64_t k = o.k_min; k <= o.k_max; ++k) {
        for (std::int64_t l = 0; l <= k; ++l) {
            for (const int sign : {1, -1})
                tasks.emplace_back([=] { return verify_specialized(ModularParams(k, l), sign, N); });
            if (ModularParams(k, l).is_interior())
                interior.emplace_back(k, l);
        }
        tasks.emplace_back([=] { return verify_berger(k, N); });
        if (k % 2 == 0)
            tasks.emplace_back([=] { return verify_boundary_half(k, N); });
    }

    for (std::size_t i = 0; i < interior.size(); ++i) {
        const ModularParams p = interior[i];
        const ModularParams next = interior[(i + 1) % interior.size()];
        tasks.emplace_back([=] { return verify_signed_distinct(p, N); });
        tasks.emplace_back([=] { return verify_pbar_recursion(p, N); });
        tasks.emplace_back([=] { return verify_divisor_recursion(p, N); });
        tasks.emplace_back([=] { return apostol_convolution_check(p, N); });
        tasks.emplace_back([=] { return kim_identity_check(p, N); });
        tasks.emplace_back([=] { return log_derivative_check(p, N); });
        for (const int g : {1, -1}) {
            tasks.emplace_back([=] { return verify_pdt_recursion(p, g, N); });
            tasks.emplace_back([=] { return verify_p_gamma_recursion(p, g, N); });
            tasks.emplace_back([=] { return identity_shifted_partitions(p, g, N); });
            for (const int g2 : {1, -1})
                tasks.emplace_back([=] { return verify_quotient_recursion(p, g, next, g2, N); });
        }
        for (std::int64_t d = 1; d <= 3; ++d) {
            tasks.emplace_back([=] { return verify_pdhat_recursion(p, d, N); });
            tasks.emplace_back([=] { return identity_capped_multiplicity(p, d, N); });
        }
    }

    std::vector<VerificationReport> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        for (std::size_t i = next_task++; i < tasks.size(); i = next_task++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, o.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    std::stable_sort(results.begin(), results.end(), report_less);
    return results;
}

} // namespace qpl
