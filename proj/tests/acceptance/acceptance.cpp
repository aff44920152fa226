// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpl/cli.hpp"
#include "qpl/divisors.hpp"
#include "qpl/identities.hpp"
#include "qpl/partitions.hpp"
#include "qpl/qseries.hpp"
#include "qpl/theta.hpp"

using namespace qpl;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    std::string info; // printed on PASS too

    void fail(const std::string& why)
    {
        if (ok)
            note = why;
        ok = false;
    }
    void require(bool cond, const std::string& why)
    {
        if (!cond)
            fail(why);
    }
    void require(const VerificationReport& r)
    {
        if (!r.passed()) {
            std::string where = r.identity;
            for (const auto& [k, v] : r.parameters)
                where += " " + k + "=" + std::to_string(v);
            where += " first mismatch at q^" + std::to_string(r.failure->q_exponent) + " (" +
                     to_decimal(r.failure->lhs) + " vs " + to_decimal(r.failure->rhs) + ")";
            fail(where);
        }
    }
};

std::vector<ModularParams> interior_grid(std::int64_t k_min, std::int64_t k_max)
{
    std::vector<ModularParams> out;
    for (std::int64_t k = k_min; k <= k_max; ++k)
        for (std::int64_t l = 1; l < k; ++l)
            if (2 * l != k)
                out.emplace_back(k, l);
    return out;
}

std::vector<Integer> coeffs_of(const QSeries& s)
{
    return {s.coeffs().begin(), s.coeffs().end()};
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds)
        o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << timing << "]";
    if (!o.info.empty())
        std::cout << " " << o.info;
    if (!o.ok) {
        std::cout << " -- " << o.note;
        ++failures;
    }
    std::cout << std::endl;
}

} // namespace

int main()
{
    criterion(1, "triple product, q-order 200, |j| <= 12", 10.0,
              [](Outcome& o) { o.require(verify_triple_product(200, 12)); });

    criterion(2, "specializations k=1..8, 0<=l<=k, both signs, order 300", 30.0, [](Outcome& o) {
        for (std::int64_t k = 1; k <= 8; ++k) {
            for (std::int64_t l = 0; l <= k; ++l)
                for (const int sign : {1, -1})
                    o.require(verify_specialized(ModularParams(k, l), sign, 300));
            o.require(triple_pochhammer(k, 0, -1, 300).is_zero(), "l=0 minus product not zero");
            o.require(triple_pochhammer(k, k, -1, 300).is_zero(), "l=k minus product not zero");
        }
    });

    criterion(3, "polygonal identities k=1..10, order 300; pentagonal signs", 0, [](Outcome& o) {
        for (std::int64_t k = 1; k <= 10; ++k)
            o.require(verify_berger(k, 300));
        const auto s = triple_pochhammer(3, 1, -1, 15);
        const std::vector<std::pair<int, int>> nonzero{{1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}};
        for (const auto& [n, c] : nonzero)
            o.require(s[n] == c, "coefficient at n=" + std::to_string(n));
        for (int n = 1; n <= 14; ++n) {
            const bool listed = n == 1 || n == 2 || n == 5 || n == 7 || n == 12;
            if (!listed)
                o.require(s[n] == 0, "nonzero coefficient at n=" + std::to_string(n));
        }
    });

    criterion(4, "Hermite s=0..6 and J_{k,l,s} forms against the oracle", 0, [](Outcome& o) {
        for (std::int64_t s = 0; s <= 6; ++s)
            o.require(verify_hermite(s));
        for (const auto& p : {ModularParams(3, 1), ModularParams(4, 1), ModularParams(5, 2)}) {
            for (std::int64_t s = 1; s <= 4; ++s) {
                const auto set = PartSet::Js(p, s);
                const std::int64_t top = p.k() * s * s; // sum of all members
                for (const int g : {1, -1}) {
                    std::vector<Integer> rhs(top + 1, 0);
                    for (std::int64_t j = -s; j <= s; ++j) {
                        const auto gb = gaussian_binomial(2 * s, s + j);
                        const std::int64_t shift = figurate(p, j);
                        for (std::size_t t = 0; t < gb.coeffs.size(); ++t) {
                            const std::int64_t e = shift + p.k() * static_cast<std::int64_t>(t);
                            if (e <= top)
                                rhs[e] += (g == -1 && j % 2 != 0) ? -gb.coeffs[t] : gb.coeffs[t];
                        }
                    }
                    for (std::int64_t n = 0; n <= top; ++n)
                        o.require(oracle_count(n, set, CountMode::distinct_gamma(g), top) == rhs[n],
                                  p.str() + " s=" + std::to_string(s) + " n=" + std::to_string(n));
                }
            }
        }
    });

    criterion(5, "boundary-half identities k=2,4,6,8, order 300", 0, [](Outcome& o) {
        for (const std::int64_t k : {2, 4, 6, 8})
            o.require(verify_boundary_half(k, 300));
    });

    criterion(6, "signed distinct partitions on Jbar, k=3..8, order 300; oracle n<=100", 0, [](Outcome& o) {
        for (const auto& p : interior_grid(3, 8)) {
            o.require(verify_signed_distinct(p, 300));
            std::vector<Integer> indicator(101, 0);
            for (const auto& e : figurate_enumerate(p, 100))
                indicator[e.value] += (e.j % 2 == 0) ? 1 : -1;
            const auto dp = oracle_table(PartSet::Jbar(p), CountMode::distinct_gamma(-1), 100);
            o.require(dp.values == indicator, "oracle disagrees for " + p.str());
        }
    });

    criterion(7, "p(n; Jbar) recursion = gf = oracle, k=3..8, n<=120; p(10)=42, p(50)=204226", 0,
              [](Outcome& o) {
                  for (const auto& p : interior_grid(3, 8)) {
                      const auto rec = recursion_pbar(p, 120);
                      const auto gf = gf_count(PartSet::Jbar(p), CountMode::unrestricted(), 120);
                      const auto dp = oracle_table(PartSet::Jbar(p), CountMode::unrestricted(), 120);
                      o.require(rec.values == gf.values, "gf " + p.str());
                      o.require(rec.values == dp.values, "oracle " + p.str());
                  }
                  const auto row = recursion_pbar(ModularParams(3, 1), 50);
                  o.require(row.at(10) == 42, "p(10)");
                  o.require(row.at(50) == 204226, "p(50)");
              });

    criterion(8, "quotient recursions against direct expansion, >= 20 tuples, n<=120", 0, [](Outcome& o) {
        const auto grid = interior_grid(3, 8);
        int tuples = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& p1 = grid[i];
            const auto& p2 = grid[(i + 7) % grid.size()];
            for (const int g1 : {1, -1}) {
                for (const int g2 : {1, -1}) {
                    const auto direct = general_quotient_series(p1, g1, p2, g2, 120);
                    o.require(recursion_general(p1, g1, p2, g2, 120).values == coeffs_of(direct),
                              "general " + p1.str() + " " + p2.str());
                    ++tuples;
                }
            }
            for (const int g : {1, -1}) {
                o.require(recursion_pdt_gamma(p1, g, 120).values ==
                              gf_count(PartSet::J(p1), CountMode::distinct_gamma(g), 120).values,
                          "distinct " + p1.str());
                o.require(recursion_p_gamma(p1, g, 120).values ==
                              gf_count(PartSet::J(p1), CountMode::unrestricted_gamma(g), 120).values,
                          "unrestricted " + p1.str());
            }
        }
        o.require(tuples >= 20, "too few tuples");
    });

    criterion(9, "shifted-partition and capped-multiplicity identities, order 120", 0, [](Outcome& o) {
        for (const auto& p : interior_grid(3, 8)) {
            for (const int g : {1, -1})
                o.require(identity_shifted_partitions(p, g, 120));
            for (std::int64_t d = 1; d <= 3; ++d)
                o.require(identity_capped_multiplicity(p, d, 120));
        }
    });

    criterion(10, "capped-multiplicity recursion = oracle, d=1..3, n<=100; distinct row", 0, [](Outcome& o) {
        for (const auto& p : interior_grid(3, 8))
            for (std::int64_t d = 1; d <= 3; ++d)
                o.require(recursion_pdhat(p, d, 100).values ==
                              oracle_table(PartSet::Jbar(p), CountMode::at_most(d), 100).values,
                          p.str() + " d=" + std::to_string(d));
        const auto row = recursion_pdhat(ModularParams(3, 1), 1, 10);
        const std::vector<Integer> want{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
        o.require(row.values == want, "distinct row");
    });

    criterion(11, "divisor recursion = divisor scan, k=3..8, n<=200; sigma(12)=28", 0, [](Outcome& o) {
        for (const auto& p : interior_grid(3, 8)) {
            const auto rec = recursion_fkl(p, 200);
            const auto set = PartSet::Jbar(p);
            for (std::int64_t n = 1; n <= 200; ++n)
                o.require(rec.at(n) == divisor_sum(set, n), p.str() + " n=" + std::to_string(n));
        }
        const auto sigma = recursion_fkl(ModularParams(3, 1), 200);
        for (std::int64_t n = 1; n <= 200; ++n)
            o.require(sigma.at(n) == oracle::restricted_sigma(n, [](std::int64_t) { return true; }),
                      "sigma(" + std::to_string(n) + ")");
        o.require(sigma.at(12) == 28, "sigma(12)");
    });

    criterion(12, "Apostol convolution and Kim identity, order 200", 0, [](Outcome& o) {
        for (const auto& p : interior_grid(3, 8)) {
            o.require(apostol_convolution_check(p, 200));
            o.require(kim_identity_check(p, 200));
        }
    });

    criterion(13, "theta series/product within 1e-12, residuals < 1e-11, 100 points", 5.0, [](Outcome& o) {
        std::mt19937_64 rng(8675309);
        std::uniform_real_distribution<double> rq(0.0, 0.5), ang(-std::numbers::pi, std::numbers::pi),
            lz(std::log(0.1), std::log(10.0));
        double worst_gap = 0, worst_res = 0;
        for (int i = 0; i < 100; ++i) {
            const ThetaPoint pt(std::polar(rq(rng), ang(rng)), std::polar(std::exp(lz(rng)), ang(rng)));
            const double gap = std::abs(theta_series(pt, 1e-13) - theta_product(pt, 60));
            const auto [shift, period] = quasi_periodicity_residual(pt, 1e-13);
            worst_gap = std::max(worst_gap, gap);
            worst_res = std::max({worst_res, shift, period});
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "max gap %.3g, max residual %.3g", worst_gap, worst_res);
        o.info = buf;
        o.require(worst_gap <= 1e-12, "series/product gap " + std::to_string(worst_gap));
        o.require(worst_res < 1e-11, "residual " + std::to_string(worst_res));
    });

    criterion(14, "two verify --all runs are byte-identical", 0, [](Outcome& o) {
        const std::vector<std::string> args{"verify", "--all", "--grid", "k=3..8", "--order", "200", "--jobs", "4"};
        std::ostringstream out1, err1, out2, err2;
        const int s1 = cli::main_with_args(args, out1, err1);
        const int s2 = cli::main_with_args(args, out2, err2);
        o.require(s1 == 0 && s2 == 0, "nonzero exit status: " + err1.str());
        o.require(!out1.str().empty() && out1.str() == out2.str(), "reports differ");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
