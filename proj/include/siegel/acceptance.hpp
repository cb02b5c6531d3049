#pragma once

#include "siegel/bgg_hodge.hpp"
#include "siegel/characters.hpp"
#include "siegel/hecke_params.hpp"
#include "siegel/weyl_modules.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace siegel {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

namespace acceptance_detail {

inline std::vector<Weight> weight_grid(int g, size_t count)
{
    std::vector<Weight> out;
    // deterministic staircase-style dominant weights with c = sum a_i
    for (long long top = 0; out.size() < count; ++top)
        for (long long mid = 0; mid <= top && out.size() < count; ++mid)
            for (long long low = 0; low <= mid && out.size() < count; ++low) {
                std::vector<long long> coords(static_cast<size_t>(g), low);
                coords[0] = top;
                if (g >= 2)
                    coords[1] = mid;
                for (size_t k = 2; k + 1 < coords.size(); ++k)
                    coords[k] = mid;
                bool dominant = true;
                for (size_t k = 0; k + 1 < coords.size(); ++k)
                    if (coords[k] < coords[k + 1])
                        dominant = false;
                if (!dominant)
                    continue;
                long long c = 0;
                for (long long v : coords)
                    c += v;
                Weight w(g, coords, c);
                bool seen = false;
                for (const Weight& oldw : out)
                    if (oldw == w)
                        seen = true;
                if (!seen)
                    out.push_back(w);
            }
    return out;
}

struct Xorshift {
    uint64_t state;
    explicit Xorshift(uint64_t seed) : state(seed) {}
    uint64_t next()
    {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    Rational rational()
    {
        long long num = static_cast<long long>(next() % 201) - 100;
        long long den = 1 + static_cast<long long>(next() % 12);
        return Rational(num, den);
    }
};

template <typename Fn>
CriterionResult timed(int number, std::string name, double budget, Fn&& body)
{
    CriterionResult res;
    res.number = number;
    res.name = std::move(name);
    res.budget_seconds = budget;
    std::ostringstream detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
        ok = false;
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.pass = ok && res.seconds < budget;
    if (ok && res.seconds >= budget)
        detail << " (exceeded " << budget << "s budget)";
    res.detail = detail.str();
    return res;
}

} // namespace acceptance_detail

// Runs the acceptance checks. gmax = 0 runs the full stated ranges; a
// positive gmax caps every genus loop (used by the CLI verify-all).
inline std::vector<CriterionResult> run_acceptance(int gmax = 0)
{
    using namespace acceptance_detail;
    auto cap = [&](int g) { return gmax > 0 && g > gmax ? gmax : g; };
    std::vector<CriterionResult> results;

    results.push_back(timed(1, "hodge weight quadruples", 1.0, [&](std::ostringstream& out) {
        bool ok = hodge_weights(Weight(2, {5, 5}, 10)) == std::vector<long long>{0, 6, 7, 13}
                  && hodge_weights(Weight(2, {3, 3}, 6)) == std::vector<long long>{0, 4, 5, 9}
                  && hodge_weights(Weight(2, {0, 0}, 0)) == std::vector<long long>{0, 1, 2, 3};
        out << "three quadruples checked";
        return ok;
    }));

    results.push_back(timed(2, "kostant/hodge bijection", 10.0, [&](std::ostringstream& out) {
        bool ok = true;
        int checked = 0;
        for (int g = 1; g <= cap(4); ++g) {
            CosetTable table = kostant_reps(g, Parabolic::siegel(g));
            if (table.reps.size() != (1u << g))
                ok = false;
            for (const Weight& lam : weight_grid(g, 20)) {
                std::vector<long long> jumps;
                long long top_jump = -1;
                for (size_t i = 0; i < table.reps.size(); ++i) {
                    jumps.push_back(hodge_jump(table.reps[i], lam));
                    if (table.lengths[i] == d_value(g))
                        top_jump = jumps.back();
                }
                std::sort(jumps.begin(), jumps.end());
                if (jumps != hodge_weights(lam))
                    ok = false;
                if (top_jump != motivic_weight(lam))
                    ok = false;
                ++checked;
            }
        }
        out << checked << " weights scanned";
        return ok;
    }));

    results.push_back(timed(3, "claim84/claim87 exhaustive verification", 60.0,
                            [&](std::ostringstream& out) {
        bool ok = true;
        int strata = 0;
        for (int g : {2, 3}) {
            if (gmax > 0 && g > gmax)
                continue;
            for (const Weight& lam : weight_grid(g, 10))
                for (int r = 1; r <= g; ++r) {
                    ClaimReport rep = claim84_check(lam, r);
                    strata += static_cast<int>(rep.strata.size());
                    if (!rep.pass)
                        ok = false;
                }
        }
        if (gmax == 0 || gmax >= 3)
            for (const Weight& lam : weight_grid(3, 4)) {
                ClaimReport rep = claim87_check(lam, 2);
                strata += static_cast<int>(rep.strata.size());
                if (!rep.pass)
                    ok = false;
            }
        out << strata << " strata scanned, none attains both 0 and w";
        return ok;
    }));

    results.push_back(timed(4, "weyl lattice ranks and divisors", 120.0,
                            [&](std::ostringstream& out) {
        bool ok = true;
        struct Case {
            Weight lambda;
            size_t rank;
        };
        std::vector<Case> cases{{Weight(2, {1, 0}, 1), 4},
                                {Weight(2, {1, 1}, 2), 5},
                                {Weight(2, {2, 0}, 2), 10},
                                {Weight(2, {2, 1}, 3), 16},
                                {Weight(2, {2, 2}, 4), 14}};
        for (long long n = 1; n <= 5; ++n)
            cases.push_back({Weight(1, {n}, n), static_cast<size_t>(n + 1)});
        for (const Case& c : cases) {
            long long s = c.lambda.semisimple_sum();
            long long p = s < 3 ? 3 : s + 1; // characteristic 2 is excluded throughout
            while (!is_prime(p))
                ++p;
            LatticeReport rep = weyl_lattice(c.lambda, p);
            if (rep.rank != c.rank || !rep.rank_matches)
                ok = false;
            for (long long q : rep.divisor_primes)
                if (q > s)
                    ok = false; // divisor not a p-unit for some p > |lambda|
            out << rep.lambda.to_string() << "->" << rep.rank << " ";
        }
        return ok;
    }));

    results.push_back(timed(5, "kostant dimension identity (literal)", 5.0,
                            [&](std::ostringstream& out) {
        bool ok = true;
        std::vector<Weight> cases{Weight(2, {0, 0}, 0), Weight(2, {1, 0}, 1), Weight(2, {1, 1}, 2),
                                  Weight(2, {2, 0}, 2), Weight(2, {2, 1}, 3)};
        for (int r : {1, 2})
            for (const Weight& lam : cases) {
                BigInt total(0);
                for (const auto& e : kostant_mod_p(lam, r).entries)
                    total += levi_dimension(e);
                BigInt dim = weyl_dimension(lam);
                if (!(total == dim))
                    ok = false;
                out << "r=" << r << " " << lam.to_string() << ": sum=" << total.to_string()
                    << " dim=" << dim.to_string() << "; ";
            }
        return ok;
    }));

    results.push_back(timed(6, "slope system round trip", 2.0, [&](std::ostringstream& out) {
        bool ok = true;
        Xorshift rng(0x5eed5107);
        int trips = 0;
        for (int g = 1; g <= cap(4); ++g)
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Rational> t;
                for (int i = 0; i < g; ++i)
                    t.push_back(rng.rational());
                Rational z = rng.rational();
                SlopeSolution sol = solve_slope_system(SlopeSystem(g, spin_slopes(t, z)));
                if (!sol.consistent || sol.t_display != t || !(sol.z == z))
                    ok = false;
                ++trips;
            }
        int solved = 0;
        for (int g = 1; g <= cap(4); ++g)
            for (const Weight& lam : weight_grid(g, 5)) {
                std::map<uint32_t, Rational> targets;
                for (uint32_t b = 0; b < (1u << g); ++b)
                    targets[b] = Rational(hodge_weight_jb(lam, b));
                SlopeSolution sol = solve_slope_system(SlopeSystem(g, targets));
                if (!sol.consistent)
                    ok = false;
                for (int i = 1; i <= g && ok; ++i)
                    if (!(sol.t_display[static_cast<size_t>(g - i)] == Rational(-(lam.m(i) + i))))
                        ok = false;
                ++solved;
            }
        out << trips << " round trips, " << solved << " j_B systems solved to t_i = -(a_i+i)";
        return ok;
    }));

    results.push_back(timed(7, "minuscule pairing equals motivic weight", 1.0,
                            [&](std::ostringstream& out) {
        bool ok = true;
        int checked = 0;
        for (int g = 1; g <= cap(5); ++g)
            for (const Weight& lam : weight_grid(g, 12)) {
                HalfWeight shifted = lam.half() + rho_tilde(g).half();
                if (minuscule_pairing(shifted).to_int64() != motivic_weight(lam))
                    ok = false;
                ++checked;
            }
        for (long long n = 0; n <= 6; ++n) {
            Weight lam(1, {n}, n);
            if (minuscule_pairing(lam.half() + rho_tilde(1).half()).to_int64() != n + 1)
                ok = false;
        }
        out << checked << " grid weights plus the g=1 exponent series";
        return ok;
    }));

    results.push_back(timed(8, "plethysm verifier", 60.0, [&](std::ostringstream& out) {
        bool ok = traceless_subspace(2, 2).dim == 15 && traceless_subspace(1, 2).dim == 3;
        for (auto [g, s] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
            IdempotentReport rep = idempotent_check(g, s, 7);
            TracelessBasis t = traceless_subspace(g, s);
            if (rep.kernel_dim != t.dim || t.dim + t.phi_rank != t.ambient_dim)
                ok = false; // the direct-kernel construction must be unaffected
            out << "(g=" << g << ",s=" << s << "): kappa=" << rep.kappa
                << " theta^2=kappa*theta:" << (rep.theta_squared_is_kappa_theta ? "yes" : "no")
                << " zp-split:" << (rep.zp_direct_sum ? "yes" : "no") << "; ";
        }
        return ok;
    }));

    results.push_back(timed(9, "p-smallness gate", 1.0, [&](std::ostringstream& out) {
        Weight zero(2, {0, 0}, 0);
        long long first = 0;
        for (long long p = 2; p < 200 && first == 0; ++p)
            if (is_prime(p) && p != 2 && p_greater_than_5(p) && is_p_small(zero, p))
                first = p;
        out << "minimal admissible prime at lambda = 0, g = 2: " << first;
        return first == 7;
    }));

    return results;
}

inline bool acceptance_all_pass(const std::vector<CriterionResult>& results)
{
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

} // namespace siegel
