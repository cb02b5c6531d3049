#pragma once

#include "siegel/rational.hpp"
#include "siegel/root_datum.hpp"
#include "siegel/weight.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

// Unramified principal-series parameter phi = (alpha_g, ..., alpha_1; gamma),
// carried as exact valuation data. Parameterizes
// diag(t_g,...,t_1,nu t_1^{-1},...,nu t_g^{-1}) |-> prod |t_i|^{alpha_i} |nu|^{(gamma - sum alpha_i)/2}.
struct UnramifiedParameter {
    int g = 0;
    std::vector<Rational> exponents; // display order (alpha_g, ..., alpha_1)
    Rational central;                // gamma
    long long p = 0;

    UnramifiedParameter() = default;
    UnramifiedParameter(int g_, std::vector<Rational> exps, Rational gamma, long long prime = 0)
        : g(g_), exponents(std::move(exps)), central(std::move(gamma)), p(prime)
    {
        if (g < 1 || exponents.size() != static_cast<size_t>(g))
            throw invalid_input("UnramifiedParameter: exponent count must equal g >= 1");
    }
};

// The Hecke-vs-Langlands normalization shift: phi~ = phi |nu|^{-d}, i.e.
// gamma -> gamma - d with the alpha_i untouched.
inline UnramifiedParameter twist(const UnramifiedParameter& phi)
{
    UnramifiedParameter out = phi;
    out.central = out.central - Rational(d_value(phi.g));
    return out;
}

// The twisted parameter evaluated at the prime, as a spin-torus element
// (t_g, ..., t_1, [u, zeta-slot]) recorded by p-adic valuations: the
// |t|^x components of the displayed cocharacter give ord_p = -x at t = p.
struct SpinTorusElement {
    std::vector<Rational> t_valuations; // display order, ord of the t_i slots
    Rational u_valuation;               // ord of the u slot, -(sum alpha)/2
    Rational central_valuation;         // ord of the zeta slot, (d - gamma)/2
};

inline SpinTorusElement spin_torus_evaluation(const UnramifiedParameter& phi)
{
    SpinTorusElement e;
    Rational sum(0);
    for (const Rational& a : phi.exponents) {
        e.t_valuations.push_back(-a);
        sum += a;
    }
    e.u_valuation = -(sum / Rational(2));
    e.central_valuation = (Rational(d_value(phi.g)) - phi.central) / Rational(2);
    return e;
}

// subsets J of {1, ..., g} as bitmasks, bit i-1 <-> index i
inline std::string subset_name(uint32_t subset, int g)
{
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= g; ++i)
        if (subset & (1u << (i - 1))) {
            if (!first)
                s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

// ord xi_J for the spin eigenvalues xi_J = (prod_{i in J} theta_i^{-1}
// prod_{i not in J} theta_i)^{1/2} zeta, from t_i = ord theta_i and z = ord zeta:
// ord xi_J = (-sum_{i in J} t_i + sum_{i not in J} t_i)/2 + z.
inline std::map<uint32_t, Rational> spin_slopes(const std::vector<Rational>& t_display,
                                                const Rational& z)
{
    int g = static_cast<int>(t_display.size());
    if (g < 1)
        throw invalid_input("spin_slopes: need g >= 1 valuations");
    if (g > 16)
        throw budget_error("spin_slopes: 2^g subsets exceed the g <= 16 budget");
    auto t = [&](int i) { return t_display[static_cast<size_t>(g - i)]; }; // subscript access
    std::map<uint32_t, Rational> slopes;
    for (uint32_t subset = 0; subset < (1u << g); ++subset) {
        Rational acc(0);
        for (int i = 1; i <= g; ++i) {
            if (subset & (1u << (i - 1)))
                acc -= t(i);
            else
                acc += t(i);
        }
        slopes[subset] = acc / Rational(2) + z;
    }
    return slopes;
}

struct SlopeSystem {
    int g = 0;
    std::map<uint32_t, Rational> targets; // one per subset, 2^g entries

    SlopeSystem() = default;
    SlopeSystem(int g_, std::map<uint32_t, Rational> s) : g(g_), targets(std::move(s))
    {
        if (g < 1 || g > 16)
            throw invalid_input("SlopeSystem: need 1 <= g <= 16");
        if (targets.size() != (1u << g))
            throw invalid_input("SlopeSystem: need exactly 2^g slope targets");
        for (const auto& [subset, value] : targets)
            if (subset >= (1u << g))
                throw invalid_input("SlopeSystem: subset out of range");
    }
};

// Which displayed equations the solver should invert. Direct: the slopes are
// the ord xi_J themselves. Displayed: the form
// -(y + d + sum_{i in J} x_i - sum_{i not in J} x_i)/2 = s_J, whose sign
// conventions differ from the direct one.
enum class SlopeMode { direct, displayed };

struct SlopeViolation {
    uint32_t subset = 0;
    Rational expected; // target s_J
    Rational actual;   // value under the candidate solution
};

struct SlopeSolution {
    bool consistent = false;
    std::vector<Rational> t_display; // direct: ord theta_i; displayed: the x_i
    Rational z;                      // direct: ord zeta; displayed: the y
    std::vector<SlopeViolation> violations;
};

// Two-stage elimination: singleton-minus-empty differences determine each
// unknown, the empty-set equation the central one; all 2^g equations are then
// re-verified and every violated one reported.
inline SlopeSolution solve_slope_system(const SlopeSystem& sys, SlopeMode mode = SlopeMode::direct)
{
    int g = sys.g;
    auto target = [&](uint32_t subset) { return sys.targets.at(subset); };
    SlopeSolution sol;
    sol.t_display.assign(static_cast<size_t>(g), Rational(0));
    auto set_t = [&](int i, const Rational& v) { sol.t_display[static_cast<size_t>(g - i)] = v; };
    auto get_t = [&](int i) { return sol.t_display[static_cast<size_t>(g - i)]; };

    // In both modes  s_{J u {k}} - s_J = -u_k  for the mode's unknown u_k.
    for (int k = 1; k <= g; ++k)
        set_t(k, target(0) - target(1u << (k - 1)));

    Rational sum_t(0);
    for (int i = 1; i <= g; ++i)
        sum_t += get_t(i);
    if (mode == SlopeMode::direct) {
        // s_empty = (sum t)/2 + z
        sol.z = target(0) - sum_t / Rational(2);
    } else {
        // -(y + d - sum x)/2 = s_empty
        sol.z = sum_t - Rational(d_value(g)) - Rational(2) * target(0);
    }

    for (uint32_t subset = 0; subset < (1u << g); ++subset) {
        Rational actual(0);
        if (mode == SlopeMode::direct) {
            for (int i = 1; i <= g; ++i)
                actual += (subset & (1u << (i - 1))) ? -get_t(i) : get_t(i);
            actual = actual / Rational(2) + sol.z;
        } else {
            Rational signed_sum(0);
            for (int i = 1; i <= g; ++i)
                signed_sum += (subset & (1u << (i - 1))) ? get_t(i) : -get_t(i);
            actual = -(sol.z + Rational(d_value(g)) + signed_sum) / Rational(2);
        }
        if (!(actual == target(subset)))
            sol.violations.push_back({subset, target(subset), actual});
    }
    sol.consistent = sol.violations.empty();
    return sol;
}

// (AO): the valuation of the r-th Hecke eigenvalue equals a_{r+1} + ... + a_g
// for every r (empty sum at r = g).
inline bool ao_predicate(const std::vector<Rational>& valuations, const Weight& lambda)
{
    int g = lambda.g();
    if (valuations.size() != static_cast<size_t>(g))
        throw invalid_input("ao_predicate: need one valuation per r = 1, ..., g");
    for (int r = 1; r <= g; ++r) {
        long long tail = 0;
        for (int i = r + 1; i <= g; ++i)
            tail += lambda.m(i);
        if (!(valuations[static_cast<size_t>(r - 1)] == Rational(tail)))
            return false;
    }
    return true;
}

// Diagonal torus double coset of GSp(2g)(Q_q), recorded by the 2g exponents of
// q on the diagonal: weakly increasing, with e_i + e_{2g+1-i} constant.
struct TorusDoubleCoset {
    int g = 0;
    std::vector<long long> exponents; // length 2g, weakly increasing
    long long similitude = 0;

    static TorusDoubleCoset make(int g, std::vector<long long> exps)
    {
        if (g < 0 || exps.size() != static_cast<size_t>(2 * g))
            throw invalid_input("TorusDoubleCoset: need 2g exponents");
        TorusDoubleCoset c;
        c.g = g;
        c.exponents = std::move(exps);
        for (size_t i = 0; i + 1 < c.exponents.size(); ++i)
            if (c.exponents[i] > c.exponents[i + 1])
                throw invalid_input("TorusDoubleCoset: exponents must be weakly increasing");
        if (g > 0) {
            c.similitude = c.exponents.front() + c.exponents.back();
            for (size_t i = 0; i < c.exponents.size(); ++i)
                if (c.exponents[i] + c.exponents[c.exponents.size() - 1 - i] != c.similitude)
                    throw invalid_input("TorusDoubleCoset: exponents violate the symplectic pairing");
        }
        return c;
    }

    // T_{q,r}: diag(1_r, q 1_{2g-2r}, q^2 1_r)
    static TorusDoubleCoset hecke_tr(int g, int r)
    {
        if (r < 0 || r > g)
            throw invalid_input("TorusDoubleCoset: need 0 <= r <= g");
        std::vector<long long> exps;
        exps.insert(exps.end(), static_cast<size_t>(r), 0);
        exps.insert(exps.end(), static_cast<size_t>(2 * (g - r)), 1);
        exps.insert(exps.end(), static_cast<size_t>(r), 2);
        return make(g, std::move(exps));
    }

    bool is_unit() const
    {
        for (long long e : exponents)
            if (e != 0)
                return false;
        return true;
    }
};

// The stratum restriction phi_{g-r} on diagonal classes:
// [diag(a_r, b_{2g-2r}, c_r)] maps to the genus-(g-r) class [diag(b_{2g-2r})]
// when the a_r block is a unit block, and to zero otherwise.
inline std::optional<TorusDoubleCoset> satake_restrict(const TorusDoubleCoset& c, int r)
{
    if (r < 1 || r > c.g)
        throw invalid_input("satake_restrict: need 1 <= r <= g");
    for (int i = 0; i < r; ++i)
        if (c.exponents[static_cast<size_t>(i)] != 0)
            return std::nullopt; // the class dies on the stratum
    std::vector<long long> middle(c.exponents.begin() + r, c.exponents.end() - r);
    return TorusDoubleCoset::make(c.g - r, std::move(middle));
}

} // namespace siegel
