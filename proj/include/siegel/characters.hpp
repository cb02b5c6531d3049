#pragma once

#include "siegel/bgg_hodge.hpp"
#include "siegel/root_datum.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace siegel {

// Weyl dimension formula for GSp(2g): dim V_lambda = prod_{alpha > 0}
// <lambda + rho, alpha^v> / <rho, alpha^v>.
inline BigInt weyl_dimension(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("weyl_dimension: lambda must be dominant");
    int g = lambda.g();
    HalfWeight shifted = lambda.half() + rho(g);
    BigInt num(1), den(1);
    for (const Root& alpha : positive_roots(g)) {
        num *= BigInt((pairing(shifted, alpha.coweight()) * Rational(2)).to_int64());
        den *= BigInt((pairing(rho(g), alpha.coweight()) * Rational(2)).to_int64());
    }
    BigInt q, r;
    BigInt::divmod(num, den, q, r);
    if (!r.is_zero())
        throw math_error("weyl_dimension: non-integral product");
    return q;
}

// Weyl dimension formula for GL(r) on a weakly decreasing weight
// (m_1 >= ... >= m_r): prod_{i<j} (m_i - m_j + j - i) / (j - i).
inline BigInt gl_dimension(const GLWeight& mu)
{
    if (!mu.is_dominant())
        throw invalid_input("gl_dimension: weight must be weakly decreasing");
    int r = mu.r;
    BigInt num(1), den(1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= BigInt(mu.coords[static_cast<size_t>(i)] - mu.coords[static_cast<size_t>(j)] + j - i);
            den *= BigInt(j - i);
        }
    BigInt q, rem;
    BigInt::divmod(num, den, q, rem);
    if (!rem.is_zero())
        throw math_error("gl_dimension: non-integral product");
    return q;
}

inline BigInt gsp_dimension(const GSpWeight& mu)
{
    if (!mu.is_dominant())
        throw invalid_input("gsp_dimension: weight must be dominant");
    if (mu.h == 0)
        return BigInt(1); // GSp(0) = Gm, every character is one-dimensional
    return weyl_dimension(mu.as_weight());
}

inline BigInt levi_dimension(const KostantStratumEntry& e)
{
    return gl_dimension(e.linear) * gsp_dimension(e.hermitian);
}

namespace detail {

// scalar product of semisimple parts, display-order vectors
inline long long dot(const std::vector<long long>& a, const std::vector<long long>& b)
{
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// dominant representative under the signed-permutation Weyl group: absolute
// values sorted decreasingly
inline std::vector<long long> dominant_rep(std::vector<long long> v)
{
    for (auto& x : v)
        x = x < 0 ? -x : x;
    std::sort(v.begin(), v.end(), std::greater<long long>());
    return v;
}

// lambda - mu as a non-negative integer combination of simple roots?
// For type C_g: c_j = sum_{i >= j} delta_i for j >= 2, c_1 = (sum delta_i)/2.
inline bool in_root_cone(const std::vector<long long>& lambda_disp,
                         const std::vector<long long>& mu_disp)
{
    size_t g = lambda_disp.size();
    long long suffix = 0;
    long long total = 0;
    for (size_t k = 0; k < g; ++k) {
        long long delta = lambda_disp[k] - mu_disp[k];
        suffix += delta;
        total += delta;
        if (k + 1 < g && suffix < 0) // c_j for j = g-k >= 2
            return false;
    }
    return total >= 0 && total % 2 == 0;
}

} // namespace detail

// Weight multiplicities of V_lambda by the Freudenthal recursion, computed on
// dominant weights and spread over Weyl orbits. The central coordinate rides
// along unchanged. Guarded at one million total dimension.
inline std::map<Weight, long long> weight_multiplicities(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("weight_multiplicities: lambda must be dominant");
    BigInt dim = weyl_dimension(lambda);
    if (dim > BigInt(1000000))
        throw budget_error("weight_multiplicities: dim V_lambda exceeds the 10^6 budget");

    int g = lambda.g();
    const std::vector<long long>& top = lambda.coords_display();
    std::vector<Root> pos = positive_roots(g);
    std::vector<long long> rho_disp(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i)
        rho_disp[static_cast<size_t>(i)] = g - i;

    // all dominant candidates below lambda in the root order
    std::vector<std::vector<long long>> dominants;
    std::vector<long long> cur(static_cast<size_t>(g), 0);
    auto rec = [&](auto&& self, size_t pos_idx, long long hi) -> void {
        if (pos_idx == cur.size()) {
            if (detail::in_root_cone(top, cur))
                dominants.push_back(cur);
            return;
        }
        for (long long v = hi; v >= 0; --v) {
            cur[pos_idx] = v;
            self(self, pos_idx + 1, v);
        }
    };
    rec(rec, 0, top.empty() ? 0 : top[0]);

    auto depth = [&](const std::vector<long long>& mu) {
        long long h = 0;
        for (size_t i = 0; i < mu.size(); ++i)
            h += top[i] - mu[i];
        return h;
    };
    std::sort(dominants.begin(), dominants.end(),
              [&](const auto& a, const auto& b) { return depth(a) < depth(b); });

    std::map<std::vector<long long>, long long> mult; // dominant rep -> multiplicity
    auto shifted_norm = [&](const std::vector<long long>& mu) {
        std::vector<long long> s(mu);
        for (size_t i = 0; i < s.size(); ++i)
            s[i] += rho_disp[i];
        return detail::dot(s, s);
    };
    long long lambda_norm = shifted_norm(top);

    for (const auto& mu : dominants) {
        if (mu == top) {
            mult[mu] = 1;
            continue;
        }
        long long denom = lambda_norm - shifted_norm(mu);
        if (denom <= 0)
            continue; // not a weight of V_lambda
        long long acc = 0;
        long long lambda_plain_norm = detail::dot(top, top);
        for (const Root& alpha : pos) {
            std::vector<long long> nu = mu;
            for (;;) {
                for (size_t i = 0; i < nu.size(); ++i)
                    nu[i] += alpha.coords[i];
                // weights of V_lambda lie in the convex hull of W lambda, so
                // |nu|^2 <= |lambda|^2; past the vertex of the convex quadratic
                // k -> |mu + k alpha|^2 nothing further can contribute
                if (detail::dot(nu, nu) > lambda_plain_norm) {
                    if (detail::dot(nu, alpha.coords) > 0)
                        break;
                    continue;
                }
                auto it = mult.find(detail::dominant_rep(nu));
                if (it == mult.end())
                    continue;
                acc += it->second * detail::dot(nu, alpha.coords);
            }
        }
        long long value = 2 * acc / denom;
        if (value * denom != 2 * acc)
            throw math_error("weight_multiplicities: Freudenthal division failed");
        if (value > 0)
            mult[mu] = value;
    }

    // spread over the signed-permutation orbits
    std::map<Weight, long long> out;
    for (const auto& [mu, m] : mult) {
        if (m == 0)
            continue;
        std::vector<long long> sorted = mu;
        std::sort(sorted.begin(), sorted.end());
        do {
            uint32_t nonzero_mask = 0;
            for (size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != 0)
                    nonzero_mask |= 1u << i;
            for (uint32_t flips = 0;; flips = (flips - nonzero_mask) & nonzero_mask) {
                std::vector<long long> v = sorted;
                for (size_t i = 0; i < v.size(); ++i)
                    if (flips & (1u << i))
                        v[i] = -v[i];
                out[Weight(g, v, lambda.central())] = m;
                if (flips == nonzero_mask)
                    break;
            }
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return out;
}

// H-filtration data: bins the weight multiplicities of V_lambda by the value
// mu(H); for an irreducible M-representation the filtration is the trivial
// two-step one.
inline std::map<long long, long long> h_filtration(const Weight& lambda)
{
    std::map<long long, long long> bins;
    for (const auto& [mu, m] : weight_multiplicities(lambda))
        bins[h_pairing(mu).to_int64()] += m;
    return bins;
}

} // namespace siegel
