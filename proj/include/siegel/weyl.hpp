#pragma once

#include "siegel/root_datum.hpp"
#include "siegel/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace siegel {

// Signed permutation (sigma, eps) in W_G = S_g x| {±1}^g, acting on a weight
// by permuting the g semisimple coordinates and flipping signs; the central
// coordinate is fixed (w_B(t; nu) = (t_B^{-1}, t_Bbar; nu)).
//
// Convention: e_i maps to eps_{sigma(i)} e_{sigma(i)}; composition is
// right-to-left on weights, (v*w)(mu) = v(w(mu)).
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity(int g)
    {
        WeylElement w;
        w.g_ = g;
        w.perm_.resize(static_cast<size_t>(g));
        w.signs_.assign(static_cast<size_t>(g), 1);
        for (int i = 1; i <= g; ++i)
            w.perm_[static_cast<size_t>(i - 1)] = i;
        return w;
    }

    static WeylElement from_parts(std::vector<int> perm, std::vector<int> signs)
    {
        WeylElement w;
        w.g_ = static_cast<int>(perm.size());
        w.perm_ = std::move(perm);
        w.signs_ = std::move(signs);
        if (w.signs_.size() != w.perm_.size())
            throw invalid_input("WeylElement: perm/sign size mismatch");
        std::vector<bool> seen(w.perm_.size(), false);
        for (int p : w.perm_) {
            if (p < 1 || p > w.g_ || seen[static_cast<size_t>(p - 1)])
                throw invalid_input("WeylElement: not a permutation");
            seen[static_cast<size_t>(p - 1)] = true;
        }
        for (int s : w.signs_)
            if (s != 1 && s != -1)
                throw invalid_input("WeylElement: signs must be ±1");
        return w;
    }

    // w_B: flips exactly the coordinates with index in B (bitmask, bit i-1 <-> index i).
    static WeylElement sign_flip(int g, uint32_t subset)
    {
        WeylElement w = identity(g);
        for (int i = 1; i <= g; ++i)
            if (subset & (1u << (i - 1)))
                w.signs_[static_cast<size_t>(i - 1)] = -1;
        return w;
    }

    // w_0 = -id, the unique longest element (length g^2).
    static WeylElement longest(int g)
    {
        return sign_flip(g, (1u << g) - 1);
    }

    int g() const { return g_; }
    int sigma(int i) const { return perm_[static_cast<size_t>(i - 1)]; }      // image of index i
    int sign_at(int k) const { return signs_[static_cast<size_t>(k - 1)]; }   // sign on target index k

    bool is_identity() const
    {
        for (int i = 1; i <= g_; ++i)
            if (sigma(i) != i || sign_at(i) != 1)
                return false;
        return true;
    }

    HalfWeight act(const HalfWeight& mu) const
    {
        if (mu.g() != g_)
            throw invalid_input("WeylElement: genus mismatch in action");
        HalfWeight out = mu;
        for (int i = 1; i <= g_; ++i) {
            int k = sigma(i);
            out.two_m(k) = sign_at(k) * mu.two_m(i);
        }
        return out;
    }

    Weight act(const Weight& mu) const { return Weight::from_half(act(mu.half())); }

    // this∘other: other acts first.
    WeylElement compose(const WeylElement& other) const
    {
        if (other.g_ != g_)
            throw invalid_input("WeylElement: genus mismatch in composition");
        WeylElement r = identity(g_);
        for (int i = 1; i <= g_; ++i) {
            int k = sigma(other.sigma(i));
            r.perm_[static_cast<size_t>(i - 1)] = k;
            r.signs_[static_cast<size_t>(k - 1)] = sign_at(k) * other.sign_at(other.sigma(i));
        }
        return r;
    }

    WeylElement inverse() const
    {
        WeylElement r = identity(g_);
        for (int i = 1; i <= g_; ++i) {
            int k = sigma(i);
            r.perm_[static_cast<size_t>(k - 1)] = i;
            r.signs_[static_cast<size_t>(i - 1)] = sign_at(k);
        }
        return r;
    }

    // Identity on indices > h and sign-free there: lies in the embedded W_{G_h}.
    bool supported_below(int h) const
    {
        for (int i = h + 1; i <= g_; ++i)
            if (sigma(i) != i || sign_at(i) != 1)
                return false;
        return true;
    }

    bool has_sign_flip() const
    {
        for (int s : signs_)
            if (s == -1)
                return true;
        return false;
    }

    uint64_t encode() const
    {
        uint64_t key = 0;
        for (int i = 1; i <= g_; ++i) {
            key = key * 16 + static_cast<uint64_t>(sigma(i));
            key = key * 2 + (sign_at(i) == -1 ? 1 : 0);
        }
        return key;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b)
    {
        return a.g_ == b.g_ && a.perm_ == b.perm_ && a.signs_ == b.signs_;
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b)
    {
        return a.encode() < b.encode();
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (int i = 1; i <= g_; ++i) {
            if (i > 1)
                s += " ";
            s += std::to_string(i) + "->" + (sign_at(sigma(i)) == -1 ? "-" : "")
                 + std::to_string(sigma(i));
        }
        return s + "]";
    }

private:
    int g_ = 0;
    std::vector<int> perm_;  // perm_[i-1] = sigma(i)
    std::vector<int> signs_; // signs_[k-1] = eps_k, applied at target index k
};

// Embed an element of W_{G_h} into W_G, acting on indices 1..h.
inline WeylElement embed_weyl(const WeylElement& small, int g)
{
    int h = small.g();
    if (h > g)
        throw invalid_input("embed_weyl: cannot embed into smaller genus");
    std::vector<int> perm(static_cast<size_t>(g));
    std::vector<int> signs(static_cast<size_t>(g), 1);
    for (int i = 1; i <= h; ++i) {
        perm[static_cast<size_t>(i - 1)] = small.sigma(i);
        signs[static_cast<size_t>(i - 1)] = small.sign_at(i);
    }
    for (int i = h + 1; i <= g; ++i)
        perm[static_cast<size_t>(i - 1)] = i;
    return WeylElement::from_parts(std::move(perm), std::move(signs));
}

// All 2^g g! elements. Guarded: beyond g = 8 the group is out of desk scale.
inline std::vector<WeylElement> enumerate_weyl(int g)
{
    if (g < 1)
        throw invalid_input("enumerate_weyl: g must be >= 1");
    if (g > 8)
        throw budget_error("enumerate_weyl: 2^g g! elements exceed the g <= 8 budget");
    std::vector<int> perm(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i)
        perm[static_cast<size_t>(i)] = i + 1;
    std::vector<WeylElement> all;
    do {
        for (uint32_t mask = 0; mask < (1u << g); ++mask) {
            std::vector<int> signs(static_cast<size_t>(g), 1);
            for (int i = 0; i < g; ++i)
                if (mask & (1u << i))
                    signs[static_cast<size_t>(i)] = -1;
            all.push_back(WeylElement::from_parts(perm, std::move(signs)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace detail {

// A type-C root vector is negative iff its highest-index nonzero coordinate is.
inline bool root_is_negative(const HalfWeight& image)
{
    for (int i = image.g(); i >= 1; --i) {
        if (image.two_m(i) > 0)
            return false;
        if (image.two_m(i) < 0)
            return true;
    }
    throw math_error("root_is_negative: zero vector is not a root");
}

} // namespace detail

// l(w) = #{alpha in Phi+ : w(alpha) in Phi-}.
inline int weyl_length(const WeylElement& w)
{
    int count = 0;
    for (const Root& r : positive_roots(w.g()))
        if (detail::root_is_negative(w.act(r.weight())))
            ++count;
    return count;
}

// Parabolic descriptor: the maximal parabolic P_r (Levi GL(r) x GSp(2g-2r)),
// attached to the simple root alpha_{g-r+1}. The Siegel parabolic is P_g.
struct Parabolic {
    int r = 0;

    static Parabolic siegel(int g) { return Parabolic{g}; }
    static Parabolic maximal(int r) { return Parabolic{r}; }
};

// Membership in W_{M_r}: permutes {1..g-r} and {g-r+1..g} separately and
// carries no sign flip on the GL(r) block {g-r+1..g}.
inline bool in_levi_weyl(const WeylElement& w, const Parabolic& p)
{
    int g = w.g();
    int cut = g - p.r;
    for (int i = 1; i <= g; ++i) {
        bool low = i <= cut, low_image = w.sigma(i) <= cut;
        if (low != low_image)
            return false;
        if (!low && w.sign_at(w.sigma(i)) == -1)
            return false;
    }
    return true;
}

struct CosetTable {
    int g = 0;
    Parabolic parabolic;
    std::vector<WeylElement> reps; // minimal-length representatives, sorted by (length, encoding)
    std::vector<int> lengths;      // lengths[i] = l(reps[i])
};

inline std::vector<WeylElement> levi_weyl_elements(int g, const Parabolic& p)
{
    std::vector<WeylElement> levi;
    for (const WeylElement& w : enumerate_weyl(g))
        if (in_levi_weyl(w, p))
            levi.push_back(w);
    return levi;
}

// Complete invariant of the right coset W_{M_r} w: which source indices land
// in the GL block and with which sign. Left multiplication by W_{M_r}
// permutes the GL block sign-free and the GSp block with arbitrary signs.
inline uint64_t coset_key(const WeylElement& w, const Parabolic& p)
{
    int cut = w.g() - p.r;
    uint64_t key = 0;
    for (int i = 1; i <= w.g(); ++i) {
        int code = 0;
        if (w.sigma(i) > cut)
            code = w.sign_at(w.sigma(i)) == 1 ? 1 : 2;
        key = key * 3 + static_cast<uint64_t>(code);
    }
    return key;
}

// Kostant representatives of W_{M_r} \ W_G by exhaustive scan: in each right
// coset, the unique element of minimal length. Uniqueness is asserted.
inline CosetTable kostant_reps(int g, const Parabolic& p)
{
    if (p.r < 1 || p.r > g)
        throw invalid_input("kostant_reps: parabolic P_r needs 1 <= r <= g");
    if (g > 6)
        throw budget_error("kostant_reps: coset scan restricted to g <= 6");

    std::map<uint64_t, std::pair<WeylElement, int>> best; // coset key -> (rep, length)
    std::map<uint64_t, int> best_count;
    for (const WeylElement& w : enumerate_weyl(g)) {
        uint64_t key = coset_key(w, p);
        int len = weyl_length(w);
        auto it = best.find(key);
        if (it == best.end() || len < it->second.second) {
            best[key] = {w, len};
            best_count[key] = 1;
        } else if (len == it->second.second) {
            ++best_count[key];
        }
    }
    for (const auto& [key, count] : best_count)
        if (count != 1)
            throw math_error("kostant_reps: minimal length is not unique in a coset");

    CosetTable table;
    table.g = g;
    table.parabolic = p;
    std::vector<std::pair<int, WeylElement>> sorted;
    for (const auto& [key, rep] : best)
        sorted.emplace_back(rep.second, rep.first);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second < b.second;
    });
    for (auto& [len, w] : sorted) {
        table.reps.push_back(w);
        table.lengths.push_back(len);
    }
    return table;
}

// Orbit of the minuscule weight under W' = {±1}^g: the 2^g spin weights
// pi-hat^{w_B}, indexed by the flipped subset B.
inline std::vector<std::pair<uint32_t, HalfWeight>> spin_weight_orbit(int g)
{
    HalfWeight pihat = spin_minuscule_weight(g);
    std::vector<std::pair<uint32_t, HalfWeight>> orbit;
    for (uint32_t subset = 0; subset < (1u << g); ++subset)
        orbit.emplace_back(subset, WeylElement::sign_flip(g, subset).act(pihat));
    return orbit;
}

// Dot action w·lambda = w(lambda + rho) - rho. The result is again a valid
// character: sign flips change the semisimple sum by even amounts.
inline Weight dot_action(const WeylElement& w, const Weight& lambda)
{
    HalfWeight r = rho(lambda.g());
    return Weight::from_half(w.act(lambda.half() + r) - r);
}

// Half-sum of the positive roots of the embedded G_h (acting on indices 1..h),
// written in genus-g coordinates.
inline HalfWeight embedded_rho(int g, int h)
{
    std::vector<long long> coords(static_cast<size_t>(g), 0);
    for (int i = 1; i <= h; ++i)
        coords[static_cast<size_t>(g - i)] = i;
    return HalfWeight::integral(g, coords, 0);
}

// Iterated dot action of a chain (w_0, ..., w_{k-1}): step r uses the rho of
// the nested subgroup G_{g-r}, in which w_r must live. An empty chain is the
// identity; a single element is the plain dot action.
inline Weight iterated_dot(const Weight& lambda, const std::vector<WeylElement>& chain)
{
    int g = lambda.g();
    HalfWeight x = lambda.half();
    for (size_t r = 0; r < chain.size(); ++r) {
        if (chain[r].g() != g)
            throw invalid_input("iterated_dot: chain elements must live in genus g");
        int h = g - static_cast<int>(r);
        if (h < 0 || !chain[r].supported_below(h))
            throw invalid_input("iterated_dot: chain element " + std::to_string(r)
                                + " is not in the embedded W_{G_" + std::to_string(h) + "}");
        HalfWeight rho_r = embedded_rho(g, h);
        x = chain[r].act(x + rho_r) - rho_r;
    }
    return Weight::from_half(x);
}

} // namespace siegel
