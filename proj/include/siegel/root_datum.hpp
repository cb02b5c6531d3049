#pragma once

#include "siegel/linalg.hpp"
#include "siegel/weight.hpp"

#include <vector>

namespace siegel {

// Root of GSp(2g) in the coordinates of the identification M ⊂ Z^g x Z:
// semisimple coordinates in display order (coefficient of e_g first),
// central coordinate identically 0. Long roots are the ±2e_i.
struct Root {
    int g = 0;
    std::vector<long long> coords; // display order
    bool long_root = false;
    bool positive = false;
    std::vector<long long> coroot; // display order; = 2 coords / <coords,coords>

    HalfWeight weight() const { return HalfWeight::integral(g, coords, 0); }
    HalfWeight coweight() const { return HalfWeight::integral(g, coroot, 0); }
};

// Based root datum of GSp(2g) or of its dual GSpin(2g+1) (root/coroot swap).
struct RootDatum {
    int g = 0;
    bool dual_side = false; // false: symplectic (type C_g); true: spin (type B_g)
    std::vector<Root> simple;    // ordered alpha_g, ..., alpha_1
    std::vector<Root> positive;  // all positive roots, g^2 of them
    HalfWeight half_sum;         // rho = half-sum of the positive roots
};

namespace detail {

inline std::vector<long long> basis_vector(int g, int i, long long value)
{
    std::vector<long long> v(static_cast<size_t>(g), 0);
    v[static_cast<size_t>(g - i)] = value;
    return v;
}

inline std::vector<long long> coroot_of(const std::vector<long long>& coords)
{
    long long norm = 0;
    for (long long c : coords)
        norm += c * c;
    std::vector<long long> co(coords.size());
    for (size_t i = 0; i < coords.size(); ++i)
        co[i] = 2 * coords[i] / norm; // norm is 2 or 4; exact for type C
    return co;
}

} // namespace detail

// Simple roots alpha_g = e_g - e_{g-1}, ..., alpha_2 = e_2 - e_1, alpha_1 = 2e_1,
// with coroots (1,-1,0,...;0), ..., (0,...,0,1;0).
inline std::vector<Root> simple_roots(int g)
{
    if (g < 1)
        throw invalid_input("simple_roots: g must be >= 1");
    std::vector<Root> roots;
    for (int i = g; i >= 2; --i) {
        Root r;
        r.g = g;
        r.coords = detail::basis_vector(g, i, 1);
        r.coords[static_cast<size_t>(g - (i - 1))] = -1;
        r.long_root = false;
        r.positive = true;
        r.coroot = r.coords;
        roots.push_back(std::move(r));
    }
    Root last;
    last.g = g;
    last.coords = detail::basis_vector(g, 1, 2);
    last.long_root = true;
    last.positive = true;
    last.coroot = detail::basis_vector(g, 1, 1);
    roots.push_back(std::move(last));
    return roots;
}

// All positive roots of type C_g: e_i - e_j and e_i + e_j for i > j, and 2e_i.
inline std::vector<Root> positive_roots(int g)
{
    if (g < 1)
        throw invalid_input("positive_roots: g must be >= 1");
    std::vector<Root> roots;
    for (int i = g; i >= 1; --i)
        for (int j = i - 1; j >= 1; --j) {
            Root r;
            r.g = g;
            r.coords = detail::basis_vector(g, i, 1);
            r.coords[static_cast<size_t>(g - j)] = -1;
            r.positive = true;
            r.coroot = r.coords;
            roots.push_back(r);
            r.coords[static_cast<size_t>(g - j)] = 1;
            r.coroot = r.coords;
            roots.push_back(r);
        }
    for (int i = g; i >= 1; --i) {
        Root r;
        r.g = g;
        r.coords = detail::basis_vector(g, i, 2);
        r.long_root = true;
        r.positive = true;
        r.coroot = detail::basis_vector(g, i, 1);
        roots.push_back(r);
    }
    return roots;
}

inline RootDatum root_datum(int g)
{
    RootDatum rd;
    rd.g = g;
    rd.simple = simple_roots(g);
    rd.positive = positive_roots(g);
    std::vector<long long> two_rho(static_cast<size_t>(g), 0);
    long long two_rho_central = 0;
    for (const Root& r : rd.positive)
        for (size_t i = 0; i < two_rho.size(); ++i)
            two_rho[i] += r.coords[i];
    rd.half_sum = HalfWeight(g, std::move(two_rho), two_rho_central);
    return rd;
}

// Langlands duality at the level of based root data: exchange (M,R,Delta)
// with (M*,R^v,Delta^v). Applying it twice restores the datum coordinate-wise.
inline RootDatum dual_root_datum(const RootDatum& rd)
{
    RootDatum dual;
    dual.g = rd.g;
    dual.dual_side = !rd.dual_side;
    auto swap_root = [](const Root& r) {
        Root s;
        s.g = r.g;
        s.coords = r.coroot;
        s.coroot = r.coords;
        s.positive = r.positive;
        long long norm = 0;
        for (long long c : s.coords)
            norm += c * c;
        s.long_root = norm == 4;
        return s;
    };
    for (const Root& r : rd.simple)
        dual.simple.push_back(swap_root(r));
    for (const Root& r : rd.positive)
        dual.positive.push_back(swap_root(r));
    std::vector<long long> two_rho(static_cast<size_t>(rd.g), 0);
    for (const Root& r : dual.positive)
        for (size_t i = 0; i < two_rho.size(); ++i)
            two_rho[i] += r.coords[i];
    dual.half_sum = HalfWeight(rd.g, std::move(two_rho), 0);
    return dual;
}

// Pairing <mu, alpha^v> via the standard scalar product on Z^g x Z.
inline Rational pairing(const HalfWeight& mu, const HalfWeight& coweight)
{
    if (mu.g() != coweight.g())
        throw invalid_input("pairing: mixing different genera");
    long long four_times = 0;
    for (int i = 1; i <= mu.g(); ++i)
        four_times += mu.two_m(i) * coweight.two_m(i);
    four_times += mu.two_central() * coweight.two_central();
    return Rational(four_times, 4);
}

// Cartan matrix A_ij = <alpha_i, alpha_j^v> in the simple-root order of the
// datum; equals the type C_g (resp. B_g) Cartan matrix.
inline ZMat cartan_matrix(const RootDatum& rd)
{
    size_t n = rd.simple.size();
    ZMat a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = pairing(rd.simple[i].weight(), rd.simple[j].coweight());
            a(i, j) = BigInt(v.to_int64());
        }
    return a;
}

inline long long d_value(int g) { return static_cast<long long>(g) * (g + 1) / 2; }

// rho = (g, g-1, ..., 1; 0). It lives in the half-integer lattice: as a
// character it violates parity whenever d = g(g+1)/2 is odd; downstream
// formulas only ever use it inside sums or differences.
inline HalfWeight rho(int g)
{
    if (g < 1)
        throw invalid_input("rho: g must be >= 1");
    std::vector<long long> coords(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i)
        coords[static_cast<size_t>(i)] = g - i;
    return HalfWeight::integral(g, coords, 0);
}

// rho~ = (g, ..., 1; d): same semisimple part, central parameter d. This one
// is a genuine character (parity holds since g + ... + 1 = d).
inline Weight rho_tilde(int g)
{
    std::vector<long long> coords(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i)
        coords[static_cast<size_t>(i)] = g - i;
    return Weight(g, std::move(coords), d_value(g));
}

// Dual weight: (a_g, ..., a_1; c) -> (a_g, ..., a_1; -c).
inline Weight dual_weight(const Weight& w)
{
    return Weight(w.g(), w.coords_display(), -w.central());
}

// Motivic weight w = |lambda + rho| = sum (a_i + i) = |lambda| + d.
inline long long motivic_weight(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("motivic_weight: weight is not dominant: " + lambda.to_string());
    return lambda.semisimple_sum() + d_value(lambda.g());
}

inline bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

// Strict p-smallness: p - 1 > |lambda + rho|.
inline bool is_p_small(const Weight& lambda, long long p)
{
    if (!is_prime(p))
        throw invalid_input("is_p_small: p must be prime");
    if (p == 2)
        throw invalid_input("is_p_small: p = 2 is excluded");
    return p - 1 > motivic_weight(lambda);
}

// Auxiliary gate next to p-smallness: the modular-representation machinery
// breaks down at p = 5, so the bound is strict.
inline bool p_greater_than_5(long long p) { return p > 5; }

// The looser admissible-lattice bound a_g + a_{g-1} + g + (g-1) < p; for
// g = 1 it degenerates to a_1 + 1 < p.
inline bool satisfies_lattice_bound(const Weight& lambda, long long p)
{
    int g = lambda.g();
    long long top = lambda.m(g) + g;
    long long second = g >= 2 ? lambda.m(g - 1) + (g - 1) : 0;
    return top + second < p;
}

// mu(H) for H = diag(0,...,0,-1,...,-1): (sum of semisimple coords - central)/2.
// A half-integer in general; integral on parity-satisfying characters.
inline Rational h_pairing(const HalfWeight& mu)
{
    return Rational(mu.two_semisimple_sum() - mu.two_central(), 4);
}
inline Rational h_pairing(const Weight& mu) { return h_pairing(mu.half()); }

// The minuscule weight of GSpin(2g+1), coordinates (1/2, ..., 1/2; 1/2).
inline HalfWeight spin_minuscule_weight(int g)
{
    if (g < 1)
        throw invalid_input("spin_minuscule_weight: g must be >= 1");
    std::vector<long long> doubled(static_cast<size_t>(g), 1);
    return HalfWeight(g, std::move(doubled), 1);
}

// Minuscule pairing: minuscule o mu = |mu_ss|/2 + mu_c/2,
// an integer whenever mu satisfies parity.
inline Rational minuscule_pairing(const HalfWeight& mu)
{
    return Rational(mu.two_semisimple_sum() + mu.two_central(), 4);
}
inline Rational minuscule_pairing(const Weight& mu) { return minuscule_pairing(mu.half()); }

} // namespace siegel
