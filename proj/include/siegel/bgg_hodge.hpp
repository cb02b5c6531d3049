#pragma once

#include "siegel/root_datum.hpp"
#include "siegel/weyl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace siegel {

// Hodge jump p(w) = -(w(lambda+rho) - rho)(H), a non-negative integer for
// dominant lambda. Computed as a difference of H-pairings so the half-integer
// rho(H) cancels.
inline long long hodge_jump(const WeylElement& w, const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("hodge_jump: lambda must be dominant");
    HalfWeight shifted = lambda.half() + rho(lambda.g());
    Rational p = h_pairing(rho(lambda.g())) - h_pairing(w.act(shifted));
    long long value = p.to_int64();
    // under the standing convention c = sum a_i the jump is j_B >= 0; other
    // central twists shift it by (c - |lambda|)/2
    if (lambda.central() == lambda.semisimple_sum() && value < 0)
        throw math_error("hodge_jump: negative jump under the standing central convention");
    return value;
}

// j_B = sum_{i in B} (a_i + i) for B a subset of {1, ..., g} (bitmask).
inline long long hodge_weight_jb(const Weight& lambda, uint32_t subset)
{
    long long j = 0;
    for (int i = 1; i <= lambda.g(); ++i)
        if (subset & (1u << (i - 1)))
            j += lambda.m(i) + i;
    return j;
}

// The 2^g Hodge-Tate weights {j_B : B subset of A}, sorted with multiplicity.
// From g = 3 on they need not be distinct.
inline std::vector<long long> hodge_weights(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("hodge_weights: lambda must be dominant");
    std::vector<long long> js;
    for (uint32_t b = 0; b < (1u << lambda.g()); ++b)
        js.push_back(hodge_weight_jb(lambda, b));
    std::sort(js.begin(), js.end());
    return js;
}

struct BGGEntry {
    WeylElement w;
    int length = 0;
    Weight weight;   // w(lambda+rho) - rho
    long long jump = 0; // p(w)
};

// The full list of graded pieces of the BGG complex for (g, lambda), plus the
// per-degree realizable jump sets used in the vanishing argument.
struct BGGDescriptor {
    int g = 0;
    Weight lambda;
    long long motivic = 0;
    long long p = 0;       // 0 when no prime was supplied
    bool p_small = true;   // warning flag; the combinatorics is characteristic-free
    std::vector<BGGEntry> entries; // 2^g of them, sorted by (length, jump)
    std::vector<std::vector<long long>> jumps_by_degree; // degree j -> sorted distinct {p(w): l(w) <= j}
};

inline BGGDescriptor bgg_complex(const Weight& lambda, long long p = 0)
{
    if (!lambda.is_dominant())
        throw invalid_input("bgg_complex: lambda must be dominant");
    int g = lambda.g();
    long long d = d_value(g);
    BGGDescriptor out;
    out.g = g;
    out.lambda = lambda;
    out.motivic = motivic_weight(lambda);
    out.p = p;
    out.p_small = p == 0 ? true : is_p_small(lambda, p);

    CosetTable table = kostant_reps(g, Parabolic::siegel(g));
    for (size_t i = 0; i < table.reps.size(); ++i) {
        BGGEntry e;
        e.w = table.reps[i];
        e.length = table.lengths[i];
        e.weight = dot_action(e.w, lambda);
        e.jump = hodge_jump(e.w, lambda);
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const BGGEntry& a, const BGGEntry& b) {
        if (a.length != b.length)
            return a.length < b.length;
        if (a.jump != b.jump)
            return a.jump < b.jump;
        return a.w < b.w;
    });

    if (out.entries.size() != (1u << g))
        throw math_error("bgg_complex: expected 2^g Kostant representatives");
    int count_top = 0;
    for (const BGGEntry& e : out.entries) {
        if (e.length < 0 || e.length > d)
            throw math_error("bgg_complex: length outside [0, d]");
        if (e.length == d)
            ++count_top;
    }
    if (count_top != 1)
        throw math_error("bgg_complex: the length-d representative is not unique");

    for (long long j = 0; j <= d; ++j) {
        std::set<long long> jumps;
        for (const BGGEntry& e : out.entries)
            if (e.length <= j)
                jumps.insert(e.jump);
        // key vanishing ingredient: below the middle degree the maximal
        // weight never occurs
        if (j < d && jumps.count(out.motivic))
            throw math_error("bgg_complex: maximal weight occurs below middle degree");
        out.jumps_by_degree.emplace_back(jumps.begin(), jumps.end());
    }
    return out;
}

// The two nonvanishing coherent-cohomology spots: (lambda, d) and (w'·lambda, 0)
// for w' the unique length-d Kostant representative.
struct CoherentDegrees {
    Weight weight_top;    // lambda
    long long degree_top; // d
    Weight weight_bottom; // w'·lambda
    long long degree_bottom = 0;
    long long jump_of_top_rep = 0; // p(w') = motivic weight
};

inline CoherentDegrees coherent_degrees(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw invalid_input("coherent_degrees: lambda must be dominant");
    int g = lambda.g();
    long long d = d_value(g);
    CosetTable table = kostant_reps(g, Parabolic::siegel(g));
    std::optional<WeylElement> top;
    for (size_t i = 0; i < table.reps.size(); ++i)
        if (table.lengths[i] == d)
            top = table.reps[i];
    if (!top)
        throw math_error("coherent_degrees: no length-d representative found");
    CoherentDegrees out;
    out.weight_top = lambda;
    out.degree_top = d;
    out.weight_bottom = dot_action(*top, lambda);
    out.degree_bottom = 0;
    out.jump_of_top_rep = hodge_jump(*top, lambda);
    return out;
}

// Weight of GL(r) in the coordinates (m_g, ..., m_{g-r+1}) of the linear
// torus T_l; dominance is m_g >= ... >= m_{g-r+1}.
struct GLWeight {
    int r = 0;
    std::vector<long long> coords; // display order, length r

    bool is_dominant() const
    {
        for (size_t i = 0; i + 1 < coords.size(); ++i)
            if (coords[i] < coords[i + 1])
                return false;
        return true;
    }
    std::string to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

// Weight of GSp(2h) with h = 0 allowed (GSp(0) = Gm keeps only the central
// coordinate).
struct GSpWeight {
    int h = 0;
    std::vector<long long> coords; // display order, length h
    long long central = 0;

    bool is_dominant() const
    {
        for (size_t i = 0; i + 1 < coords.size(); ++i)
            if (coords[i] < coords[i + 1])
                return false;
        return coords.empty() || coords.back() >= 0;
    }
    Weight as_weight() const
    {
        if (h < 1)
            throw invalid_input("GSpWeight: genus-0 weight has no Weight form");
        return Weight(h, coords, central);
    }
    std::string to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ";" + std::to_string(central) + ")";
    }
};

// Restriction of a genus-g character to T_l x T_h per the torus split of the
// Levi M_r = GL(r) x GSp(2g-2r): the linear factor reads off the top r
// coordinates; the hermitian factor keeps the rest, absorbing into its central
// coordinate the part of the nu-power carried by the dropped ones.
inline std::pair<GLWeight, GSpWeight> split_levi_weight(const Weight& mu, int r)
{
    int g = mu.g();
    if (r < 1 || r > g)
        throw invalid_input("split_levi_weight: need 1 <= r <= g");
    GLWeight lin;
    lin.r = r;
    long long dropped = 0;
    for (int i = g; i > g - r; --i) {
        lin.coords.push_back(mu.m(i));
        dropped += mu.m(i);
    }
    GSpWeight herm;
    herm.h = g - r;
    for (int i = g - r; i >= 1; --i)
        herm.coords.push_back(mu.m(i));
    herm.central = mu.central() - dropped;
    return {std::move(lin), std::move(herm)};
}

struct KostantStratumEntry {
    WeylElement w;        // w'' in W^{P_r}
    int length = 0;       // = cohomology degree q
    Weight full_weight;   // w''(lambda+rho) - rho, genus-g coordinates
    GLWeight linear;      // restriction to T_l
    GSpWeight hermitian;  // restriction to T_h
};

// Kostant decomposition of the stratum restriction: per degree q, the
// M_r-modules V_{M_r, w''(lambda+rho)-rho} over the w'' of length q.
struct KostantStratumDecomposition {
    int g = 0;
    int r = 0;
    Weight lambda;
    long long p = 0;
    bool p_small = true;
    std::vector<KostantStratumEntry> entries; // sorted by (length, encoding)
};

inline KostantStratumDecomposition kostant_mod_p(const Weight& lambda, int r, long long p = 0)
{
    if (!lambda.is_dominant())
        throw invalid_input("kostant_mod_p: lambda must be dominant");
    int g = lambda.g();
    if (r < 1 || r > g)
        throw invalid_input("kostant_mod_p: need 1 <= r <= g");
    KostantStratumDecomposition out;
    out.g = g;
    out.r = r;
    out.lambda = lambda;
    out.p = p;
    out.p_small = p == 0 ? true : is_p_small(lambda, p);

    CosetTable table = kostant_reps(g, Parabolic::maximal(r));
    for (size_t i = 0; i < table.reps.size(); ++i) {
        KostantStratumEntry e;
        e.w = table.reps[i];
        e.length = table.lengths[i];
        e.full_weight = dot_action(e.w, lambda);
        auto [lin, herm] = split_levi_weight(e.full_weight, r);
        if (!lin.is_dominant() || !herm.is_dominant())
            throw math_error("kostant_mod_p: Levi factor of " + e.full_weight.to_string()
                             + " is not dominant");
        e.linear = std::move(lin);
        e.hermitian = std::move(herm);
        out.entries.push_back(std::move(e));
    }
    return out;
}

// One stratum datum of a claim check: the jump values realizable over the
// scan, and whether 0 and the motivic weight both occur.
struct ClaimStratumReport {
    std::string datum;          // the fixed w'' (or chain of w''s)
    std::set<long long> jumps;  // {p(w' o w'')} over the scanned w'
    bool has_zero = false;
    bool has_top = false;
};

struct ClaimReport {
    int g = 0;
    Weight lambda;
    long long motivic = 0;
    bool pass = true; // no stratum attains both 0 and the motivic weight
    std::vector<ClaimStratumReport> strata;
};

namespace detail {

inline std::vector<WeylElement> siegel_kostant_embedded(int g, int h)
{
    if (h == 0)
        return {WeylElement::identity(g)};
    std::vector<WeylElement> out;
    for (const WeylElement& w : kostant_reps(h, Parabolic::siegel(h)).reps)
        out.push_back(embed_weyl(w, g));
    return out;
}

inline std::vector<WeylElement> stratum_kostant_embedded(int g, int h, int r)
{
    std::vector<WeylElement> out;
    for (const WeylElement& w : kostant_reps(h, Parabolic::maximal(r)).reps)
        out.push_back(embed_weyl(w, g));
    return out;
}

inline void finish_stratum(ClaimReport& report, ClaimStratumReport stratum)
{
    stratum.has_zero = stratum.jumps.count(0) > 0;
    stratum.has_top = stratum.jumps.count(report.motivic) > 0;
    if (stratum.has_zero && stratum.has_top)
        report.pass = false; // counterexample; reported, not thrown
    report.strata.push_back(std::move(stratum));
}

} // namespace detail

// Boundary-stratum weight claim: for each w'' in W^{P_r}, the function
// w' |-> p(w' o w'') over the embedded Siegel-Kostant representatives of
// GSp(2g-2r) never attains both 0 and the motivic weight.
inline ClaimReport claim84_check(const Weight& lambda, int r)
{
    if (!lambda.is_dominant())
        throw invalid_input("claim84_check: lambda must be dominant");
    int g = lambda.g();
    if (r < 1 || r > g)
        throw invalid_input("claim84_check: need 1 <= r <= g");
    ClaimReport report;
    report.g = g;
    report.lambda = lambda;
    report.motivic = motivic_weight(lambda);

    std::vector<WeylElement> scans = detail::siegel_kostant_embedded(g, g - r);
    for (const WeylElement& wpp : kostant_reps(g, Parabolic::maximal(r)).reps) {
        ClaimStratumReport stratum;
        stratum.datum = wpp.to_string();
        for (const WeylElement& wp : scans)
            stratum.jumps.insert(hodge_jump(wp.compose(wpp), lambda));
        detail::finish_stratum(report, std::move(stratum));
    }
    return report;
}

// Iterated variant: strata chains (r_1, ..., r_s) with fixed stratum data
// (w''_1, ..., w''_s) and the scan running over the interleaved embedded
// Siegel-Kostant elements, via composites w'_s o w''_s o ... o w'_1 o w''_1.
inline ClaimReport claim87_check(const Weight& lambda, int chain_depth)
{
    if (!lambda.is_dominant())
        throw invalid_input("claim87_check: lambda must be dominant");
    int g = lambda.g();
    if (chain_depth < 1 || chain_depth > g)
        throw invalid_input("claim87_check: need 1 <= chain_depth <= g");
    ClaimReport report;
    report.g = g;
    report.lambda = lambda;
    report.motivic = motivic_weight(lambda);

    // enumerate stratum chains (r_1, ..., r_s), r_i >= 1, sum <= g
    std::vector<std::vector<int>> r_chains;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int used) -> void {
        if (static_cast<int>(cur.size()) == chain_depth) {
            r_chains.push_back(cur);
            return;
        }
        for (int r = 1; used + r <= g; ++r) {
            cur.push_back(r);
            self(self, used + r);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    for (const std::vector<int>& rs : r_chains) {
        // stratum data: per level i, a Kostant representative of P_{r_i} in
        // the current genus-h_{i-1} group
        std::vector<std::vector<WeylElement>> stratum_choices;
        std::vector<std::vector<WeylElement>> scan_choices;
        int h = g;
        for (int r : rs) {
            stratum_choices.push_back(detail::stratum_kostant_embedded(g, h, r));
            h -= r;
            scan_choices.push_back(detail::siegel_kostant_embedded(g, h));
        }

        std::vector<size_t> datum_idx(rs.size(), 0);
        auto advance = [](std::vector<size_t>& idx, const std::vector<std::vector<WeylElement>>& pools) {
            for (size_t i = 0; i < idx.size(); ++i) {
                if (++idx[i] < pools[i].size())
                    return true;
                idx[i] = 0;
            }
            return false;
        };
        do {
            ClaimStratumReport stratum;
            stratum.datum = "r=(";
            for (size_t i = 0; i < rs.size(); ++i)
                stratum.datum += (i ? "," : "") + std::to_string(rs[i]);
            stratum.datum += ") ";
            for (size_t i = 0; i < rs.size(); ++i)
                stratum.datum += stratum_choices[i][datum_idx[i]].to_string();

            std::vector<size_t> scan_idx(rs.size(), 0);
            do {
                WeylElement w = WeylElement::identity(g);
                for (size_t i = 0; i < rs.size(); ++i) {
                    w = stratum_choices[i][datum_idx[i]].compose(w);
                    w = scan_choices[i][scan_idx[i]].compose(w);
                }
                stratum.jumps.insert(hodge_jump(w, lambda));
            } while (advance(scan_idx, scan_choices));
            detail::finish_stratum(report, std::move(stratum));
        } while (advance(datum_idx, stratum_choices));
    }
    return report;
}

// Dimensions of the minimal-compactification strata: [d_0, ..., d_g] with
// d_r = (g-r)(g-r+1)/2.
inline std::vector<long long> strata_dims(int g)
{
    if (g < 1)
        throw invalid_input("strata_dims: g must be >= 1");
    std::vector<long long> dims;
    for (int r = 0; r <= g; ++r)
        dims.push_back(d_value(g - r));
    return dims;
}

} // namespace siegel
