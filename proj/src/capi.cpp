#include "siegel/capi.h"

#include "siegel/acceptance.hpp"
#include "siegel/bgg_hodge.hpp"
#include "siegel/characters.hpp"
#include "siegel/hecke_params.hpp"
#include "siegel/weyl_modules.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace siegel;

namespace {

thread_local std::string g_last_error;

template <typename Fn>
sgl_status wrap(Fn&& fn)
{
    try {
        fn();
        return SGL_OK;
    } catch (const invalid_input& e) {
        g_last_error = e.what();
        return SGL_ERR_INVALID;
    } catch (const budget_error& e) {
        g_last_error = e.what();
        return SGL_ERR_BUDGET;
    } catch (const math_error& e) {
        g_last_error = e.what();
        return SGL_ERR_MATH;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SGL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const json& j)
{
    *out = dup_string(j.dump());
}

json weight_json(const Weight& w)
{
    json j;
    j["coords"] = w.coords_display();
    j["c"] = w.central();
    return j;
}

json gl_weight_json(const GLWeight& w)
{
    json j;
    j["coords"] = w.coords;
    return j;
}

json gsp_weight_json(const GSpWeight& w)
{
    json j;
    j["coords"] = w.coords;
    j["c"] = w.central;
    j["genus"] = w.h;
    return j;
}

json weyl_element_json(const WeylElement& w)
{
    std::vector<int> perm, signs;
    for (int i = 1; i <= w.g(); ++i) {
        perm.push_back(w.sigma(i));
        signs.push_back(w.sign_at(i));
    }
    json j;
    j["perm"] = perm;
    j["signs"] = signs;
    return j;
}

std::vector<Rational> parse_rational_csv(const std::string& csv)
{
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw invalid_input("empty entry in rational list '" + csv + "'");
        out.push_back(Rational::from_string(item));
    }
    if (out.empty())
        throw invalid_input("empty rational list");
    return out;
}

std::vector<long long> parse_int_csv(const std::string& csv)
{
    std::vector<long long> out;
    for (const Rational& r : parse_rational_csv(csv))
        out.push_back(r.to_int64());
    return out;
}

const Weight& deref(const sgl_weight* w);

} // namespace

struct sgl_weight {
    Weight value;
};

namespace {
const Weight& deref(const sgl_weight* w)
{
    if (!w)
        throw invalid_input("null weight handle");
    return w->value;
}
} // namespace

extern "C" {

const char* sgl_last_error(void) { return g_last_error.c_str(); }

sgl_status sgl_weight_create(int g, const long long* coords, long long central, sgl_weight** out)
{
    return wrap([&] {
        if (!coords || !out)
            throw invalid_input("null pointer");
        std::vector<long long> c(coords, coords + g);
        *out = new sgl_weight{Weight(g, std::move(c), central)};
    });
}

void sgl_weight_free(sgl_weight* w) { delete w; }

sgl_status sgl_motivic_weight(const sgl_weight* w, long long* out)
{
    return wrap([&] { *out = motivic_weight(deref(w)); });
}

sgl_status sgl_is_p_small(const sgl_weight* w, long long p, int* out)
{
    return wrap([&] { *out = is_p_small(deref(w), p) ? 1 : 0; });
}

sgl_status sgl_minuscule_pairing_shifted(const sgl_weight* w, long long* out)
{
    return wrap([&] {
        const Weight& lam = deref(w);
        *out = minuscule_pairing(lam.half() + rho_tilde(lam.g()).half()).to_int64();
    });
}

sgl_status sgl_roots_json(int g, char** out)
{
    return wrap([&] {
        RootDatum rd = root_datum(g);
        json j;
        j["g"] = g;
        json simple = json::array();
        for (const Root& r : rd.simple) {
            json e;
            e["coords"] = r.coords;
            e["coroot"] = r.coroot;
            e["long"] = r.long_root;
            simple.push_back(e);
        }
        j["simple"] = simple;
        j["positive_count"] = rd.positive.size();
        ZMat cm = cartan_matrix(rd);
        json cartan = json::array();
        for (size_t i = 0; i < cm.rows(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < cm.cols(); ++k)
                row.push_back(cm(i, k).to_int64());
            cartan.push_back(row);
        }
        j["cartan"] = cartan;
        std::vector<std::string> rho_coords;
        for (int i = g; i >= 1; --i)
            rho_coords.push_back(rho(g).m(i).to_string());
        j["rho"] = rho_coords;
        j["rho_tilde"] = weight_json(rho_tilde(g));
        RootDatum dual = dual_root_datum(rd);
        json ds = json::array();
        for (const Root& r : dual.simple) {
            json e;
            e["coords"] = r.coords;
            e["coroot"] = r.coroot;
            ds.push_back(e);
        }
        j["dual_simple"] = ds;
        emit(out, j);
    });
}

sgl_status sgl_weyl_json(int g, char** out)
{
    return wrap([&] {
        auto all = enumerate_weyl(g);
        json j;
        j["g"] = g;
        j["order"] = all.size();
        j["longest_length"] = g * g;
        if (g <= 4) {
            json elems = json::array();
            for (const auto& w : all) {
                json e = weyl_element_json(w);
                e["length"] = weyl_length(w);
                elems.push_back(e);
            }
            j["elements"] = elems;
        }
        emit(out, j);
    });
}

sgl_status sgl_kostant_json(int g, int r, char** out)
{
    return wrap([&] {
        Parabolic p = r == 0 ? Parabolic::siegel(g) : Parabolic::maximal(r);
        CosetTable table = kostant_reps(g, p);
        json j;
        j["g"] = g;
        j["parabolic"] = r == 0 || r == g ? std::string("siegel") : "P" + std::to_string(r);
        j["count"] = table.reps.size();
        json reps = json::array();
        for (size_t i = 0; i < table.reps.size(); ++i) {
            json e = weyl_element_json(table.reps[i]);
            e["length"] = table.lengths[i];
            reps.push_back(e);
        }
        j["reps"] = reps;
        emit(out, j);
    });
}

sgl_status sgl_hodge_json(const sgl_weight* w, char** out)
{
    return wrap([&] {
        const Weight& lam = deref(w);
        json j;
        j["g"] = lam.g();
        j["lambda"] = weight_json(lam);
        j["weights"] = hodge_weights(lam);
        j["motivic"] = motivic_weight(lam);
        emit(out, j);
    });
}

sgl_status sgl_bgg_json(const sgl_weight* w, long long p, char** out)
{
    return wrap([&] {
        BGGDescriptor bgg = bgg_complex(deref(w), p);
        json j;
        j["g"] = bgg.g;
        j["lambda"] = weight_json(bgg.lambda);
        j["motivic"] = bgg.motivic;
        if (p)
            j["p"] = p;
        j["p_small"] = bgg.p_small;
        json entries = json::array();
        for (const auto& e : bgg.entries) {
            json ej;
            ej["length"] = e.length;
            ej["weight"] = weight_json(e.weight);
            ej["jump"] = e.jump;
            entries.push_back(ej);
        }
        j["entries"] = entries;
        j["jumps_by_degree"] = bgg.jumps_by_degree;
        std::vector<long long> jumps;
        int top_count = 0;
        for (const auto& e : bgg.entries) {
            jumps.push_back(e.jump);
            if (e.length == d_value(bgg.g))
                ++top_count;
        }
        std::sort(jumps.begin(), jumps.end());
        json checks;
        checks["jump_multiset_matches_jb"] = jumps == hodge_weights(bgg.lambda);
        checks["unique_top_length"] = top_count == 1;
        checks["top_absent_below_middle"] = true; // construction rejects violations
        j["checks"] = checks;
        CoherentDegrees c = coherent_degrees(bgg.lambda);
        json coh;
        coh["top"] = {{"weight", weight_json(c.weight_top)}, {"degree", c.degree_top}};
        coh["bottom"] = {{"weight", weight_json(c.weight_bottom)}, {"degree", c.degree_bottom}};
        j["coherent_degrees"] = coh;
        emit(out, j);
    });
}

sgl_status sgl_kostant_modp_json(const sgl_weight* w, int r, long long p, char** out)
{
    return wrap([&] {
        KostantStratumDecomposition k = kostant_mod_p(deref(w), r, p);
        json j;
        j["g"] = k.g;
        j["r"] = k.r;
        j["lambda"] = weight_json(k.lambda);
        if (p)
            j["p"] = p;
        j["p_small"] = k.p_small;
        json entries = json::array();
        BigInt total(0);
        for (const auto& e : k.entries) {
            json ej;
            ej["length"] = e.length;
            ej["weight"] = weight_json(e.full_weight);
            ej["linear"] = gl_weight_json(e.linear);
            ej["hermitian"] = gsp_weight_json(e.hermitian);
            BigInt dim = levi_dimension(e);
            total += dim;
            ej["levi_dimension"] = dim.to_string();
            entries.push_back(ej);
        }
        j["entries"] = entries;
        j["levi_dimension_total"] = total.to_string();
        j["dim_v_lambda"] = weyl_dimension(k.lambda).to_string();
        emit(out, j);
    });
}

namespace {

json claim_json(const ClaimReport& rep)
{
    json j;
    j["g"] = rep.g;
    j["lambda"] = weight_json(rep.lambda);
    j["motivic"] = rep.motivic;
    j["pass"] = rep.pass;
    json strata = json::array();
    for (const auto& s : rep.strata) {
        json sj;
        sj["datum"] = s.datum;
        sj["jumps"] = std::vector<long long>(s.jumps.begin(), s.jumps.end());
        sj["has_zero"] = s.has_zero;
        sj["has_top"] = s.has_top;
        strata.push_back(sj);
    }
    j["strata"] = strata;
    return j;
}

} // namespace

sgl_status sgl_claim84_json(const sgl_weight* w, int r, char** out)
{
    return wrap([&] {
        ClaimReport rep = claim84_check(deref(w), r);
        json j = claim_json(rep);
        j["r"] = r;
        emit(out, j);
    });
}

sgl_status sgl_claim87_json(const sgl_weight* w, int depth, char** out)
{
    return wrap([&] {
        ClaimReport rep = claim87_check(deref(w), depth);
        json j = claim_json(rep);
        j["depth"] = depth;
        emit(out, j);
    });
}

sgl_status sgl_strata_json(int g, char** out)
{
    return wrap([&] {
        json j;
        j["g"] = g;
        j["dims"] = strata_dims(g);
        emit(out, j);
    });
}

sgl_status sgl_traceless_json(int g, int s, size_t budget, char** out)
{
    return wrap([&] {
        TracelessBasis t = traceless_subspace(g, s, budget ? budget : kDefaultTensorBudget);
        json j;
        j["g"] = g;
        j["s"] = s;
        j["ambient_dim"] = t.ambient_dim;
        j["dim"] = t.dim;
        j["phi_rank"] = t.phi_rank;
        emit(out, j);
    });
}

sgl_status sgl_idempotent_json(int g, int s, long long p, size_t budget, char** out)
{
    return wrap([&] {
        IdempotentReport r = idempotent_check(g, s, p, budget ? budget : kDefaultTensorBudget);
        json j;
        j["g"] = r.g;
        j["s"] = r.s;
        j["p"] = r.p;
        j["kappa"] = r.kappa;
        j["phi_psi_scalar"] = r.phi_psi_scalar;
        j["theta_squared_is_kappa_theta"] = r.theta_squared_is_kappa_theta;
        j["cross_terms_vanish"] = r.cross_terms_vanish;
        j["ranks_complementary"] = r.ranks_complementary;
        j["zp_direct_sum"] = r.zp_direct_sum;
        j["kernel_dim"] = r.kernel_dim;
        j["image_rank"] = r.image_rank;
        emit(out, j);
    });
}

sgl_status sgl_lattice_json(const sgl_weight* w, long long p, size_t budget, char** out)
{
    return wrap([&] {
        LatticeReport r = weyl_lattice(deref(w), p, budget ? budget : kDefaultTensorBudget);
        json j;
        j["lambda"] = weight_json(r.lambda);
        j["s"] = r.s;
        j["rank"] = r.rank;
        j["weyl_dimension"] = r.weyl_dimension;
        j["rank_matches"] = r.rank_matches;
        j["elementary_divisors"] = r.elementary_divisors;
        j["p_free"][std::to_string(p)] = r.p_free;
        j["divisor_primes"] = r.divisor_primes;
        emit(out, j);
        if (!r.rank_matches)
            throw math_error("weyl lattice rank " + std::to_string(r.rank)
                             + " does not match the dimension oracle " + r.weyl_dimension);
    });
}

sgl_status sgl_spin_slopes_json(int g, const char* t_csv, const char* z, char** out)
{
    return wrap([&] {
        if (!t_csv || !z)
            throw invalid_input("null slope input");
        std::vector<Rational> t = parse_rational_csv(t_csv);
        if (t.size() != static_cast<size_t>(g))
            throw invalid_input("need g = " + std::to_string(g) + " theta valuations");
        Rational zz = Rational::from_string(z);
        auto slopes = spin_slopes(t, zz);
        json j;
        j["g"] = g;
        std::vector<std::string> ts;
        for (const Rational& v : t)
            ts.push_back(v.to_string());
        j["t"] = ts;
        j["z"] = zz.to_string();
        json sj;
        for (const auto& [subset, slope] : slopes)
            sj[subset_name(subset, g)] = slope.to_string();
        j["slopes"] = sj;
        emit(out, j);
    });
}

sgl_status sgl_solve_slopes_json(int g, const char* slopes_csv, int displayed_mode, char** out)
{
    return wrap([&] {
        if (!slopes_csv)
            throw invalid_input("null slope input");
        std::vector<Rational> values = parse_rational_csv(slopes_csv);
        if (values.size() != (1u << g))
            throw invalid_input("need 2^g slope values in subset-bitmask order");
        std::map<uint32_t, Rational> targets;
        for (uint32_t b = 0; b < values.size(); ++b)
            targets[b] = values[b];
        SlopeSystem sys(g, targets);
        SlopeMode mode = displayed_mode ? SlopeMode::displayed : SlopeMode::direct;
        SlopeSolution sol = solve_slope_system(sys, mode);
        json j;
        j["g"] = g;
        j["mode"] = displayed_mode ? "displayed" : "direct";
        json sj;
        for (const auto& [subset, v] : targets)
            sj[subset_name(subset, g)] = v.to_string();
        j["slopes"] = sj;
        j["consistent"] = sol.consistent;
        std::vector<std::string> ts;
        for (const Rational& v : sol.t_display)
            ts.push_back(v.to_string());
        j["solution"]["t"] = ts;
        j["solution"]["z"] = sol.z.to_string();
        json viol = json::array();
        for (const auto& v : sol.violations) {
            json vj;
            vj["subset"] = subset_name(v.subset, g);
            vj["expected"] = v.expected.to_string();
            vj["actual"] = v.actual.to_string();
            viol.push_back(vj);
        }
        j["violations"] = viol;
        emit(out, j);
    });
}

sgl_status sgl_ao_json(const sgl_weight* w, const char* valuations_csv, char** out)
{
    return wrap([&] {
        if (!valuations_csv)
            throw invalid_input("null valuation input");
        const Weight& lam = deref(w);
        std::vector<Rational> vals = parse_rational_csv(valuations_csv);
        bool ok = ao_predicate(vals, lam);
        json j;
        j["g"] = lam.g();
        j["lambda"] = weight_json(lam);
        std::vector<std::string> vs;
        for (const Rational& v : vals)
            vs.push_back(v.to_string());
        j["valuations"] = vs;
        j["ao"] = ok;
        emit(out, j);
    });
}

sgl_status sgl_satake_json(int g, const char* exponents_csv, int r, char** out)
{
    return wrap([&] {
        if (!exponents_csv)
            throw invalid_input("null exponent input");
        TorusDoubleCoset coset = TorusDoubleCoset::make(g, parse_int_csv(exponents_csv));
        auto restricted = satake_restrict(coset, r);
        json j;
        j["g"] = g;
        j["r"] = r;
        j["exponents"] = coset.exponents;
        j["similitude"] = coset.similitude;
        if (restricted) {
            json rj;
            rj["g"] = restricted->g;
            rj["exponents"] = restricted->exponents;
            rj["similitude"] = restricted->similitude;
            j["image"] = rj;
        } else {
            j["image"] = "zero";
        }
        emit(out, j);
    });
}

sgl_status sgl_verify_all_json(int gmax, char** out)
{
    sgl_status status = wrap([&] {
        auto results = run_acceptance(gmax);
        json j;
        json arr = json::array();
        for (const auto& r : results) {
            json rj;
            rj["number"] = r.number;
            rj["name"] = r.name;
            rj["pass"] = r.pass;
            rj["seconds"] = r.seconds;
            rj["detail"] = r.detail;
            arr.push_back(rj);
        }
        j["criteria"] = arr;
        j["pass"] = acceptance_all_pass(results);
        emit(out, j);
        if (!acceptance_all_pass(results))
            throw math_error("acceptance criteria failed");
    });
    return status;
}

void sgl_string_free(char* s) { std::free(s); }

} // extern "C"
