#pragma once

// Test-only oracle: explicit matrix realizations of sp(2g) inside the
// standard module, nilpotent radicals of the maximal parabolics, and
// Chevalley-Eilenberg cohomology of their action on the plethysm-constructed
// Weyl modules. Nothing in the library depends on this; it exists to check
// the combinatorial decompositions against honest linear algebra.

#include "siegel/linalg.hpp"
#include "siegel/root_datum.hpp"
#include "siegel/weyl_modules.hpp"

#include <map>
#include <vector>

namespace siegel::oracle {

// the involution cutting out sp(J): theta(X) = J X^T J (with J^2 = -1,
// fixed points are exactly the X with X^T J + J X = 0)
inline QMat sp_involution(const StandardModule& mod, const QMat& x)
{
    size_t n = mod.dim();
    QMat j(n, n), xt(n, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            j(a, b) = Rational(mod.gram(a, b));
            xt(a, b) = x(b, a);
        }
    return j * xt * j;
}

inline bool in_sp(const StandardModule& mod, const QMat& x)
{
    return sp_involution(mod, x) == x;
}

// 0-based diagonal position of e_i resp. e*_i in the basis (e_g,...,e_1,e_1*,...,e_g*)
inline size_t pos_e(int g, int i) { return static_cast<size_t>(g - i); }
inline size_t pos_estar(int g, int i) { return static_cast<size_t>(g + i - 1); }

// torus element with x_i = value, others 0, z = 0:
// diag(..., x_i at e_i, ..., -x_i at e_i*, ...)
inline QMat torus_basis(const StandardModule& mod, int i)
{
    size_t n = mod.dim();
    QMat t(n, n);
    t(pos_e(mod.g, i), pos_e(mod.g, i)) = Rational(1);
    t(pos_estar(mod.g, i), pos_estar(mod.g, i)) = Rational(-1);
    return t;
}

inline QMat commutator(const QMat& a, const QMat& b)
{
    return a * b + Rational(-1) * (b * a);
}

// root vector for a given root, as the theta-symmetrization of an elementary
// matrix of that torus weight; verified to be nonzero and in sp
inline QMat root_vector(const StandardModule& mod, const Root& alpha)
{
    int g = mod.g;
    size_t n = mod.dim();
    // find an elementary matrix E_{k,l} whose torus weight is alpha
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
            if (k == l)
                continue;
            bool matches = true;
            for (int i = 1; i <= g && matches; ++i) {
                long long wk = k == pos_e(g, i) ? 1 : (k == pos_estar(g, i) ? -1 : 0);
                long long wl = l == pos_e(g, i) ? 1 : (l == pos_estar(g, i) ? -1 : 0);
                if (wk - wl != alpha.coords[static_cast<size_t>(g - i)])
                    matches = false;
            }
            if (!matches)
                continue;
            QMat e(n, n);
            e(k, l) = Rational(1);
            QMat x = e + sp_involution(mod, e);
            if (!x.is_zero() && in_sp(mod, x))
                return x;
        }
    throw math_error("root_vector: no elementary matrix of the requested weight");
}

// roots of the Levi M_r = GL(r) x GSp(2g-2r): e_i - e_j with both indices in
// the top block, and everything supported on the bottom block
inline bool root_in_levi(const Root& alpha, int g, int r)
{
    int cut = g - r;
    bool top_support = false, bottom_support = false;
    long long top_sum = 0;
    for (int i = 1; i <= g; ++i) {
        long long c = alpha.coords[static_cast<size_t>(g - i)];
        if (c != 0) {
            if (i > cut) {
                top_support = true;
                top_sum += c;
            } else {
                bottom_support = true;
            }
        }
    }
    if (top_support && bottom_support)
        return false;
    if (top_support)
        return top_sum == 0; // GL block: only e_i - e_j
    return true;             // GSp block keeps all its roots
}

// basis of the nilpotent radical u_{P_r}: positive-root vectors outside the Levi
inline std::vector<QMat> nilradical_basis(const StandardModule& mod, int r)
{
    std::vector<QMat> basis;
    for (const Root& alpha : positive_roots(mod.g))
        if (!root_in_levi(alpha, mod.g, r))
            basis.push_back(root_vector(mod, alpha));
    return basis;
}

// structure constants of a Lie subalgebra given by a matrix basis
inline std::vector<std::vector<std::vector<Rational>>> structure_constants(const std::vector<QMat>& basis)
{
    size_t n = basis.size();
    size_t dim = basis.empty() ? 0 : basis[0].rows();
    QMat flat(dim * dim, n);
    for (size_t e = 0; e < n; ++e)
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b)
                flat(a * dim + b, e) = basis[e](a, b);
    std::vector<std::vector<std::vector<Rational>>> c(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            QMat br = commutator(basis[a], basis[b]);
            std::vector<Rational> rhs(dim * dim);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j)
                    rhs[i * dim + j] = br(i, j);
            std::vector<Rational> coeffs = solve_full_column_rank(flat, rhs);
            for (size_t e = 0; e < n; ++e) {
                c[a][b][e] = coeffs[e];
                c[b][a][e] = -coeffs[e];
            }
        }
    return c;
}

// derivation action of a matrix X on V^{(x)s}, as a sparse application to a
// coefficient vector
inline std::vector<Rational> tensor_derivation_apply(const QMat& x, int s,
                                                     const std::vector<Rational>& vec)
{
    size_t base = x.rows();
    size_t dim = tensor::pow_dim(base, s);
    std::vector<Rational> out(dim, Rational(0));
    for (size_t idx = 0; idx < dim; ++idx) {
        if (vec[idx].is_zero())
            continue;
        std::vector<size_t> tuple = tensor::decode(idx, base, s);
        for (int slot = 0; slot < s; ++slot) {
            size_t old = tuple[static_cast<size_t>(slot)];
            for (size_t to = 0; to < base; ++to) {
                if (x(to, old).is_zero())
                    continue;
                std::vector<size_t> moved = tuple;
                moved[static_cast<size_t>(slot)] = to;
                out[tensor::encode(moved, base)] += x(to, old) * vec[idx];
            }
        }
    }
    return out;
}

// A concrete G-module: a column basis W inside V^{(x)s} closed under the
// derivation action; action matrices are obtained by solving in the basis.
struct RealizedModule {
    int g = 0;
    int s = 0;
    QMat basis; // ambient_dim x module_dim, full column rank

    size_t dim() const { return basis.cols(); }

    QMat act(const QMat& x) const
    {
        size_t d = dim();
        QMat rho(d, d);
        for (size_t c = 0; c < d; ++c) {
            std::vector<Rational> col(basis.rows());
            for (size_t i = 0; i < basis.rows(); ++i)
                col[i] = basis(i, c);
            std::vector<Rational> image = tensor_derivation_apply(x, s, col);
            std::vector<Rational> coeffs = solve_full_column_rank(basis, image);
            for (size_t i = 0; i < d; ++i)
                rho(i, c) = coeffs[i];
        }
        return rho;
    }
};

// the plethysm-constructed Weyl module of highest weight lambda
inline RealizedModule realize_weyl_module(const Weight& lambda)
{
    int g = lambda.g();
    int s = static_cast<int>(lambda.semisimple_sum());
    RealizedModule mod;
    mod.g = g;
    mod.s = s;
    if (s == 0) { // trivial representation
        mod.basis = QMat(1, 1);
        mod.basis(0, 0) = Rational(1);
        return mod;
    }
    TracelessBasis t = traceless_subspace(g, s);
    ZMat young = young_symmetrizer_matrix(lambda.coords_display(), s, g);
    QMat image = to_rational(young * t.basis);
    // column-reduce to an independent spanning set
    size_t r = rank(image);
    // greedy selection of r independent columns
    QMat chosen(image.rows(), r);
    size_t taken = 0;
    for (size_t c = 0; c < image.cols() && taken < r; ++c) {
        QMat trial(image.rows(), taken + 1);
        for (size_t i = 0; i < image.rows(); ++i) {
            for (size_t k = 0; k < taken; ++k)
                trial(i, k) = chosen(i, k);
            trial(i, taken) = image(i, c);
        }
        if (rank(trial) == taken + 1) {
            for (size_t i = 0; i < image.rows(); ++i)
                chosen(i, taken) = image(i, c);
            ++taken;
        }
    }
    if (taken != r)
        throw math_error("realize_weyl_module: failed to extract a basis");
    mod.basis = chosen;
    return mod;
}

// Chevalley-Eilenberg cohomology dimensions of a nilpotent Lie algebra acting
// on a realized module: H^q(u, V) for q = 0..dim u.
inline std::vector<size_t> ce_cohomology_dims(const std::vector<QMat>& u_basis,
                                              const RealizedModule& module)
{
    size_t n = u_basis.size();
    size_t vdim = module.dim();
    auto cstruct = structure_constants(u_basis);
    std::vector<QMat> rho;
    rho.reserve(n);
    for (const QMat& x : u_basis)
        rho.push_back(module.act(x));

    // q-subsets of {0..n-1} in lexicographic order
    auto subsets = [&](size_t q) {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> cur;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (cur.size() == q) {
                out.push_back(cur);
                return;
            }
            for (size_t i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    std::vector<std::vector<std::vector<size_t>>> levels;
    for (size_t q = 0; q <= n; ++q)
        levels.push_back(subsets(q));
    std::vector<std::map<std::vector<size_t>, size_t>> index;
    index.resize(n + 1);
    for (size_t q = 0; q <= n; ++q)
        for (size_t k = 0; k < levels[q].size(); ++k)
            index[q][levels[q][k]] = k;

    // differential d_q: C^q -> C^{q+1}, built by evaluating
    // (d omega)(x_{t_0},...,x_{t_q}) = sum_i (-1)^i x_{t_i} omega(...^t_i...)
    //   + sum_{i<j} (-1)^{i+j} omega([x_{t_i},x_{t_j}], ...^t_i...^t_j...)
    // on every sorted tuple T
    auto differential = [&](size_t q) {
        size_t rows = levels[q + 1].size() * vdim;
        size_t cols = levels[q].size() * vdim;
        QMat d(rows, cols);
        for (size_t tidx = 0; tidx < levels[q + 1].size(); ++tidx) {
            const auto& t_set = levels[q + 1][tidx];
            // module part: omega(T minus t_i) is the basis cochain on that subset
            for (size_t i = 0; i < t_set.size(); ++i) {
                std::vector<size_t> rest = t_set;
                rest.erase(rest.begin() + static_cast<long>(i));
                size_t sidx = index[q].at(rest);
                Rational sgn(i % 2 == 0 ? 1 : -1);
                for (size_t a = 0; a < vdim; ++a)
                    for (size_t b = 0; b < vdim; ++b)
                        if (!rho[t_set[i]](a, b).is_zero())
                            d(tidx * vdim + a, sidx * vdim + b) += sgn * rho[t_set[i]](a, b);
            }
            // Lie part: substitute the bracket for the removed pair
            for (size_t i = 0; i < t_set.size(); ++i)
                for (size_t j = i + 1; j < t_set.size(); ++j) {
                    std::vector<size_t> rest;
                    for (size_t k = 0; k < t_set.size(); ++k)
                        if (k != i && k != j)
                            rest.push_back(t_set[k]);
                    Rational sgn_ij((i + j) % 2 == 0 ? 1 : -1);
                    for (size_t e = 0; e < n; ++e) {
                        const Rational& coeff = cstruct[t_set[i]][t_set[j]][e];
                        if (coeff.is_zero())
                            continue;
                        bool clash = false;
                        size_t pos_e = 0;
                        for (size_t v : rest) {
                            if (v == e)
                                clash = true;
                            if (v < e)
                                ++pos_e;
                        }
                        if (clash)
                            continue;
                        std::vector<size_t> s_set = rest;
                        s_set.insert(s_set.begin() + static_cast<long>(pos_e), e);
                        size_t sidx = index[q].at(s_set);
                        Rational sgn = sgn_ij * Rational(pos_e % 2 == 0 ? 1 : -1) * coeff;
                        for (size_t v = 0; v < vdim; ++v)
                            d(tidx * vdim + v, sidx * vdim + v) += sgn;
                    }
                }
        }
        return d;
    };

    std::vector<QMat> ds;
    for (size_t q = 0; q < n; ++q)
        ds.push_back(differential(q));
    // sanity: d o d = 0
    for (size_t q = 0; q + 1 < n; ++q)
        if (!(ds[q + 1] * ds[q]).is_zero())
            throw math_error("ce_cohomology_dims: differential does not square to zero");

    std::vector<size_t> dims;
    std::vector<size_t> ranks(n + 1, 0);
    for (size_t q = 0; q < n; ++q)
        ranks[q] = rank(ds[q]);
    for (size_t q = 0; q <= n; ++q) {
        size_t cq = levels[q].size() * vdim;
        size_t out_rank = q < n ? ranks[q] : 0;
        size_t in_rank = q > 0 ? ranks[q - 1] : 0;
        dims.push_back(cq - out_rank - in_rank);
    }
    return dims;
}

} // namespace siegel::oracle
