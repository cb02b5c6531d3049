#pragma once

#include "siegel/characters.hpp"
#include "siegel/linalg.hpp"
#include "siegel/weight.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace siegel {

// Standard symplectic module of GSp(2g): ordered basis (e_g,...,e_1,e_1*,...,e_g*)
// with the antidiagonal Gram matrix J = [[0,s],[-s,0]].
struct StandardModule {
    int g = 0;
    ZMat gram; // J, 2g x 2g

    size_t dim() const { return static_cast<size_t>(2 * g); }
    std::string basis_name(size_t k) const
    {
        if (k < static_cast<size_t>(g))
            return "e" + std::to_string(g - static_cast<int>(k));
        return "e*" + std::to_string(static_cast<int>(k) - g + 1);
    }
};

inline StandardModule standard_module(int g)
{
    if (g < 1)
        throw invalid_input("standard_module: g must be >= 1");
    StandardModule m;
    m.g = g;
    size_t n = m.dim();
    m.gram = ZMat(n, n);
    for (size_t a = 0; a < static_cast<size_t>(g); ++a) {
        m.gram(a, n - 1 - a) = BigInt(1);
        m.gram(n - 1 - a, a) = BigInt(-1);
    }
    return m;
}

namespace tensor {

// multi-indices (k_1, ..., k_s), each k_t in [0, 2g), encoded base 2g with
// k_1 most significant
inline size_t pow_dim(size_t base, int s)
{
    size_t d = 1;
    for (int i = 0; i < s; ++i)
        d *= base;
    return d;
}

inline std::vector<size_t> decode(size_t idx, size_t base, int s)
{
    std::vector<size_t> tuple(static_cast<size_t>(s));
    for (int t = s; t-- > 0;) {
        tuple[static_cast<size_t>(t)] = idx % base;
        idx /= base;
    }
    return tuple;
}

inline size_t encode(const std::vector<size_t>& tuple, size_t base)
{
    size_t idx = 0;
    for (size_t k : tuple)
        idx = idx * base + k;
    return idx;
}

} // namespace tensor

// psi in V tensor V: the image of the symplectic form under
// (V (x) V)* ~ V* (x) V* ~ V (x) V, the last identification via v -> <v,->.
// Computed literally through those maps; the resulting coefficient matrix is
// what every downstream check is measured against.
inline ZMat psi_tensor(const StandardModule& mod)
{
    size_t n = mod.dim();
    // T: V -> V*, coordinates of <v,-> in the dual basis: (Tv)_l = sum_m v_m J(m,l)
    QMat t_mat(n, n);
    for (size_t l = 0; l < n; ++l)
        for (size_t m = 0; m < n; ++m)
            t_mat(l, m) = Rational(mod.gram(m, l));
    // invert T by solving T x = e_k columnwise
    QMat t_inv(n, n);
    for (size_t k = 0; k < n; ++k) {
        std::vector<Rational> e(n, Rational(0));
        e[k] = Rational(1);
        std::vector<Rational> x = solve_full_column_rank(t_mat, e);
        for (size_t i = 0; i < n; ++i)
            t_inv(i, k) = x[i];
    }
    // form as a tensor in V* (x) V*: F_{kl} = J(k,l); push through T^{-1} (x) T^{-1}
    ZMat psi(n, n);
    for (size_t m = 0; m < n; ++m)
        for (size_t nn = 0; nn < n; ++nn) {
            Rational acc(0);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    if (mod.gram(k, l).is_zero())
                        continue;
                    acc += t_inv(m, k) * t_inv(nn, l) * Rational(mod.gram(k, l));
                }
            if (!acc.is_integer())
                throw math_error("psi_tensor: non-integral coefficient");
            psi(m, nn) = acc.num();
        }
    return psi;
}

// contraction phi_{i,j}: V^{(x)s} -> V^{(x)(s-2)},
// v_1 (x) ... (x) v_s -> <v_i, v_j> v_1 (x) ... ^v_i ... ^v_j ... (x) v_s
inline ZMat contraction_matrix(const StandardModule& mod, int s, int i, int j)
{
    if (!(1 <= i && i < j && j <= s))
        throw invalid_input("contraction: need 1 <= i < j <= s");
    size_t base = mod.dim();
    size_t src = tensor::pow_dim(base, s), dst = tensor::pow_dim(base, s - 2);
    ZMat m(dst, src);
    for (size_t idx = 0; idx < src; ++idx) {
        std::vector<size_t> tuple = tensor::decode(idx, base, s);
        const BigInt& pair_value = mod.gram(tuple[static_cast<size_t>(i - 1)],
                                            tuple[static_cast<size_t>(j - 1)]);
        if (pair_value.is_zero())
            continue;
        std::vector<size_t> rest;
        rest.reserve(static_cast<size_t>(s - 2));
        for (int t = 1; t <= s; ++t)
            if (t != i && t != j)
                rest.push_back(tuple[static_cast<size_t>(t - 1)]);
        m(tensor::encode(rest, base), idx) += pair_value;
    }
    return m;
}

// insertion psi_{i,j}: V^{(x)(s-2)} -> V^{(x)s}, inserting psi at the ith and
// jth components
inline ZMat insertion_matrix(const StandardModule& mod, int s, int i, int j)
{
    if (!(1 <= i && i < j && j <= s))
        throw invalid_input("insertion: need 1 <= i < j <= s");
    size_t base = mod.dim();
    size_t src = tensor::pow_dim(base, s - 2), dst = tensor::pow_dim(base, s);
    ZMat psi = psi_tensor(mod);
    ZMat m(dst, src);
    for (size_t idx = 0; idx < src; ++idx) {
        std::vector<size_t> rest = tensor::decode(idx, base, s - 2);
        for (size_t a = 0; a < base; ++a)
            for (size_t b = 0; b < base; ++b) {
                if (psi(a, b).is_zero())
                    continue;
                std::vector<size_t> tuple(static_cast<size_t>(s));
                size_t r = 0;
                for (int t = 1; t <= s; ++t) {
                    if (t == i)
                        tuple[static_cast<size_t>(t - 1)] = a;
                    else if (t == j)
                        tuple[static_cast<size_t>(t - 1)] = b;
                    else
                        tuple[static_cast<size_t>(t - 1)] = rest[r++];
                }
                m(tensor::encode(tuple, base), idx) += psi(a, b);
            }
    }
    return m;
}

inline std::vector<std::pair<int, int>> index_pairs(int s)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

// stacked contraction Phi = (+) phi_{i,j}: V^{(x)s} -> (+)_{i<j} V^{(x)(s-2)}
inline ZMat stacked_phi(const StandardModule& mod, int s)
{
    auto pairs = index_pairs(s);
    size_t base = mod.dim();
    size_t block = tensor::pow_dim(base, s - 2), src = tensor::pow_dim(base, s);
    ZMat m(block * pairs.size(), src);
    for (size_t p = 0; p < pairs.size(); ++p) {
        ZMat c = contraction_matrix(mod, s, pairs[p].first, pairs[p].second);
        for (size_t r = 0; r < block; ++r)
            for (size_t col = 0; col < src; ++col)
                if (!c(r, col).is_zero())
                    m(p * block + r, col) = c(r, col);
    }
    return m;
}

// summed insertion Psi: (+)_{i<j} V^{(x)(s-2)} -> V^{(x)s}
inline ZMat summed_psi(const StandardModule& mod, int s)
{
    auto pairs = index_pairs(s);
    size_t base = mod.dim();
    size_t block = tensor::pow_dim(base, s - 2), dst = tensor::pow_dim(base, s);
    ZMat m(dst, block * pairs.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
        ZMat ins = insertion_matrix(mod, s, pairs[p].first, pairs[p].second);
        for (size_t r = 0; r < dst; ++r)
            for (size_t col = 0; col < block; ++col)
                if (!ins(r, col).is_zero())
                    m(r, p * block + col) = ins(r, col);
    }
    return m;
}

struct TracelessBasis {
    int g = 0;
    int s = 0;
    size_t ambient_dim = 0;
    size_t dim = 0;   // dim over Q = rank of the saturated integer basis
    ZMat basis;       // saturated integer kernel of Phi, columns
    size_t phi_rank = 0;
};

constexpr size_t kDefaultTensorBudget = 500000;

// V^{<s>} = Ker Phi, the traceless tensors, as an exact kernel basis over Q
// together with its integral saturation. Defined directly as a kernel, not
// through the projector that idempotent_check measures.
inline TracelessBasis traceless_subspace(int g, int s, size_t budget = kDefaultTensorBudget)
{
    if (g < 1 || s < 1)
        throw invalid_input("traceless_subspace: need g >= 1, s >= 1");
    size_t ambient = tensor::pow_dim(static_cast<size_t>(2 * g), s);
    if (ambient > budget)
        throw budget_error("traceless_subspace: (2g)^s = " + std::to_string(ambient)
                           + " exceeds the budget " + std::to_string(budget));
    StandardModule mod = standard_module(g);
    TracelessBasis out;
    out.g = g;
    out.s = s;
    out.ambient_dim = ambient;
    if (s == 1) {
        out.basis = ZMat::identity(ambient);
        out.dim = ambient;
        out.phi_rank = 0;
        return out;
    }
    ZMat phi = stacked_phi(mod, s);
    out.basis = integer_kernel(phi);
    out.dim = out.basis.cols();
    out.phi_rank = ambient - out.dim;
    return out;
}

// Measured verdict on the projector identity (1/kappa) Theta idempotent and
// the splitting it would give. This is a verifier only; the traceless
// subspace itself never relies on it.
struct IdempotentReport {
    int g = 0;
    int s = 0;
    long long p = 0;
    std::string kappa;                 // measured contraction constant phi o psi
    bool phi_psi_scalar = false;       // phi_{i,j} o psi_{i,j} = kappa * id on all pairs
    bool theta_squared_is_kappa_theta = false;
    bool cross_terms_vanish = true;    // phi_{1,2} o psi_{1,3} = 0 (s >= 3)
    bool ranks_complementary = false;  // dim Ker Phi + rank Psi = (2g)^s over Q
    bool zp_direct_sum = false;        // V^{(x)s} = Ker Phi (+) Im Psi over Z_(p)
    size_t kernel_dim = 0;
    size_t image_rank = 0;
};

inline IdempotentReport idempotent_check(int g, int s, long long p,
                                         size_t budget = kDefaultTensorBudget)
{
    if (g < 1 || s < 1)
        throw invalid_input("idempotent_check: need g >= 1, s >= 1");
    if (!is_prime(p))
        throw invalid_input("idempotent_check: p must be prime");
    if ((2 * g) % p == 0)
        throw invalid_input("idempotent_check: p must not divide 2g");
    size_t ambient = tensor::pow_dim(static_cast<size_t>(2 * g), s);
    if (ambient > budget)
        throw budget_error("idempotent_check: (2g)^s exceeds the budget");

    StandardModule mod = standard_module(g);
    IdempotentReport rep;
    rep.g = g;
    rep.s = s;
    rep.p = p;

    // measured constant: phi_{1,2}(psi) on V^{(x)2}
    {
        ZMat c = contraction_matrix(mod, 2, 1, 2);
        ZMat ins = insertion_matrix(mod, 2, 1, 2);
        ZMat scalar = c * ins; // 1x1
        rep.kappa = scalar(0, 0).to_string();
    }

    if (s == 1) {
        // no pairs: Theta = 0 and the projector is the identity
        rep.phi_psi_scalar = true;
        rep.theta_squared_is_kappa_theta = true;
        rep.ranks_complementary = true;
        rep.zp_direct_sum = true;
        rep.kernel_dim = ambient;
        return rep;
    }

    BigInt kappa = BigInt::from_string(rep.kappa);
    ZMat phi = stacked_phi(mod, s);
    ZMat psi = summed_psi(mod, s);

    rep.phi_psi_scalar = true;
    for (auto [i, j] : index_pairs(s)) {
        ZMat comp = contraction_matrix(mod, s, i, j) * insertion_matrix(mod, s, i, j);
        ZMat expect = kappa * ZMat::identity(comp.rows());
        if (!(comp == expect)) {
            rep.phi_psi_scalar = false;
            break;
        }
    }

    if (s >= 3) {
        ZMat cross = contraction_matrix(mod, s, 1, 2) * insertion_matrix(mod, s, 1, 3);
        rep.cross_terms_vanish = cross.is_zero();
    }

    ZMat theta = psi * phi;
    rep.theta_squared_is_kappa_theta = theta * theta == kappa * theta;

    ZMat kernel = integer_kernel(phi);
    rep.kernel_dim = kernel.cols();
    rep.image_rank = rank(to_rational(psi));
    rep.ranks_complementary = rep.kernel_dim + rep.image_rank == ambient;

    // Z_(p)-splitting: stack the saturated kernel with the integral image
    // lattice and ask for full rank with p-unit elementary divisors
    ZMat stacked(ambient, kernel.cols() + psi.cols());
    for (size_t r = 0; r < ambient; ++r) {
        for (size_t c = 0; c < kernel.cols(); ++c)
            stacked(r, c) = kernel(r, c);
        for (size_t c = 0; c < psi.cols(); ++c)
            stacked(r, kernel.cols() + c) = psi(r, c);
    }
    SmithResult snf = smith_normal_form(stacked, false);
    bool p_unit = true;
    for (const BigInt& dvr : snf.divisors)
        if (dvr.divisible_by(BigInt(p)))
            p_unit = false;
    rep.zp_direct_sum = snf.rank == ambient && p_unit;
    return rep;
}

// --- Young symmetrizers ------------------------------------------------

// permutations of tensor positions, images 1-based
using Perm = std::vector<int>;

namespace detail {

inline void product_group(const std::vector<std::vector<int>>& blocks, int s,
                          std::vector<Perm>& out)
{
    out.assign(1, Perm(static_cast<size_t>(s)));
    for (auto& p : out)
        for (int i = 1; i <= s; ++i)
            p[static_cast<size_t>(i - 1)] = i;
    for (const auto& block : blocks) {
        std::vector<int> arrangement = block;
        std::sort(arrangement.begin(), arrangement.end());
        std::vector<Perm> extended;
        do {
            for (const Perm& base : out) {
                Perm q = base;
                for (size_t t = 0; t < block.size(); ++t)
                    q[static_cast<size_t>(block[t] - 1)] = base[static_cast<size_t>(arrangement[t] - 1)];
                extended.push_back(std::move(q));
            }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(extended);
    }
}

inline int perm_sign(const Perm& p)
{
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        size_t cycle = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j] - 1);
            ++cycle;
        }
        if (cycle % 2 == 0)
            sign = -sign;
    }
    return sign;
}

} // namespace detail

// Rows of the fixed standard tableau for a partition, filled row by row:
// row 0 holds boxes 1..parts[0], the next row continues the numbering.
struct YoungTableau {
    std::vector<long long> parts; // decreasing, zero parts dropped
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols;
};

inline YoungTableau standard_tableau(const std::vector<long long>& partition)
{
    YoungTableau t;
    for (long long p : partition) {
        if (p < 0)
            throw invalid_input("standard_tableau: negative part");
        if (p > 0)
            t.parts.push_back(p);
    }
    for (size_t i = 0; i + 1 < t.parts.size(); ++i)
        if (t.parts[i] < t.parts[i + 1])
            throw invalid_input("standard_tableau: parts must be decreasing");
    int box = 1;
    for (long long p : t.parts) {
        std::vector<int> row;
        for (long long k = 0; k < p; ++k)
            row.push_back(box++);
        t.rows.push_back(std::move(row));
    }
    size_t ncols = t.parts.empty() ? 0 : static_cast<size_t>(t.parts[0]);
    t.cols.resize(ncols);
    for (const auto& row : t.rows)
        for (size_t c = 0; c < row.size(); ++c)
            t.cols[c].push_back(row[c]);
    return t;
}

// c_lambda = a_lambda . b_lambda for the standard tableau: column
// antisymmetrization followed by row symmetrization, as an integer operator
// on V^{(x)s}.
inline ZMat young_symmetrizer_matrix(const std::vector<long long>& partition, int s, int g,
                                     const YoungTableau* tableau = nullptr)
{
    YoungTableau own;
    if (!tableau) {
        own = standard_tableau(partition);
        tableau = &own;
    }
    long long total = 0;
    for (long long p : tableau->parts)
        total += p;
    if (total != s)
        throw invalid_input("young_symmetrizer: partition size " + std::to_string(total)
                            + " does not match tensor degree " + std::to_string(s));

    std::vector<Perm> row_group, col_group;
    detail::product_group(tableau->rows, s, row_group);
    detail::product_group(tableau->cols, s, col_group);

    size_t base = static_cast<size_t>(2 * g);
    size_t dim = tensor::pow_dim(base, s);
    ZMat c(dim, dim);
    for (size_t idx = 0; idx < dim; ++idx) {
        std::vector<size_t> tuple = tensor::decode(idx, base, s);
        for (const Perm& q : col_group) {
            int sign = detail::perm_sign(q);
            std::vector<size_t> mid(tuple.size());
            for (size_t a = 0; a < tuple.size(); ++a)
                mid[static_cast<size_t>(q[a] - 1)] = tuple[a];
            for (const Perm& pr : row_group) {
                std::vector<size_t> fin(tuple.size());
                for (size_t a = 0; a < tuple.size(); ++a)
                    fin[static_cast<size_t>(pr[a] - 1)] = mid[a];
                c(tensor::encode(fin, base), idx) += BigInt(sign);
            }
        }
    }
    return c;
}

// Integral Weyl lattice by plethysm: the image of the saturated traceless
// lattice under the Young symmetrizer of the fixed standard tableau.
struct LatticeReport {
    Weight lambda;
    int s = 0;
    long long p = 0;
    size_t rank = 0;
    std::vector<std::string> elementary_divisors;
    bool p_free = true;                  // no elementary divisor divisible by p
    std::vector<long long> divisor_primes; // primes dividing some divisor
    std::string weyl_dimension;          // independent oracle value
    bool rank_matches = false;
};

inline LatticeReport weyl_lattice(const Weight& lambda, long long p,
                                  size_t budget = kDefaultTensorBudget)
{
    if (!lambda.is_dominant())
        throw invalid_input("weyl_lattice: lambda must be dominant");
    long long s64 = lambda.semisimple_sum();
    int s = static_cast<int>(s64);
    if (!is_prime(p) || p == 2)
        throw invalid_input("weyl_lattice: p must be an odd prime");
    if (p <= s64)
        throw invalid_input("weyl_lattice: need p > s = |lambda| for integral coefficients");

    LatticeReport rep;
    rep.lambda = lambda;
    rep.s = s;
    rep.p = p;
    rep.weyl_dimension = weyl_dimension(lambda).to_string();

    if (s == 0) {
        rep.rank = 1;
        rep.elementary_divisors = {"1"};
        rep.rank_matches = rep.weyl_dimension == "1";
        return rep;
    }

    TracelessBasis traceless = traceless_subspace(lambda.g(), s, budget);
    ZMat young = young_symmetrizer_matrix(lambda.coords_display(), s, lambda.g());
    ZMat image = young * traceless.basis;
    SmithResult snf = smith_normal_form(image, false);
    rep.rank = snf.rank;
    for (const BigInt& dvr : snf.divisors) {
        rep.elementary_divisors.push_back(dvr.to_string());
        if (dvr.divisible_by(BigInt(p)))
            rep.p_free = false;
        BigInt rest = dvr;
        for (long long q = 2; q <= 1000; ++q) {
            if (!is_prime(q))
                continue;
            bool divides = false;
            while (rest.divisible_by(BigInt(q))) {
                rest = rest / BigInt(q);
                divides = true;
            }
            if (divides
                && std::find(rep.divisor_primes.begin(), rep.divisor_primes.end(), q)
                       == rep.divisor_primes.end())
                rep.divisor_primes.push_back(q);
        }
        if (!rest.is_one())
            throw math_error("weyl_lattice: elementary divisor has a prime factor above 1000");
    }
    std::sort(rep.divisor_primes.begin(), rep.divisor_primes.end());
    rep.rank_matches = BigInt(static_cast<long long>(rep.rank)).to_string() == rep.weyl_dimension;
    return rep;
}

} // namespace siegel
