#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/weyl.hpp"

#include <map>

using namespace siegel;

namespace {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next()
    {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
};

Weight random_weight(Rng& rng, int g)
{
    std::vector<long long> coords(static_cast<size_t>(g));
    long long sum = 0;
    for (auto& c : coords) {
        c = static_cast<long long>(rng.next() % 9) - 4;
        sum += c;
    }
    long long central = static_cast<long long>(rng.next() % 7) - 3;
    if (((sum - central) % 2 + 2) % 2 != 0)
        ++central;
    return Weight(g, coords, central);
}

// coefficients of prod_{i=1}^{g} (1 + q^i), the Siegel-Kostant length
// generating function
std::vector<long long> gaussian_counts(int g)
{
    std::vector<long long> poly{1};
    for (int i = 1; i <= g; ++i) {
        std::vector<long long> next(poly.size() + static_cast<size_t>(i), 0);
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + static_cast<size_t>(i)] += poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace

TEST_CASE("enumeration sizes")
{
    CHECK(enumerate_weyl(1).size() == 2);
    CHECK(enumerate_weyl(2).size() == 8);
    CHECK(enumerate_weyl(3).size() == 48);
    CHECK_THROWS_AS(enumerate_weyl(9), budget_error);
}

TEST_CASE("group axioms, exhaustive for g <= 3")
{
    for (int g = 1; g <= 3; ++g) {
        auto all = enumerate_weyl(g);
        WeylElement id = WeylElement::identity(g);
        for (const auto& w : all) {
            CHECK(w.compose(id) == w);
            CHECK(id.compose(w) == w);
            CHECK(w.compose(w.inverse()) == id);
        }
        // associativity on a sample
        Rng rng(g * 977);
        for (int t = 0; t < 50; ++t) {
            const auto& a = all[rng.next() % all.size()];
            const auto& b = all[rng.next() % all.size()];
            const auto& c = all[rng.next() % all.size()];
            CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        }
    }
}

TEST_CASE("action is a group action fixing the central coordinate")
{
    Rng rng(0xfeed);
    for (int g = 1; g <= 4; ++g) {
        auto all = enumerate_weyl(std::min(g, 3));
        for (int t = 0; t < 40; ++t) {
            WeylElement v = embed_weyl(all[rng.next() % all.size()], g);
            WeylElement w = embed_weyl(all[rng.next() % all.size()], g);
            Weight mu = random_weight(rng, g);
            CHECK(v.compose(w).act(mu) == v.act(w.act(mu)));
            CHECK(v.act(mu).central() == mu.central());
        }
    }
}

TEST_CASE("lengths")
{
    CHECK(weyl_length(WeylElement::identity(3)) == 0);
    CHECK(weyl_length(WeylElement::longest(2)) == 4);
    for (int g = 1; g <= 4; ++g) {
        // the longest element is unique with length g^2
        int top = 0;
        for (const auto& w : enumerate_weyl(g)) {
            int len = weyl_length(w);
            CHECK(len <= g * g);
            if (len == g * g) {
                ++top;
                CHECK(w == WeylElement::longest(g));
            }
        }
        CHECK(top == 1);
    }
}

TEST_CASE("sign flip elements act as stated")
{
    WeylElement wb = WeylElement::sign_flip(2, 0b01); // flips index 1
    Weight mu(2, {5, 3}, 2);
    CHECK(wb.act(mu) == Weight(2, {5, -3}, 2));
    WeylElement all = WeylElement::longest(2);
    CHECK(all.act(mu) == Weight(2, {-5, -3}, 2));
}

TEST_CASE("siegel kostant representatives")
{
    CosetTable g2 = kostant_reps(2, Parabolic::siegel(2));
    REQUIRE(g2.reps.size() == 4);
    CHECK(g2.lengths == std::vector<int>{0, 1, 2, 3});

    CosetTable g1 = kostant_reps(1, Parabolic::siegel(1));
    REQUIRE(g1.reps.size() == 2);
    CHECK(g1.lengths == std::vector<int>{0, 1});

    for (int g = 1; g <= 4; ++g) {
        CosetTable t = kostant_reps(g, Parabolic::siegel(g));
        CHECK(t.reps.size() == (1u << g));
        std::vector<long long> counts(static_cast<size_t>(d_value(g)) + 1, 0);
        for (int len : t.lengths)
            ++counts[static_cast<size_t>(len)];
        CHECK(counts == gaussian_counts(g));
        CHECK(counts.back() == 1); // exactly one element of length d
    }
}

TEST_CASE("the length-d representative is the coset of -id")
{
    // the element acting by (a_2, a_1; c) -> (-a_2, -a_1; c) lies in the coset
    // of the unique length-3 = d representative
    CosetTable t = kostant_reps(2, Parabolic::siegel(2));
    WeylElement top = t.reps.back();
    REQUIRE(t.lengths.back() == 3);
    bool found = false;
    for (const auto& m : levi_weyl_elements(2, Parabolic::siegel(2)))
        if (m.compose(top) == WeylElement::longest(2))
            found = true;
    CHECK(found);
}

TEST_CASE("maximal parabolic representatives")
{
    CosetTable p1 = kostant_reps(2, Parabolic::maximal(1));
    CHECK(p1.reps.size() == 4); // |W_G| / |W_{M_1}| = 8 / 2

    CosetTable p2 = kostant_reps(2, Parabolic::maximal(2));
    CHECK(p2.reps.size() == 4); // 8 / |S_2|

    for (int g = 2; g <= 4; ++g)
        for (int r = 1; r <= g; ++r) {
            size_t order_g = enumerate_weyl(g).size();
            size_t order_levi = levi_weyl_elements(g, Parabolic::maximal(r)).size();
            CosetTable t = kostant_reps(g, Parabolic::maximal(r));
            CHECK(t.reps.size() == order_g / order_levi);
        }

    CHECK_THROWS_AS(kostant_reps(2, Parabolic::maximal(3)), invalid_input);
    CHECK_THROWS_AS(kostant_reps(2, Parabolic::maximal(0)), invalid_input);
}

TEST_CASE("coset key is constant on cosets and separates them")
{
    for (int g = 1; g <= 3; ++g)
        for (int r = 1; r <= g; ++r) {
            Parabolic p = Parabolic::maximal(r);
            auto levi = levi_weyl_elements(g, p);
            for (const auto& w : enumerate_weyl(g)) {
                // brute-force coset identifier: minimum encoding over the coset
                uint64_t brute = ~0ULL;
                for (const auto& v : levi)
                    brute = std::min(brute, v.compose(w).encode());
                for (const auto& v : levi)
                    CHECK(coset_key(v.compose(w), p) == coset_key(w, p));
                // two elements share the key iff they share the brute id
                for (const auto& u : enumerate_weyl(g)) {
                    uint64_t brute_u = ~0ULL;
                    for (const auto& v : levi)
                        brute_u = std::min(brute_u, v.compose(u).encode());
                    if ((brute_u == brute) != (coset_key(u, p) == coset_key(w, p))) {
                        CHECK(false);
                    }
                }
            }
        }
}

TEST_CASE("dot action")
{
    Weight lam(2, {5, 5}, 10);
    CHECK(dot_action(WeylElement::identity(2), lam) == lam);

    // shifted composition identity (vw)·lambda = v·(w·lambda)
    Rng rng(0xd07);
    auto all = enumerate_weyl(3);
    for (int t = 0; t < 60; ++t) {
        const auto& v = all[rng.next() % all.size()];
        const auto& w = all[rng.next() % all.size()];
        Weight mu = random_weight(rng, 3);
        CHECK(dot_action(v.compose(w), mu) == dot_action(v, dot_action(w, mu)));
    }
}

TEST_CASE("iterated dot action")
{
    Weight lam(3, {2, 1, 0}, 3);
    CHECK(iterated_dot(lam, {}) == lam);

    // single element chain = plain dot action
    for (const auto& w : enumerate_weyl(3))
        CHECK(iterated_dot(lam, {w}) == dot_action(w, lam));

    // nested chains compose: the iterated dot of (w0, w1, w2) with w_r in the
    // embedded W_{G_{g-r}} equals the single dot of the composite, because
    // each deeper element fixes rho - rho_r
    Rng rng(0x17e);
    auto g3 = enumerate_weyl(3);
    auto g2 = enumerate_weyl(2);
    auto g1 = enumerate_weyl(1);
    for (int t = 0; t < 50; ++t) {
        WeylElement w0 = g3[rng.next() % g3.size()];
        WeylElement w1 = embed_weyl(g2[rng.next() % g2.size()], 3);
        WeylElement w2 = embed_weyl(g1[rng.next() % g1.size()], 3);
        Weight mu = random_weight(rng, 3);
        Weight lhs = iterated_dot(mu, {w0, w1, w2});
        Weight rhs = dot_action(w2.compose(w1).compose(w0), mu);
        CHECK(lhs == rhs);
    }

    // chain elements outside the nested subgroup are rejected
    WeylElement flip_top = WeylElement::sign_flip(3, 0b100);
    CHECK_THROWS_AS(iterated_dot(lam, {flip_top, flip_top}), invalid_input);
}

TEST_CASE("embedding")
{
    WeylElement small = WeylElement::longest(2);
    WeylElement big = embed_weyl(small, 4);
    CHECK(big.supported_below(2));
    CHECK_FALSE(WeylElement::longest(4).supported_below(3));
    Weight mu(4, {3, 2, 1, 0}, 6);
    CHECK(big.act(mu) == Weight(4, {3, 2, -1, 0 - 0}, 6));
}
