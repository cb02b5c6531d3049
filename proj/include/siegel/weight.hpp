#pragma once

#include "siegel/error.hpp"
#include "siegel/rational.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace siegel {

// Element of X*(T) ⊗ (1/2)Z for T the diagonal torus of GSp(2g).
// Coordinates are stored doubled so that everything stays integral; the
// display order is (m_g, ..., m_1; m_c) as in the root-datum identification
// M ⊂ Z^g x Z. No parity constraint: this lattice holds rho, the minuscule
// weight and arbitrary sums/differences.
class HalfWeight {
public:
    HalfWeight() = default;
    HalfWeight(int g, std::vector<long long> two_coords_display, long long two_central)
        : g_(g), two_coords_(std::move(two_coords_display)), two_central_(two_central)
    {
        if (g_ < 1 || two_coords_.size() != static_cast<size_t>(g_))
            throw invalid_input("HalfWeight: coordinate count must equal g >= 1");
    }

    static HalfWeight integral(int g, const std::vector<long long>& coords_display, long long central)
    {
        std::vector<long long> doubled(coords_display.size());
        for (size_t i = 0; i < coords_display.size(); ++i)
            doubled[i] = 2 * coords_display[i];
        return HalfWeight(g, std::move(doubled), 2 * central);
    }

    int g() const { return g_; }

    // subscript access, i in [1, g]
    long long two_m(int i) const { return two_coords_[static_cast<size_t>(g_ - i)]; }
    long long& two_m(int i) { return two_coords_[static_cast<size_t>(g_ - i)]; }
    long long two_central() const { return two_central_; }

    Rational m(int i) const { return Rational(two_m(i), 2); }
    Rational central() const { return Rational(two_central_, 2); }

    const std::vector<long long>& two_coords_display() const { return two_coords_; }

    bool is_integral() const
    {
        if (two_central_ % 2 != 0)
            return false;
        for (long long c : two_coords_)
            if (c % 2 != 0)
                return false;
        return true;
    }

    long long two_semisimple_sum() const
    {
        return std::accumulate(two_coords_.begin(), two_coords_.end(), 0LL);
    }

    friend HalfWeight operator+(const HalfWeight& a, const HalfWeight& b)
    {
        check_same_g(a, b);
        HalfWeight r = a;
        for (size_t i = 0; i < r.two_coords_.size(); ++i)
            r.two_coords_[i] += b.two_coords_[i];
        r.two_central_ += b.two_central_;
        return r;
    }
    friend HalfWeight operator-(const HalfWeight& a, const HalfWeight& b)
    {
        check_same_g(a, b);
        HalfWeight r = a;
        for (size_t i = 0; i < r.two_coords_.size(); ++i)
            r.two_coords_[i] -= b.two_coords_[i];
        r.two_central_ -= b.two_central_;
        return r;
    }
    friend bool operator==(const HalfWeight& a, const HalfWeight& b)
    {
        return a.g_ == b.g_ && a.two_coords_ == b.two_coords_ && a.two_central_ == b.two_central_;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < two_coords_.size(); ++i) {
            if (i)
                s += ",";
            s += Rational(two_coords_[i], 2).to_string();
        }
        s += ";" + Rational(two_central_, 2).to_string() + ")";
        return s;
    }

private:
    int g_ = 0;
    std::vector<long long> two_coords_; // display order: index 0 holds m_g
    long long two_central_ = 0;

    static void check_same_g(const HalfWeight& a, const HalfWeight& b)
    {
        if (a.g_ != b.g_)
            throw invalid_input("HalfWeight: mixing different genera");
    }
};

// Integral character (m_g, ..., m_1; m_c) of the diagonal torus of GSp(2g),
// with the parity constraint m_c = m_1 + ... + m_g (mod 2) enforced at
// construction.
class Weight {
public:
    Weight() = default;
    Weight(int g, std::vector<long long> coords_display, long long central)
        : g_(g), coords_(std::move(coords_display)), central_(central)
    {
        if (g_ < 1 || coords_.size() != static_cast<size_t>(g_))
            throw invalid_input("Weight: coordinate count must equal g >= 1");
        long long sum = std::accumulate(coords_.begin(), coords_.end(), 0LL);
        if (((sum - central_) % 2 + 2) % 2 != 0)
            throw invalid_input("Weight: parity violation, central " + std::to_string(central_)
                                + " vs semisimple sum " + std::to_string(sum) + " (mod 2)");
    }

    static Weight from_half(const HalfWeight& h)
    {
        if (!h.is_integral())
            throw invalid_input("Weight: not integral: " + h.to_string());
        std::vector<long long> c(h.two_coords_display().size());
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = h.two_coords_display()[i] / 2;
        return Weight(h.g(), std::move(c), h.two_central() / 2);
    }

    int g() const { return g_; }
    long long m(int i) const { return coords_[static_cast<size_t>(g_ - i)]; } // i in [1,g]
    long long central() const { return central_; }
    const std::vector<long long>& coords_display() const { return coords_; }

    long long semisimple_sum() const
    {
        return std::accumulate(coords_.begin(), coords_.end(), 0LL);
    }

    bool is_dominant() const
    {
        for (size_t i = 0; i + 1 < coords_.size(); ++i)
            if (coords_[i] < coords_[i + 1])
                return false;
        return coords_.back() >= 0;
    }

    HalfWeight half() const { return HalfWeight::integral(g_, coords_, central_); }

    friend bool operator==(const Weight& a, const Weight& b)
    {
        return a.g_ == b.g_ && a.coords_ == b.coords_ && a.central_ == b.central_;
    }
    friend bool operator<(const Weight& a, const Weight& b)
    {
        if (a.g_ != b.g_)
            return a.g_ < b.g_;
        if (a.coords_ != b.coords_)
            return a.coords_ < b.coords_;
        return a.central_ < b.central_;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(coords_[i]);
        }
        s += ";" + std::to_string(central_) + ")";
        return s;
    }

private:
    int g_ = 0;
    std::vector<long long> coords_; // display order: index 0 holds m_g
    long long central_ = 0;
};

} // namespace siegel
