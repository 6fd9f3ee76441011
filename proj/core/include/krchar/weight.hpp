#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace krchar {

inline constexpr int kMaxRank = 16;

/// Integral weight in fundamental-weight coordinates: xi = sum coords[i] * omega_{i+1}.
///
/// Fixed capacity so that weights can be hashed and copied without allocation;
/// the hot loops of the character code create millions of them.  Unused
/// coordinates are always zero, which keeps the defaulted comparison
/// lexicographic within a rank.
class Weight {
public:
    Weight() = default;

    explicit Weight(int rank) : rank_(static_cast<std::uint8_t>(check_rank(rank))) {}

    Weight(std::initializer_list<int> coords) : Weight(std::span<const int>(coords.begin(), coords.size())) {}

    explicit Weight(std::span<const int> coords) : rank_(static_cast<std::uint8_t>(check_rank(static_cast<int>(coords.size()))))
    {
        for (int i = 0; i < rank(); ++i)
            c_[i] = narrow(coords[i]);
    }

    explicit Weight(const std::vector<int>& coords) : Weight(std::span<const int>(coords)) {}

    int rank() const { return rank_; }
    int operator[](int i) const { return c_[i]; }
    void set(int i, int value) { c_[i] = narrow(value); }
    void add(int i, int delta) { c_[i] = narrow(c_[i] + delta); }

    bool is_dominant() const
    {
        return std::all_of(c_.begin(), c_.begin() + rank_, [](auto x) { return x >= 0; });
    }
    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.begin() + rank_, [](auto x) { return x == 0; });
    }

    std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

    Weight& operator+=(const Weight& o)
    {
        for (int i = 0; i < rank_; ++i)
            c_[i] = narrow(c_[i] + o.c_[i]);
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (int i = 0; i < rank_; ++i)
            c_[i] = narrow(c_[i] - o.c_[i]);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a)
    {
        for (int i = 0; i < a.rank_; ++i)
            a.c_[i] = static_cast<Coord>(-a.c_[i]);
        return a;
    }
    friend Weight operator*(int k, Weight a)
    {
        for (int i = 0; i < a.rank_; ++i)
            a.c_[i] = narrow(k * a.c_[i]);
        return a;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::size_t hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ull ^ rank_;
        for (int i = 0; i < rank_; ++i) {
            h ^= static_cast<std::uint16_t>(c_[i]);
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    /// Comma separated coordinates, e.g. "0,0,2,0,0".
    std::string str() const
    {
        std::string s;
        for (int i = 0; i < rank_; ++i) {
            if (i)
                s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    static Weight zero(int rank) { return Weight(rank); }
    static Weight unit(int rank, int i)
    {
        Weight w(rank);
        w.c_[i] = 1;
        return w;
    }

private:
    using Coord = std::int16_t;

    static int check_rank(int r)
    {
        if (r < 0 || r > kMaxRank)
            throw std::invalid_argument("weight rank out of range: " + std::to_string(r));
        return r;
    }
    static Coord narrow(int v)
    {
        if (v < -32768 || v > 32767)
            throw std::overflow_error("weight coordinate overflow");
        return static_cast<Coord>(v);
    }

    std::array<Coord, kMaxRank> c_{};
    std::uint8_t rank_ = 0;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

/// Element of Z^ell: the multidegree r of a graded piece, deg(r) = sum r_j.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(int ell) : r_(static_cast<std::size_t>(ell), 0) {}
    MultiDegree(std::initializer_list<int> r) : r_(r) {}
    explicit MultiDegree(std::vector<int> r) : r_(std::move(r)) {}

    static MultiDegree unit(int ell, int j)
    {
        MultiDegree d(ell);
        d.r_[static_cast<std::size_t>(j)] = 1;
        return d;
    }

    int ell() const { return static_cast<int>(r_.size()); }
    int operator[](int j) const { return r_[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return r_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& values() const { return r_; }

    int deg() const
    {
        int d = 0;
        for (int x : r_)
            d += x;
        return d;
    }
    /// Componentwise r >= 0.
    bool nonnegative() const
    {
        return std::all_of(r_.begin(), r_.end(), [](int x) { return x >= 0; });
    }
    bool is_zero() const
    {
        return std::all_of(r_.begin(), r_.end(), [](int x) { return x == 0; });
    }

    MultiDegree& operator+=(const MultiDegree& o)
    {
        require_same(o);
        for (std::size_t j = 0; j < r_.size(); ++j)
            r_[j] += o.r_[j];
        return *this;
    }
    MultiDegree& operator-=(const MultiDegree& o)
    {
        require_same(o);
        for (std::size_t j = 0; j < r_.size(); ++j)
            r_[j] -= o.r_[j];
        return *this;
    }
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    std::string str() const
    {
        std::string s;
        for (std::size_t j = 0; j < r_.size(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(r_[j]);
        }
        return s;
    }

private:
    void require_same(const MultiDegree& o) const
    {
        if (o.r_.size() != r_.size())
            throw std::invalid_argument("multidegree length mismatch");
    }

    std::vector<int> r_;
};

/// All r in Z_+^ell with deg(r) = d, in lexicographically decreasing order.
std::vector<MultiDegree> compositions(int ell, int d);

} // namespace krchar
