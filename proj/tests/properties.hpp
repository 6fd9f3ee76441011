#pragma once

// Property checks shared by the unit tests and the acceptance runner.  Each
// returns an empty string on success and a description of the first
// counterexample otherwise.

#include "oracles.hpp"

#include <numeric>
#include <random>
#include <string>

namespace props {

using namespace krchar;

inline std::string vec_str(const oracle::Vec& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return "(" + out + ")";
}

inline std::vector<Weight> box_weights(int rank, int max_coord)
{
    std::vector<Weight> out;
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    for (;;) {
        out.emplace_back(c);
        int i = 0;
        while (i < rank && c[static_cast<std::size_t>(i)] == max_coord)
            c[static_cast<std::size_t>(i++)] = 0;
        if (i == rank)
            return out;
        ++c[static_cast<std::size_t>(i)];
    }
}

/// Racah-Speiser against the product of Freudenthal characters, for every
/// pair of dominant weights with coordinates <= max_coord in each rank-2 type.
inline std::string tensor_vs_convolution(int max_coord, std::size_t* pairs = nullptr)
{
    std::size_t count = 0;
    for (const auto& name : {"A2", "B2", "C2"}) {
        const auto rs = build_root_system(LieType::parse(name));
        const auto ws = box_weights(2, max_coord);
        std::map<Weight, oracle::Char> chars;
        for (const auto& w : ws)
            chars[w] = oracle::to_map(freudenthal(rs, w));
        for (std::size_t a = 0; a < ws.size(); ++a)
            for (std::size_t b = a; b < ws.size(); ++b) {
                ++count;
                const auto want = oracle::convolve(chars[ws[a]], chars[ws[b]]);
                const auto got = oracle::to_map(expand(rs, tensor_decompose(rs, ws[a], ws[b])));
                if (got != want)
                    return std::string(name) + " " + ws[a].str() + " x " + ws[b].str() + ": character mismatch";
            }
    }
    if (pairs)
        *pairs = count;
    return {};
}

/// dim V(lambda) * dim V(nu) = sum mult(mu) dim V(mu) on random pairs.
inline std::string dimension_conservation(int samples, unsigned seed)
{
    std::mt19937 rng(seed);
    const auto types = oracle::classical_types(5);
    std::uniform_int_distribution<std::size_t> pick_type(0, types.size() - 1);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int k = 0; k < samples; ++k) {
        const auto& t = types[pick_type(rng)];
        const auto rs = build_root_system(t);
        Weight l(t.rank), n(t.rank);
        for (int i = 0; i < t.rank; ++i) {
            l.set(i, coord(rng));
            n.set(i, coord(rng));
        }
        const auto iso = tensor_decompose(rs, l, n);
        if (!iso.is_genuine() || iso.dimension(rs) != weyl_dim(rs, l) * weyl_dim(rs, n))
            return t.name() + " " + l.str() + " x " + n.str() + ": dimension mismatch";
    }
    return {};
}

/// Every positive root beta and node j with beta_j = 2, or beta_j = 1 and
/// height > 1, splits as beta = b1 + b2 with (b1_j, b2_j) = (1, 1) resp. (0, 1).
inline std::string root_splitting(int max_rank, std::size_t* checked = nullptr)
{
    std::size_t count = 0;
    for (const auto& t : oracle::classical_types(max_rank)) {
        const auto all = oracle::positive_roots_simple_coords(t);
        const std::set<oracle::Vec> roots(all.begin(), all.end());
        for (const auto& beta : roots) {
            const int height = std::accumulate(beta.begin(), beta.end(), 0);
            for (std::size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] != 2 && !(beta[j] == 1 && height > 1))
                    continue;
                ++count;
                bool found = false;
                for (const auto& b1 : roots) {
                    oracle::Vec b2(beta.size());
                    bool ok = true;
                    for (std::size_t k = 0; k < beta.size(); ++k) {
                        b2[k] = beta[k] - b1[k];
                        ok = ok && b2[k] >= 0;
                    }
                    if (!ok || !roots.count(b2))
                        continue;
                    found = beta[j] == 2 ? (b1[j] == 1 && b2[j] == 1) : (b1[j] == 0 && b2[j] == 1);
                    if (found)
                        break;
                }
                if (!found)
                    return t.name() + ": no split for beta=" + vec_str(beta) + " at node " +
                           std::to_string(j + 1);
            }
        }
    }
    if (checked)
        *checked = count;
    return {};
}

/// d(a, b) + d(b, c) = d(a, c) for every chain a >= b >= c of weights in each Gamma.
inline std::string d_psi_additivity(const std::vector<oracle::Case>& cases, std::size_t* chains = nullptr)
{
    std::size_t count = 0;
    for (const auto& c : cases) {
        const auto rs = build_root_system(c.type);
        const auto gamma = kr_gamma(rs, c.lambda, c.ell);
        const auto ws = gamma.weights();
        for (const auto& a : ws)
            for (const auto& b : ws) {
                const auto ab = d_psi(rs, gamma.psi(), a, b);
                if (!ab)
                    continue;
                for (const auto& x : ws) {
                    const auto bx = d_psi(rs, gamma.psi(), b, x);
                    if (!bx)
                        continue;
                    ++count;
                    const auto ax = d_psi(rs, gamma.psi(), a, x);
                    if (ax != *ab + *bx)
                        return c.type.name() + " Gamma(" + c.lambda.str() + "): chain " + a.str() + " > " + b.str() +
                               " > " + x.str() + " is not additive";
                }
            }
    }
    if (chains)
        *chains = count;
    return {};
}

} // namespace props
