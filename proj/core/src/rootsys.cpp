#include <krchar/rootsys.hpp>

#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace krchar {

namespace {

using boost::multiprecision::cpp_int;

std::vector<std::vector<int>> cartan_matrix(LieType t)
{
    const int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        a[n - 2][n - 1] = -2;
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        a[n - 1][n - 2] = -2;
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        link(n - 3, n - 1);
        break;
    }
    return a;
}

std::vector<int> simple_root_lengths(LieType t)
{
    const int n = t.rank;
    std::vector<int> len(n, 2);
    if (t.family == Family::B)
        for (int i = 0; i + 1 < n; ++i)
            len[i] = 4;
    if (t.family == Family::C)
        len[n - 1] = 4;
    return len;
}

/// Exact inverse of a small integer matrix.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::logic_error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col])
            x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

std::int64_t lcm_of_denominators(const std::vector<std::vector<Rational>>& m)
{
    cpp_int l = 1;
    for (const auto& row : m)
        for (const auto& x : row)
            l = boost::multiprecision::lcm(l, cpp_int(denominator(x)));
    return l.convert_to<std::int64_t>();
}

} // namespace

LieType LieType::parse(std::string_view text)
{
    if (text.size() < 2)
        throw std::invalid_argument("algebra '" + std::string(text) + "': expected a family letter and a rank, e.g. D5");
    LieType t;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    default:
        throw std::invalid_argument("algebra '" + std::string(text) + "': unsupported family '" + std::string(1, text[0]) +
                                    "' (expected A, B, C or D)");
    }
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("algebra '" + std::string(text) + "': bad rank character at position " +
                                        std::to_string(i));
        rank = rank * 10 + (text[i] - '0');
        if (rank > kMaxRank)
            throw std::invalid_argument("algebra '" + std::string(text) + "': rank exceeds " + std::to_string(kMaxRank));
    }
    t.rank = rank;
    t.validate();
    return t;
}

void LieType::validate() const
{
    int min_rank = 1;
    if (family == Family::B || family == Family::C)
        min_rank = 2;
    if (family == Family::D)
        min_rank = 4;
    if (rank < min_rank || rank > kMaxRank)
        throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " +
                                    std::string(1, static_cast<char>(family)));
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

RootSystem RootSystem::build(LieType type)
{
    type.validate();
    RootSystem rs;
    rs.type_ = type;
    const int n = type.rank;
    rs.cartan_ = cartan_matrix(type);
    rs.lengths_ = simple_root_lengths(type);
    for (int i = 0; i < n; ++i)
        rs.simple_roots_.emplace_back(rs.cartan_[i]);

    // Positive roots by root strings: beta + alpha_i is a root iff
    // p = q - <beta, alpha_i^vee> > 0, where q is the largest k with beta - k alpha_i a root.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < n; ++i) {
        std::vector<int> m(n, 0);
        m[i] = 1;
        level.push_back(m);
        known.insert(m);
    }
    std::vector<std::vector<int>> all;
    while (!level.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : level) {
            all.push_back(beta);
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += beta[j] * rs.cartan_[j][i];
                int q = 0;
                auto down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down))
                        break;
                    ++q;
                }
                if (q - pairing <= 0)
                    continue;
                auto up = beta;
                up[i] += 1;
                if (known.insert(up).second)
                    next.push_back(up);
            }
        }
        level = std::move(next);
    }

    for (auto& m : all) {
        Root r;
        r.simple_coords = m;
        r.height = std::accumulate(m.begin(), m.end(), 0);
        Weight w(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                w.add(i, m[j] * rs.cartan_[j][i]);
        r.weight = w;
        rs.roots_.push_back(std::move(r));
    }
    std::stable_sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height)
            return a.height < b.height;
        return a.simple_coords > b.simple_coords;
    });
    rs.highest_ = rs.roots_.size() - 1;

    // (omega_i, beta) = m_i (alpha_i, alpha_i) / 2
    for (const auto& r : rs.roots_) {
        std::vector<std::int64_t> p(n);
        for (int i = 0; i < n; ++i)
            p[i] = static_cast<std::int64_t>(r.simple_coords[i]) * rs.lengths_[i] / 2;
        rs.root_pairing_.push_back(std::move(p));
    }

    // K = (cartan^T)^{-1} maps weight coordinates to root coordinates.
    std::vector<std::vector<int>> ct(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ct[i][j] = rs.cartan_[j][i];
    const auto k = invert(ct);
    rs.denom_ = lcm_of_denominators(k);
    rs.adj_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.adj_[i][j] = Rational(k[i][j] * rs.denom_).convert_to<std::int64_t>();

    // (omega_i, omega_j) = sum_a K[a][j] (omega_i, alpha_a) = K[i][j] len_i / 2
    rs.form_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.form_[i][j] = k[i][j] * Rational(rs.lengths_[i], 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.form_[i][j] != rs.form_[j][i])
                throw std::logic_error("symmetric form is not symmetric for " + type.name());
    rs.form_scale_ = lcm_of_denominators(rs.form_);
    rs.scaled_form_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.scaled_form_[i][j] = Rational(rs.form_[i][j] * rs.form_scale_).convert_to<std::int64_t>();
    return rs;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const
{
    return Rational(scaled_form(a, b), form_scale_);
}

std::int64_t RootSystem::scaled_form(const Weight& a, const Weight& b) const
{
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        std::int64_t row = 0;
        for (int j = 0; j < rank(); ++j)
            row += scaled_form_[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

std::int64_t RootSystem::pair_with_root(const Weight& xi, std::size_t root_index) const
{
    const auto& p = root_pairing_[root_index];
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i)
        s += xi[i] * p[i];
    return s;
}

Weight RootSystem::rho() const
{
    Weight r(rank());
    for (int i = 0; i < rank(); ++i)
        r.set(i, 1);
    return r;
}

bool RootSystem::is_spin_node(Node node) const
{
    const int n = rank();
    switch (type_.family) {
    case Family::B: return node.index == n;
    case Family::D: return node.index == n || node.index == n - 1;
    default: return false;
    }
}

void RootSystem::reflect(Weight& xi, int i) const
{
    const int c = xi[i];
    if (c == 0)
        return;
    const auto& row = cartan_[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank(); ++j)
        if (row[j] != 0)
            xi.add(j, -c * row[j]);
}

std::vector<std::int64_t> RootSystem::scaled_root_coords(const Weight& xi) const
{
    const int n = rank();
    std::vector<std::int64_t> c(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[i] += adj_[i][j] * xi[j];
    return c;
}

bool RootSystem::in_positive_cone(const Weight& xi) const
{
    for (auto c : scaled_root_coords(xi))
        if (c < 0 || c % denom_ != 0)
            return false;
    return true;
}

int RootSystem::positive_root_index(const Weight& beta) const
{
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if (roots_[k].weight == beta)
            return static_cast<int>(k);
    return -1;
}

DominantConjugate dominant_conjugate(const RootSystem& rs, Weight xi)
{
    DominantConjugate out;
    const int n = rs.rank();
    for (;;) {
        int i = 0;
        while (i < n && xi[i] >= 0)
            ++i;
        if (i == n)
            break;
        rs.reflect(xi, i);
        out.parity = -out.parity;
    }
    for (int i = 0; i < n; ++i)
        if (xi[i] == 0)
            out.singular = true;
    out.dom = xi;
    return out;
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw std::invalid_argument("weyl_dim: weight " + lambda.str() + " is not dominant");
    const Weight shifted = lambda + rs.rho();
    const Weight rho = rs.rho();
    cpp_int num = 1, den = 1;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        num *= rs.pair_with_root(shifted, k);
        den *= rs.pair_with_root(rho, k);
    }
    if (num % den != 0)
        throw std::logic_error("weyl_dim: non-integral dimension");
    const cpp_int q = num / den;
    if (q > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("weyl_dim: dimension exceeds 64 bits");
    return q.convert_to<std::int64_t>();
}

RootCoords root_coords(const RootSystem& rs, const Weight& xi)
{
    RootCoords out;
    for (auto c : rs.scaled_root_coords(xi)) {
        Rational q(c, rs.coord_denominator());
        if (denominator(q) != 1)
            out.integral = false;
        out.coords.push_back(q);
    }
    return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant)
{
    std::vector<Weight> orbit{dominant};
    std::unordered_set<Weight, WeightHash> seen{dominant};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (int i = 0; i < rs.rank(); ++i) {
            if (orbit[head][i] <= 0)
                continue;
            Weight w = orbit[head];
            rs.reflect(w, i);
            if (seen.insert(w).second)
                orbit.push_back(w);
        }
    }
    return orbit;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw std::invalid_argument("dominant_weights_below: " + lambda.str() + " is not dominant");
    // Every dominant mu < lambda is reached from lambda through dominant
    // weights by subtracting positive roots one at a time.
    std::vector<Weight> out{lambda};
    std::unordered_set<Weight, WeightHash> seen{lambda};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& r : rs.positive_roots()) {
            Weight w = out[head] - r.weight;
            if (!w.is_dominant() || seen.count(w))
                continue;
            seen.insert(w);
            out.push_back(w);
        }
    }
    return out;
}

std::vector<MultiDegree> compositions(int ell, int d)
{
    std::vector<MultiDegree> out;
    if (ell <= 0 || d < 0)
        return out;
    MultiDegree cur(ell);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == ell - 1) {
            cur[j] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[j] = v;
            self(self, j + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace krchar
