#include <krchar/memo.hpp>
#include <krchar/poset.hpp>
#include <krchar/rational_lp.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

namespace krchar {

PsiSet PsiSet::from_weights(const RootSystem& rs, std::vector<Weight> elements)
{
    for (const auto& w : elements)
        if (w.rank() != rs.rank() || rs.positive_root_index(-w) < 0)
            throw std::invalid_argument("PsiSet: " + w.str() + " is not a negative root of " + rs.type().name());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PsiSet p;
    p.elements_ = std::move(elements);
    return p;
}

bool PsiSet::contains(const Weight& w) const { return std::binary_search(elements_.begin(), elements_.end(), w); }

std::string PsiSet::key() const
{
    std::string s = "{";
    for (const auto& w : elements_)
        s += "(" + w.str() + ")";
    return s + "}";
}

PsiSet psi_i(const RootSystem& rs, Node i)
{
    if (i.index < 1 || i.index > rs.rank())
        throw std::out_of_range("psi_i: node " + std::to_string(i.index) + " out of range for " + rs.type().name());
    std::vector<Weight> out;
    for (const auto& r : rs.positive_roots())
        if (r.simple_coords[static_cast<std::size_t>(i.index - 1)] == 2)
            out.push_back(-r.weight);
    return PsiSet::from_weights(rs, std::move(out));
}

PsiSet psi_of_mu(const RootSystem& rs, const Weight& mu)
{
    if (mu.rank() != rs.rank() || !mu.is_dominant() || mu.is_zero())
        throw std::invalid_argument("psi_of_mu: need a nonzero dominant weight, got " + mu.str());
    // For dominant mu the minimum of (alpha, mu) over R is -max over R+ of (beta, mu).
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        best = std::max(best, rs.pair_with_root(mu, k));
    std::vector<Weight> out;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        if (rs.pair_with_root(mu, k) == best)
            out.push_back(-rs.positive_roots()[k].weight);
    return PsiSet::from_weights(rs, std::move(out));
}

Node i_lambda(const RootSystem& rs, const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw std::invalid_argument("i_lambda: weight " + lambda.str() + " is not dominant");
    int best = 1;
    for (int i = 1; i <= rs.rank(); ++i)
        if (lambda[i - 1] != 0 && !rs.is_spin_node(Node{i}))
            best = std::max(best, i);
    return Node{best};
}

bool check_polytope_condition(std::span<const Weight> psi, const WeightChar& v_weights)
{
    std::vector<std::vector<int>> on, off;
    for (const auto& w : psi) {
        if (v_weights[w] == 0)
            throw std::invalid_argument("check_polytope_condition: " + w.str() + " is not a weight of V");
        on.push_back(w.to_vector());
    }
    std::size_t dim = 0;
    for (const auto& [w, m] : v_weights.sorted()) {
        dim = static_cast<std::size_t>(w.rank());
        if (std::find(psi.begin(), psi.end(), w) == psi.end())
            off.push_back(w.to_vector());
    }
    if (psi.empty())
        return true;
    return lp::separable_face(on, off, dim);
}

bool check_psi_extra(const RootSystem& rs, std::span<const Weight> psi, const WeightChar& v_weights)
{
    for (const auto& w : psi)
        if (w.is_dominant())
            return false;
    // (wt(V) + Z_+ psi) meets P+ finitely: holds for psi inside -R+, every
    // element lowers the height, so only the first and third clauses need a check.
    for (const auto& w : psi)
        if (rs.positive_root_index(-w) < 0)
            return false;
    for (const auto& [xi, m] : v_weights.entries()) {
        if (!xi.is_dominant())
            continue;
        for (int i = 0; i < rs.rank(); ++i)
            if (std::find(psi.begin(), psi.end(), xi + rs.simple_root(i)) != psi.end())
                return false;
    }
    return true;
}

PsiSet certify(const RootSystem& rs, PsiSet psi, const WeightChar& v_weights)
{
    const bool face = check_polytope_condition(psi.elements(), v_weights);
    const bool extra = check_psi_extra(rs, psi.elements(), v_weights);
    psi.mark_checked(face, extra);
    return psi;
}

namespace {

BoundedMemo<std::string, std::optional<int>>& distance_memo()
{
    static BoundedMemo<std::string, std::optional<int>> m;
    return m;
}

std::optional<int> shortest_sum(const RootSystem& rs, const PsiSet& psi, const Weight& drop)
{
    // drop = lambda - mu must be a Z_+ combination of the positive roots -psi.
    const auto denom = rs.coord_denominator();
    std::vector<std::int64_t> target = rs.scaled_root_coords(drop);
    for (auto& c : target) {
        if (c < 0 || c % denom != 0)
            return std::nullopt;
        c /= denom;
    }
    if (std::all_of(target.begin(), target.end(), [](auto c) { return c == 0; }))
        return 0;
    if (psi.empty())
        return std::nullopt;

    const std::size_t n = target.size();
    std::vector<std::vector<int>> steps;
    for (const auto& w : psi.elements())
        steps.push_back(rs.positive_roots()[static_cast<std::size_t>(rs.positive_root_index(-w))].simple_coords);

    // Mixed-radix encoding of the box 0 <= v <= target.
    std::vector<std::size_t> radix(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i)
        radix[i + 1] = radix[i] * static_cast<std::size_t>(target[i] + 1);
    const std::size_t states = radix[n];
    if (states > (std::size_t{1} << 26))
        throw std::length_error("d_psi: search space too large");
    std::vector<std::int64_t> step_code;
    for (const auto& s : steps) {
        std::int64_t code = 0;
        for (std::size_t i = 0; i < n; ++i)
            code += static_cast<std::int64_t>(s[i]) * static_cast<std::int64_t>(radix[i]);
        step_code.push_back(code);
    }
    std::size_t goal = 0;
    for (std::size_t i = 0; i < n; ++i)
        goal += static_cast<std::size_t>(target[i]) * radix[i];

    std::vector<int> dist(states, -1);
    std::deque<std::size_t> queue{0};
    dist[0] = 0;
    std::vector<int> digits(n);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (cur == goal)
            return dist[cur];
        std::size_t rest = cur;
        for (std::size_t i = 0; i < n; ++i) {
            digits[i] = static_cast<int>(rest % static_cast<std::size_t>(target[i] + 1));
            rest /= static_cast<std::size_t>(target[i] + 1);
        }
        for (std::size_t s = 0; s < steps.size(); ++s) {
            bool fits = true;
            for (std::size_t i = 0; i < n && fits; ++i)
                fits = digits[i] + steps[s][i] <= target[i];
            if (!fits)
                continue;
            const std::size_t next = cur + static_cast<std::size_t>(step_code[s]);
            if (dist[next] >= 0)
                continue;
            dist[next] = dist[cur] + 1;
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<int> d_psi(const RootSystem& rs, const PsiSet& psi, const Weight& lambda, const Weight& mu)
{
    const Weight drop = lambda - mu;
    const std::string key = rs.type().name() + psi.key() + drop.str();
    return distance_memo().get_or_compute(key, [&] { return shortest_sum(rs, psi, drop); });
}

bool covers(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& upper, const LambdaPoint& lower)
{
    if (upper.degree.ell() != lower.degree.ell() || upper.degree.ell() != ms.ell())
        return false;
    const MultiDegree diff = upper.degree - lower.degree;
    if (!diff.nonnegative() || diff.deg() != 1)
        return false; // a[s-r] = 0 in degree 0 (s = r) and in degree > 1
    int j = 0;
    while (diff[j] == 0)
        ++j;
    return component_character(rs, ms, j)[upper.weight - lower.weight] != 0;
}

bool leq_psi(const RootSystem& rs, const PsiSet& psi, const LambdaPoint& a, const LambdaPoint& b)
{
    if (a.degree.ell() != b.degree.ell())
        return false;
    const MultiDegree diff = b.degree - a.degree;
    if (!diff.nonnegative())
        return false;
    const auto d = d_psi(rs, psi, a.weight, b.weight);
    return d && *d == diff.deg();
}

std::optional<std::size_t> GammaSet::index_of(const LambdaPoint& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Weight> GammaSet::weights() const
{
    std::vector<Weight> out;
    for (const auto& p : points_)
        if (std::find(out.begin(), out.end(), p.weight) == out.end())
            out.push_back(p.weight);
    return out;
}

GammaSet make_gamma_set(LambdaPoint base, PsiSet psi, std::vector<LambdaPoint> points, std::map<Weight, int> d_of)
{
    GammaSet g;
    g.base_ = std::move(base);
    g.psi_ = std::move(psi);
    g.points_ = std::move(points);
    g.d_of_ = std::move(d_of);
    for (std::size_t i = 0; i < g.points_.size(); ++i)
        g.index_.emplace(g.points_[i], i);
    return g;
}

GammaSet gamma_psi(const RootSystem& rs, const PsiSet& psi, const LambdaPoint& base, bool allow_unchecked)
{
    if (!allow_unchecked && !(psi.polytope_checked() && psi.extra_checked()))
        throw std::invalid_argument("gamma_psi: psi " + psi.key() + " has not passed the face and extra conditions");
    if (!base.weight.is_dominant())
        throw std::invalid_argument("gamma_psi: base weight " + base.weight.str() + " is not dominant");
    const int ell = base.degree.ell();
    if (ell < 1)
        throw std::invalid_argument("gamma_psi: ell must be positive");

    struct Item {
        int d;
        LambdaPoint p;
    };
    std::vector<Item> items;
    std::map<Weight, int> d_of;
    for (const auto& mu : dominant_weights_below(rs, base.weight)) {
        const auto d = d_psi(rs, psi, base.weight, mu);
        if (!d)
            continue;
        d_of[mu] = *d;
        for (auto& r : compositions(ell, *d))
            items.push_back({*d, {mu, base.degree + r}});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return std::tie(a.d, a.p.weight, a.p.degree) < std::tie(b.d, b.p.weight, b.p.degree);
    });
    std::vector<LambdaPoint> points;
    points.reserve(items.size());
    for (auto& it : items)
        points.push_back(std::move(it.p));
    return make_gamma_set(base, psi, std::move(points), std::move(d_of));
}

PsiSet adjoint_psi_lambda(const RootSystem& rs, const Weight& lambda)
{
    static BoundedMemo<std::string, PsiSet> certified;
    const Node node = i_lambda(rs, lambda);
    const std::string key = rs.type().name() + "#" + std::to_string(node.index);
    return certified.get_or_compute(key, [&] {
        return certify(rs, psi_i(rs, node), freudenthal(rs, rs.highest_root().weight));
    });
}

} // namespace krchar
