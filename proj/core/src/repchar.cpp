#include <krchar/memo.hpp>
#include <krchar/repchar.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>

namespace krchar {

// ---------------------------------------------------------------------------
// WeightChar / IsoChar

void WeightChar::add(const Weight& w, Mult m)
{
    if (m == 0)
        return;
    auto [it, inserted] = entries_.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0)
            entries_.erase(it);
    }
}

Mult WeightChar::operator[](const Weight& w) const
{
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

Mult WeightChar::dimension() const
{
    Mult d = 0;
    for (const auto& [w, m] : entries_)
        d += m;
    return d;
}

bool WeightChar::is_genuine() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

bool WeightChar::is_weyl_invariant(const RootSystem& rs) const
{
    for (const auto& [w, m] : entries_) {
        for (int i = 0; i < rs.rank(); ++i) {
            Weight s = w;
            rs.reflect(s, i);
            if ((*this)[s] != m)
                return false;
        }
    }
    return true;
}

std::vector<std::pair<Weight, Mult>> WeightChar::sorted() const
{
    std::vector<std::pair<Weight, Mult>> v(entries_.begin(), entries_.end());
    std::sort(v.begin(), v.end());
    return v;
}

WeightChar& WeightChar::operator+=(const WeightChar& o)
{
    for (const auto& [w, m] : o.entries_)
        add(w, m);
    return *this;
}

WeightChar& WeightChar::operator-=(const WeightChar& o)
{
    for (const auto& [w, m] : o.entries_)
        add(w, -m);
    return *this;
}

WeightChar& WeightChar::operator*=(Mult k)
{
    if (k == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_)
        e.second *= k;
    return *this;
}

WeightChar operator*(const WeightChar& a, const WeightChar& b)
{
    WeightChar out;
    out.entries_.reserve(a.size() + b.size());
    for (const auto& [wa, ma] : a.entries_)
        for (const auto& [wb, mb] : b.entries_)
            out.add(wa + wb, ma * mb);
    return out;
}

void IsoChar::add(const Weight& w, Mult m)
{
    if (m == 0)
        return;
    auto [it, inserted] = entries_.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0)
            entries_.erase(it);
    }
}

Mult IsoChar::operator[](const Weight& w) const
{
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

bool IsoChar::is_genuine() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

Mult IsoChar::dimension(const RootSystem& rs) const
{
    Mult d = 0;
    for (const auto& [w, m] : entries_)
        d += m * weyl_dim(rs, w);
    return d;
}

IsoChar& IsoChar::operator+=(const IsoChar& o)
{
    for (const auto& [w, m] : o.entries_)
        add(w, m);
    return *this;
}

IsoChar& IsoChar::operator*=(Mult k)
{
    if (k == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_)
        e.second *= k;
    return *this;
}

// ---------------------------------------------------------------------------
// ModuleSpec

ModuleSpec::ModuleSpec(std::vector<std::vector<Weight>> components) : components_(std::move(components))
{
    if (components_.empty())
        throw std::invalid_argument("ModuleSpec needs at least one component");
    std::ostringstream key;
    for (auto& comp : components_) {
        std::sort(comp.begin(), comp.end());
        for (const auto& w : comp)
            if (!w.is_dominant())
                throw std::invalid_argument("ModuleSpec: weight " + w.str() + " is not dominant");
        key << '[';
        for (const auto& w : comp)
            key << '(' << w.str() << ')';
        key << ']';
        if (comp != components_.front())
            uniform_ = false;
    }
    key_ = key.str();
}

ModuleSpec ModuleSpec::adjoint(const RootSystem& rs, int ell)
{
    if (ell < 1)
        throw std::invalid_argument("ModuleSpec::adjoint: ell must be positive");
    return ModuleSpec(std::vector<std::vector<Weight>>(static_cast<std::size_t>(ell), {rs.highest_root().weight}));
}

// ---------------------------------------------------------------------------
// memo tables

namespace {

struct TypedWeight {
    LieType type;
    Weight w;
    friend bool operator==(const TypedWeight&, const TypedWeight&) = default;
};
struct TypedWeightHash {
    std::size_t operator()(const TypedWeight& k) const noexcept
    {
        return k.w.hash() * 31 + static_cast<std::size_t>(k.type.family) * 131 + static_cast<std::size_t>(k.type.rank);
    }
};

struct TypedPair {
    LieType type;
    Weight a;
    Weight b;
    friend bool operator==(const TypedPair&, const TypedPair&) = default;
};
struct TypedPairHash {
    std::size_t operator()(const TypedPair& k) const noexcept
    {
        return (k.a.hash() * 1000003u) ^ k.b.hash() ^ (static_cast<std::size_t>(k.type.family) << 7) ^
               static_cast<std::size_t>(k.type.rank);
    }
};

struct Tables {
    BoundedMemo<TypedWeight, std::map<Weight, Mult>, TypedWeightHash> dominant;
    BoundedMemo<TypedWeight, WeightChar, TypedWeightHash> full;
    BoundedMemo<TypedPair, IsoChar, TypedPairHash> tensor;
    BoundedMemo<std::string, WeightChar> powers;
    BoundedMemo<std::string, IsoChar> power_iso;
    BoundedMemo<std::string, IsoChar> rows;
    std::atomic<std::uint64_t> tensor_count{0};

    void for_each_capacity(std::size_t c)
    {
        dominant.set_capacity(c);
        full.set_capacity(c);
        tensor.set_capacity(c);
        powers.set_capacity(c);
        power_iso.set_capacity(c);
        rows.set_capacity(c);
    }
};

Tables& tables()
{
    static Tables t;
    return t;
}

std::string canonical_degree_key(const ModuleSpec& ms, std::vector<int> k)
{
    if (ms.uniform())
        std::sort(k.begin(), k.end(), std::greater<>());
    std::string s;
    for (int x : k) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

void require_dominant(const Weight& w, const char* what)
{
    if (!w.is_dominant())
        throw std::invalid_argument(std::string(what) + ": weight " + w.str() + " is not dominant");
}

void require_rank(const RootSystem& rs, const Weight& w, const char* what)
{
    if (w.rank() != rs.rank())
        throw std::invalid_argument(std::string(what) + ": weight " + w.str() + " has rank " + std::to_string(w.rank()) +
                                    ", algebra " + rs.type().name() + " has rank " + std::to_string(rs.rank()));
}

/// Linear functional strictly positive on every simple root.
std::int64_t height(const RootSystem& rs, const Weight& w)
{
    std::int64_t h = 0;
    for (auto c : rs.scaled_root_coords(w))
        h += c;
    return h;
}

std::map<Weight, Mult> compute_dominant(const RootSystem& rs, const Weight& lambda)
{
    auto weights = dominant_weights_below(rs, lambda);
    std::vector<std::pair<std::int64_t, Weight>> order;
    order.reserve(weights.size());
    for (const auto& mu : weights)
        order.emplace_back(height(rs, lambda - mu), mu);
    std::sort(order.begin(), order.end());

    const Weight rho = rs.rho();
    const Weight lam_rho2 = lambda + rho + rho;
    const auto& lengths = rs.simple_lengths();
    const auto denom = rs.coord_denominator();

    std::map<Weight, Mult> mult;
    mult[lambda] = 1;
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const Weight& mu = order[idx].second;
        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho)
        const auto c = rs.scaled_root_coords(lambda - mu);
        const Weight x = lam_rho2 + mu;
        std::int64_t gap = 0;
        for (int j = 0; j < rs.rank(); ++j)
            gap += c[j] / denom * x[j] * lengths[j];
        gap /= 2;
        if (gap <= 0)
            throw std::logic_error("freudenthal: non-positive denominator at " + mu.str());

        std::int64_t sum = 0;
        for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
            const Weight& alpha = rs.positive_roots()[r].weight;
            Weight xi = mu + alpha;
            for (;;) {
                const Weight dom = dominant_conjugate(rs, xi).dom;
                auto it = mult.find(dom);
                if (it == mult.end())
                    break;
                sum += it->second * rs.pair_with_root(xi, r);
                xi += alpha;
            }
        }
        sum *= 2;
        if (sum % gap != 0)
            throw std::logic_error("freudenthal: non-integral multiplicity at " + mu.str());
        mult[mu] = sum / gap;
    }
    return mult;
}

} // namespace

namespace memo {

void set_capacity(std::size_t entries) { tables().for_each_capacity(entries); }
std::size_t capacity() { return tables().tensor.capacity(); }

void clear()
{
    auto& t = tables();
    t.dominant.clear();
    t.full.clear();
    t.tensor.clear();
    t.powers.clear();
    t.power_iso.clear();
    t.rows.clear();
}

std::uint64_t tensor_evaluations() { return tables().tensor_count.load(); }

std::vector<TensorEntry> tensor_snapshot()
{
    std::vector<TensorEntry> out;
    for (auto& [key, value] : tables().tensor.snapshot())
        out.push_back({key.type, key.a, key.b, value});
    return out;
}

void seed_tensor(const LieType& type, const Weight& lambda, const Weight& nu, IsoChar product)
{
    const auto& [a, b] = std::minmax(lambda, nu);
    tables().tensor.insert({type, a, b}, std::move(product));
}

} // namespace memo

// ---------------------------------------------------------------------------
// characters

std::map<Weight, Mult> dominant_multiplicities(const RootSystem& rs, const Weight& lambda)
{
    require_rank(rs, lambda, "freudenthal");
    require_dominant(lambda, "freudenthal");
    return tables().dominant.get_or_compute({rs.type(), lambda}, [&] { return compute_dominant(rs, lambda); });
}

WeightChar freudenthal(const RootSystem& rs, const Weight& lambda)
{
    require_rank(rs, lambda, "freudenthal");
    require_dominant(lambda, "freudenthal");
    return tables().full.get_or_compute({rs.type(), lambda}, [&] {
        WeightChar ch;
        for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
            for (const auto& w : weyl_orbit(rs, mu))
                ch.add(w, m);
        return ch;
    });
}

IsoChar tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& nu)
{
    require_rank(rs, lambda, "tensor_decompose");
    require_rank(rs, nu, "tensor_decompose");
    require_dominant(lambda, "tensor_decompose");
    require_dominant(nu, "tensor_decompose");
    const auto& [a, b] = std::minmax(lambda, nu);
    auto& t = tables();
    return t.tensor.get_or_compute({rs.type(), a, b}, [&] {
        ++t.tensor_count;
        // Iterate over the weights of the smaller factor; ties go to nu.
        const bool use_nu = weyl_dim(rs, nu) <= weyl_dim(rs, lambda);
        const Weight& top = use_nu ? lambda : nu;
        const WeightChar small = freudenthal(rs, use_nu ? nu : lambda);
        const Weight shift = top + rs.rho();
        IsoChar out;
        for (const auto& [w, m] : small.entries()) {
            auto dc = dominant_conjugate(rs, shift + w);
            if (dc.singular)
                continue;
            out.add(dc.dom - rs.rho(), dc.parity * m);
        }
        if (!out.is_genuine())
            throw std::logic_error("tensor_decompose: negative multiplicity for " + lambda.str() + " x " + nu.str());
        return out;
    });
}

namespace {

WeightChar power_dp(const WeightChar& ch, int k, bool exterior)
{
    if (k < 0)
        throw std::invalid_argument("power: negative degree");
    for (const auto& [w, m] : ch.entries())
        if (m < 0)
            throw std::invalid_argument("power: character has negative multiplicity at " + w.str());
    int rank = ch.empty() ? 0 : ch.entries().begin()->first.rank();
    std::vector<WeightChar> poly(static_cast<std::size_t>(k) + 1);
    poly[0].add(Weight::zero(rank), 1);
    for (const auto& [w, m] : ch.sorted()) {
        for (Mult copy = 0; copy < m; ++copy) {
            if (exterior) {
                for (int j = k; j >= 1; --j)
                    for (const auto& [u, c] : poly[j - 1].entries())
                        poly[j].add(u + w, c);
            } else {
                // ascending: poly[j-1] already carries this factor, giving 1/(1 - x e^w)
                for (int j = 1; j <= k; ++j)
                    for (const auto& [u, c] : poly[j - 1].entries())
                        poly[j].add(u + w, c);
            }
        }
    }
    return poly[static_cast<std::size_t>(k)];
}

} // namespace

WeightChar ext_power(const WeightChar& ch, int k) { return power_dp(ch, k, true); }
WeightChar sym_power(const WeightChar& ch, int k) { return power_dp(ch, k, false); }

IsoChar iso_decompose(const RootSystem& rs, const WeightChar& ch)
{
    if (!ch.is_weyl_invariant(rs))
        throw std::invalid_argument("iso_decompose: character is not Weyl invariant");
    std::map<Weight, Mult> dominant;
    for (const auto& [w, m] : ch.entries()) {
        require_rank(rs, w, "iso_decompose");
        if (w.is_dominant())
            dominant[w] = m;
    }
    IsoChar out;
    while (!dominant.empty()) {
        auto top = dominant.begin();
        std::int64_t best = height(rs, top->first);
        for (auto it = std::next(dominant.begin()); it != dominant.end(); ++it) {
            const auto h = height(rs, it->first);
            if (h > best) {
                best = h;
                top = it;
            }
        }
        const Weight hw = top->first;
        const Mult m = top->second;
        out.add(hw, m);
        for (const auto& [mu, k] : dominant_multiplicities(rs, hw)) {
            auto& slot = dominant[mu];
            slot -= m * k;
            if (slot == 0)
                dominant.erase(mu);
        }
    }
    return out;
}

WeightChar expand(const RootSystem& rs, const IsoChar& iso)
{
    WeightChar ch;
    for (const auto& [mu, m] : iso.entries()) {
        WeightChar part = freudenthal(rs, mu);
        part *= m;
        ch += part;
    }
    return ch;
}

WeightChar component_character(const RootSystem& rs, const ModuleSpec& ms, int j)
{
    if (j < 0 || j >= ms.ell())
        throw std::out_of_range("component index out of range");
    WeightChar ch;
    for (const auto& w : ms.components()[static_cast<std::size_t>(j)]) {
        require_rank(rs, w, "ModuleSpec");
        ch += freudenthal(rs, w);
    }
    return ch;
}

namespace {

WeightChar component_power(const RootSystem& rs, const ModuleSpec& ms, int j, int k, PowerKind kind)
{
    const int slot = ms.uniform() ? 0 : j;
    std::string key = rs.type().name() + '|' + ms.key() + '|' + std::to_string(slot) + '|' + std::to_string(k) +
                      (kind == PowerKind::exterior ? "|E" : "|S");
    return tables().powers.get_or_compute(key, [&] {
        const auto ch = component_character(rs, ms, slot);
        return kind == PowerKind::exterior ? ext_power(ch, k) : sym_power(ch, k);
    });
}

void require_degrees(const ModuleSpec& ms, const std::vector<int>& k)
{
    if (static_cast<int>(k.size()) != ms.ell())
        throw std::invalid_argument("degree vector has length " + std::to_string(k.size()) + ", expected " +
                                    std::to_string(ms.ell()));
    for (int x : k)
        if (x < 0)
            throw std::invalid_argument("degree vector must be nonnegative");
}

} // namespace

IsoChar power_decomposition(const RootSystem& rs, const ModuleSpec& ms, const std::vector<int>& k, PowerKind kind)
{
    require_degrees(ms, k);
    std::string key = rs.type().name() + '|' + ms.key() + '|' + canonical_degree_key(ms, k) +
                      (kind == PowerKind::exterior ? "|E" : "|S");
    return tables().power_iso.get_or_compute(key, [&] {
        WeightChar prod = WeightChar::single(Weight::zero(rs.rank()));
        for (int j = 0; j < ms.ell(); ++j)
            if (k[static_cast<std::size_t>(j)] > 0)
                prod = prod * component_power(rs, ms, j, k[static_cast<std::size_t>(j)], kind);
        return iso_decompose(rs, prod);
    });
}

IsoChar coefficient_row(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const std::vector<int>& k,
                        PowerKind kind)
{
    require_rank(rs, lambda, "coefficient");
    require_dominant(lambda, "coefficient");
    require_degrees(ms, k);
    std::string key = rs.type().name() + '|' + ms.key() + '|' + lambda.str() + '|' + canonical_degree_key(ms, k) +
                      (kind == PowerKind::exterior ? "|E" : "|S");
    return tables().rows.get_or_compute(key, [&] {
        IsoChar out;
        const IsoChar powers = power_decomposition(rs, ms, k, kind);
        for (const auto& [nu, m] : powers.entries()) {
            IsoChar part = tensor_decompose(rs, lambda, nu);
            part *= m;
            out += part;
        }
        return out;
    });
}

Mult c_coefficient(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const Weight& mu,
                   const std::vector<int>& k)
{
    require_dominant(mu, "c_coefficient");
    return coefficient_row(rs, ms, lambda, k, PowerKind::exterior)[mu];
}

Mult sym_coefficient(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const Weight& mu,
                     const std::vector<int>& k)
{
    require_dominant(mu, "sym_coefficient");
    return coefficient_row(rs, ms, lambda, k, PowerKind::symmetric)[mu];
}

} // namespace krchar
