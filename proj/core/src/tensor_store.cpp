#include <krchar/repchar.hpp>
#include <krchar/serialize.hpp>
#include <krchar/tensor_store.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <system_error>
#include <tuple>

namespace krchar {

namespace {

char family_letter(Family f) { return static_cast<char>(f); }

std::string record_key(const LieType& type, const Weight& lambda, const Weight& nu, const Weight& mu)
{
    return std::string(1, family_letter(type.family)) + ',' + std::to_string(type.rank) + '|' + lambda.str() + '|' +
           nu.str() + '|' + mu.str();
}

struct Record {
    LieType type;
    Weight lambda, nu, mu;
    Mult mult = 0;
};

Record parse_record(const std::string& line)
{
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
        throw std::invalid_argument("missing tab separator");
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);

    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto bar = key.find('|', start);
        parts.push_back(key.substr(start, bar == std::string::npos ? bar : bar - start));
        if (bar == std::string::npos)
            break;
        start = bar + 1;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("expected 4 '|'-separated fields");
    const auto comma = parts[0].find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("bad algebra field '" + parts[0] + "'");
    Record r;
    r.type = LieType::parse(parts[0].substr(0, comma) + parts[0].substr(comma + 1));
    r.lambda = parse_weight(parts[1], r.type.rank);
    r.nu = parse_weight(parts[2], r.type.rank);
    r.mu = parse_weight(parts[3], r.type.rank);
    if (!r.lambda.is_dominant() || !r.nu.is_dominant() || !r.mu.is_dominant())
        throw std::invalid_argument("non-dominant weight");
    const auto res = std::from_chars(value.data(), value.data() + value.size(), r.mult);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size() || r.mult <= 0)
        throw std::invalid_argument("bad multiplicity '" + value + "'");
    return r;
}

} // namespace

CacheLoadReport cache_load(const std::filesystem::path& path)
{
    CacheLoadReport report;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return report;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cache: cannot open " + path.string() + " for reading");

    using ProductKey = std::tuple<LieType, Weight, Weight>;
    std::map<ProductKey, IsoChar> products;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            Record r = parse_record(line);
            products[{r.type, r.lambda, r.nu}].add(r.mu, r.mult);
            ++report.records;
        } catch (const std::exception& e) {
            report.warnings.push_back(path.string() + ":" + std::to_string(line_no) + ": skipped (" + e.what() + ")");
        }
    }
    if (in.bad())
        throw std::runtime_error("cache: read error on " + path.string());
    for (auto& [key, iso] : products)
        memo::seed_tensor(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::move(iso));
    report.products = products.size();
    return report;
}

std::size_t cache_store(const std::filesystem::path& path)
{
    std::vector<std::string> lines;
    for (const auto& e : memo::tensor_snapshot())
        for (const auto& [mu, m] : e.product.entries())
            lines.push_back(record_key(e.type, e.lambda, e.nu, mu) + '\t' + std::to_string(m));
    std::sort(lines.begin(), lines.end());

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cache: cannot open " + tmp.string() + " for writing");
        for (const auto& l : lines)
            out << l << '\n';
        out.flush();
        if (!out)
            throw std::runtime_error("cache: write error on " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cache: cannot move cache into place at " + path.string());
    }
    return lines.size();
}

std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::filesystem::path>& flag)
{
    if (const char* env = std::getenv("KRCHAR_CACHE"); env && *env)
        return std::filesystem::path(env);
    return flag;
}

} // namespace krchar
