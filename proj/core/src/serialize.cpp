#include <krchar/serialize.hpp>

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

namespace krchar {

using nlohmann::json;

namespace {

json weight_json(const Weight& w) { return json(w.to_vector()); }

std::vector<int> int_array(const json& j, std::size_t expected, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array");
    if (j.size() != expected)
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                                    std::to_string(expected));
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

json parse_document(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& doc, const char* name)
{
    if (!doc.is_object() || !doc.contains(name))
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return doc.at(name);
}

LieType algebra_of(const json& doc)
{
    const json& a = field(doc, "algebra");
    if (!a.is_string())
        throw std::invalid_argument("\"algebra\" must be a string");
    return LieType::parse(a.get<std::string>());
}

int ell_of(const json& doc)
{
    const json& e = field(doc, "ell");
    if (!e.is_number_integer() || e.get<int>() < 1)
        throw std::invalid_argument("\"ell\" must be a positive integer");
    return e.get<int>();
}

Weight weight_of(const json& j, int rank) { return Weight(int_array(j, static_cast<std::size_t>(rank), "weight")); }
MultiDegree degree_of(const json& j, int ell) { return MultiDegree(int_array(j, static_cast<std::size_t>(ell), "degree")); }

std::string degree_latex(const MultiDegree& r)
{
    std::string out;
    for (int j = 0; j < r.ell(); ++j) {
        if (r[j] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += "t_" + std::to_string(j + 1);
        if (r[j] != 1)
            out += "^{" + std::to_string(r[j]) + "}";
    }
    return out;
}

std::string error_at(std::string_view text, std::size_t pos, std::string_view token, std::string_view why)
{
    return "invalid token '" + std::string(token) + "' at position " + std::to_string(pos) + " in '" +
           std::string(text) + "': " + std::string(why);
}

std::vector<int> parse_int_list(std::string_view text, std::size_t offset, std::string_view whole)
{
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        int value = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw std::invalid_argument(error_at(whole, offset + start, tok, "expected an integer"));
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

std::string to_json(const LieType& type, const GradedChar& g, int indent)
{
    json entries = json::array();
    for (const auto& [k, m] : g.entries())
        entries.push_back({{"weight", weight_json(k.weight)}, {"degree", k.degree.values()}, {"mult", m}});
    json doc = {{"algebra", type.name()}, {"ell", g.ell()}, {"entries", std::move(entries)}};
    return doc.dump(indent);
}

ParsedGradedChar parse_graded_json(std::string_view text)
{
    const json doc = parse_document(text);
    ParsedGradedChar out{algebra_of(doc), GradedChar(ell_of(doc))};
    const json& entries = field(doc, "entries");
    if (!entries.is_array())
        throw std::invalid_argument("\"entries\" must be an array");
    for (const auto& e : entries) {
        const json& m = field(e, "mult");
        if (!m.is_number_integer())
            throw std::invalid_argument("\"mult\" must be an integer");
        out.character.add(weight_of(field(e, "weight"), out.type.rank), degree_of(field(e, "degree"), out.character.ell()),
                          m.get<Mult>());
    }
    return out;
}

std::string to_json(const LieType& type, const GammaSet& gamma, int indent)
{
    json psi = json::array();
    for (const auto& w : gamma.psi().elements())
        psi.push_back(weight_json(w));
    json points = json::array();
    for (const auto& p : gamma.points())
        points.push_back({{"weight", weight_json(p.weight)},
                          {"degree", p.degree.values()},
                          {"d", gamma.distances().at(p.weight)}});
    json doc = {{"algebra", type.name()},
                {"ell", gamma.ell()},
                {"base", {{"weight", weight_json(gamma.base().weight)}, {"degree", gamma.base().degree.values()}}},
                {"psi", std::move(psi)},
                {"face_condition", gamma.psi().polytope_checked()},
                {"extra_conditions", gamma.psi().extra_checked()},
                {"points", std::move(points)}};
    return doc.dump(indent);
}

GammaSet parse_gamma_json(std::string_view text, LieType* type_out)
{
    const json doc = parse_document(text);
    const LieType type = algebra_of(doc);
    const int ell = ell_of(doc);
    const RootSystem rs = build_root_system(type);
    const json& b = field(doc, "base");
    LambdaPoint base{weight_of(field(b, "weight"), type.rank), degree_of(field(b, "degree"), ell)};

    std::vector<Weight> psi_elems;
    const json& psi = field(doc, "psi");
    if (!psi.is_array())
        throw std::invalid_argument("\"psi\" must be an array");
    for (const auto& w : psi)
        psi_elems.push_back(weight_of(w, type.rank));
    PsiSet ps = PsiSet::from_weights(rs, std::move(psi_elems));
    const bool face = field(doc, "face_condition").get<bool>();
    const bool extra = field(doc, "extra_conditions").get<bool>();
    ps.mark_checked(face, extra);

    std::vector<LambdaPoint> points;
    std::map<Weight, int> d_of;
    const json& pts = field(doc, "points");
    if (!pts.is_array())
        throw std::invalid_argument("\"points\" must be an array");
    for (const auto& p : pts) {
        LambdaPoint lp{weight_of(field(p, "weight"), type.rank), degree_of(field(p, "degree"), ell)};
        const json& d = field(p, "d");
        if (!d.is_number_integer() || d.get<int>() < 0)
            throw std::invalid_argument("\"d\" must be a nonnegative integer");
        auto [it, inserted] = d_of.emplace(lp.weight, d.get<int>());
        if (!inserted && it->second != d.get<int>())
            throw std::invalid_argument("inconsistent d for weight " + lp.weight.str());
        points.push_back(std::move(lp));
    }
    if (type_out)
        *type_out = type;
    return make_gamma_set(std::move(base), std::move(ps), std::move(points), std::move(d_of));
}

std::string to_json(const LieType& type, const IsoChar& iso, int indent)
{
    json entries = json::array();
    for (const auto& [w, m] : iso.entries())
        entries.push_back({{"weight", weight_json(w)}, {"mult", m}});
    json doc = {{"algebra", type.name()}, {"entries", std::move(entries)}};
    return doc.dump(indent);
}

std::string latex_weight(const Weight& w)
{
    std::string out;
    for (int i = 0; i < w.rank(); ++i) {
        const int c = w[i];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c > 0 ? "+" : "-";
        else if (c < 0)
            out += "-";
        const int a = c < 0 ? -c : c;
        if (a != 1)
            out += std::to_string(a);
        out += "\\omega_" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string to_latex(const GradedChar& g)
{
    std::string out;
    for (const auto& [k, m] : g.entries()) {
        if (!out.empty())
            out += m < 0 ? " - " : " + ";
        else if (m < 0)
            out += "-";
        const Mult a = m < 0 ? -m : m;
        if (a != 1)
            out += std::to_string(a) + "\\,";
        out += "\\ch V(" + latex_weight(k.weight) + ")";
        const std::string t = degree_latex(k.degree);
        if (!t.empty())
            out += "\\, " + t;
    }
    return out.empty() ? "0" : out;
}

std::string to_plain(const GradedChar& g)
{
    std::ostringstream os;
    for (const auto& [k, m] : g.entries())
        os << m << "  V(" << k.weight.str() << ")  t^(" << k.degree.str() << ")\n";
    return os.str();
}

std::string to_plain(const IsoChar& iso)
{
    std::ostringstream os;
    for (const auto& [w, m] : iso.entries())
        os << m << "  V(" << w.str() << ")\n";
    return os.str();
}

Weight parse_weight(std::string_view text, int rank)
{
    const auto coords = parse_int_list(text, 0, text);
    if (static_cast<int>(coords.size()) != rank)
        throw std::invalid_argument("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                                    " coordinates, expected " + std::to_string(rank));
    try {
        return Weight(coords);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("weight '" + std::string(text) + "' has a coordinate out of range");
    }
}

LambdaPoint parse_lambda_point(std::string_view text, int rank, int ell)
{
    const std::size_t at = text.find('@');
    if (at == std::string_view::npos)
        throw std::invalid_argument("point '" + std::string(text) + "' needs the form coords@degree");
    const std::string_view wtext = text.substr(0, at);
    const std::string_view dtext = text.substr(at + 1);
    const auto coords = parse_int_list(wtext, 0, text);
    if (static_cast<int>(coords.size()) != rank)
        throw std::invalid_argument("weight '" + std::string(wtext) + "' in '" + std::string(text) + "' has " +
                                    std::to_string(coords.size()) + " coordinates, expected " + std::to_string(rank));
    const auto degree = parse_int_list(dtext, at + 1, text);
    if (static_cast<int>(degree.size()) != ell)
        throw std::invalid_argument("degree '" + std::string(dtext) + "' at position " + std::to_string(at + 1) +
                                    " in '" + std::string(text) + "' has " + std::to_string(degree.size()) +
                                    " entries, expected ell = " + std::to_string(ell));
    try {
        return {Weight(coords), MultiDegree(degree)};
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("point '" + std::string(text) + "' has a coordinate out of range");
    }
}

} // namespace krchar
