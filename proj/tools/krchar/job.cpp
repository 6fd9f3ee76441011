#include "job.hpp"

#include <krchar/serialize.hpp>
#include <krchar/tensor_store.hpp>
#include <krchar/verify.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>

namespace krchar::cli {

namespace {

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"json", Format::json}, {"latex", Format::latex}};

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App& sub, JobSpec& job, std::string& cache)
{
    sub.add_option("--algebra,-a", job.algebra, "Classical type, e.g. D5")->required();
    sub.add_option("--format,-f", job.format, "plain | json | latex")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub.add_option("--cache", cache, "Persistent tensor cache (KRCHAR_CACHE overrides)");
}

PsiMode parse_mode(const std::string& mode)
{
    if (mode == "fixed-psi")
        return PsiMode::fixed;
    if (mode == "per-weight-psi")
        return PsiMode::per_weight;
    throw InputError("unknown mode '" + mode + "' (expected fixed-psi or per-weight-psi)");
}

Weight dominant_weight(const RootSystem& rs, const std::string& text, const char* flag)
{
    if (text.empty())
        throw InputError(std::string(flag) + " is required");
    Weight w = parse_weight(text, rs.rank());
    if (!w.is_dominant())
        throw InputError(std::string(flag) + " '" + text + "' is not dominant");
    return w;
}

void print_graded(const LieType& type, const GradedChar& g, Format f, std::ostream& out)
{
    switch (f) {
    case Format::json: out << to_json(type, g, 2) << '\n'; break;
    case Format::latex: out << to_latex(g) << '\n'; break;
    case Format::plain: out << to_plain(g); break;
    }
}

int run_gch(const JobSpec& job, const RootSystem& rs, std::ostream& out)
{
    const Weight lambda = dominant_weight(rs, job.weight, "--weight");
    print_graded(rs.type(), gch_N(rs, lambda, job.ell, parse_mode(job.mode)), job.format, out);
    return ok;
}

int run_ext(const JobSpec& job, const RootSystem& rs, std::ostream& out)
{
    if (job.from.empty() || job.to.empty())
        throw InputError("ext needs --from and --to");
    const auto at = job.from.find('@');
    const int ell = at == std::string::npos ? 0 : static_cast<int>(std::count(job.from.begin() + static_cast<long>(at),
                                                                               job.from.end(), ',') + 1);
    const LambdaPoint a = parse_lambda_point(job.from, rs.rank(), ell);
    const LambdaPoint b = parse_lambda_point(job.to, rs.rank(), ell);
    if (!a.weight.is_dominant() || !b.weight.is_dominant())
        throw InputError("ext: both weights must be dominant");
    const int j = job.j ? *job.j : (b.degree - a.degree).deg();
    if (j < 0)
        throw InputError("--j must be nonnegative");
    const Mult d = ext_dim(rs, ModuleSpec::adjoint(rs, ell), a, b, j);
    if (job.format == Format::json)
        out << "{\"algebra\": \"" << rs.type().name() << "\", \"j\": " << j << ", \"dim\": " << d << "}\n";
    else
        out << d << '\n';
    return ok;
}

int run_gamma(const JobSpec& job, const RootSystem& rs, std::ostream& out)
{
    const Weight lambda = dominant_weight(rs, job.weight, "--weight");
    GammaSet gamma = kr_gamma(rs, lambda, job.ell);
    if (job.node) {
        const PsiSet psi = certify(rs, psi_i(rs, Node{*job.node}), freudenthal(rs, rs.highest_root().weight));
        gamma = gamma_psi(rs, psi, LambdaPoint{lambda, MultiDegree(job.ell)});
    }
    if (job.format == Format::json) {
        out << to_json(rs.type(), gamma, 2) << '\n';
        return ok;
    }
    out << "psi " << gamma.psi().key() << '\n';
    for (const auto& p : gamma.points())
        out << "d=" << gamma.distances().at(p.weight) << "  V(" << p.weight.str() << ")  t^(" << p.degree.str() << ")\n";
    return ok;
}

int run_tensor(const JobSpec& job, const RootSystem& rs, std::ostream& out)
{
    const Weight a = dominant_weight(rs, job.weight, "--weight");
    const Weight b = dominant_weight(rs, job.other, "--other");
    const IsoChar iso = tensor_decompose(rs, a, b);
    if (job.format == Format::json)
        out << to_json(rs.type(), iso, 2) << '\n';
    else
        out << to_plain(iso);
    return ok;
}

int run_psi(const JobSpec& job, const RootSystem& rs, std::ostream& out)
{
    if (job.node.has_value() == !job.weight.empty())
        throw InputError("psi needs exactly one of --node or --weight");
    const PsiSet raw = job.node ? psi_i(rs, Node{*job.node}) : psi_of_mu(rs, dominant_weight(rs, job.weight, "--weight"));
    const PsiSet psi = certify(rs, raw, freudenthal(rs, rs.highest_root().weight));
    if (job.format == Format::json) {
        out << "{\"algebra\": \"" << rs.type().name() << "\", \"psi\": [";
        for (std::size_t k = 0; k < psi.size(); ++k)
            out << (k ? ", " : "") << "[" << psi.elements()[k].str() << "]";
        out << "], \"face_condition\": " << std::boolalpha << psi.polytope_checked()
            << ", \"extra_conditions\": " << psi.extra_checked() << "}\n";
    } else {
        for (const auto& w : psi.elements())
            out << w.str() << '\n';
        out << "face condition: " << (psi.polytope_checked() ? "holds" : "fails") << '\n';
        out << "extra conditions: " << (psi.extra_checked() ? "hold" : "fail") << '\n';
    }
    return ok;
}

int run_verify(const JobSpec& job, std::ostream& out)
{
    const auto reports = run_suite(parse_suite(job.suite));
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.passed;
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << std::fixed << std::setprecision(2) << r.seconds
            << " s)";
        if (!r.passed)
            out << "\n      " << r.detail;
        out << '\n';
    }
    out << (all ? "all checks passed" : "some checks failed") << '\n';
    return all ? ok : verification_failed;
}

} // namespace

ParseOutcome parse_args(const std::vector<std::string>& args)
{
    JobSpec job;
    std::string cache;
    CLI::App app{"Graded characters of generalized Kirillov-Reshetikhin modules", "krchar"};
    app.require_subcommand(1);

    auto* gch = app.add_subcommand("gch", "gch N(lambda, 0) over the adjoint current algebra");
    add_common(*gch, job, cache);
    gch->add_option("--weight,-w", job.weight, "Dominant weight, fundamental coordinates")->required();
    gch->add_option("--ell,-l", job.ell, "Number of variables")->check(CLI::Range(1, 16));
    gch->add_option("--mode", job.mode, "fixed-psi | per-weight-psi");

    auto* ext = app.add_subcommand("ext", "dim Ext^j(V(lambda,r), V(mu,s))");
    add_common(*ext, job, cache);
    ext->add_option("--from", job.from, "coords@degree")->required();
    ext->add_option("--to", job.to, "coords@degree")->required();
    ext->add_option("--j", job.j, "Ext degree (defaults to deg(s - r))");

    auto* gamma = app.add_subcommand("gamma", "Enumerate Gamma_Psi(lambda, 0)");
    add_common(*gamma, job, cache);
    gamma->add_option("--weight,-w", job.weight, "Dominant weight")->required();
    gamma->add_option("--ell,-l", job.ell, "Number of variables")->check(CLI::Range(1, 16));
    gamma->add_option("--node", job.node, "Use Psi_i for this node instead of Psi_lambda");

    auto* tensor = app.add_subcommand("tensor", "Decompose V(lambda) (x) V(nu)");
    add_common(*tensor, job, cache);
    tensor->add_option("--weight,-w", job.weight, "First factor")->required();
    tensor->add_option("--other", job.other, "Second factor")->required();

    auto* psi = app.add_subcommand("psi", "Psi_i or Psi(mu) with the face and extra conditions");
    add_common(*psi, job, cache);
    psi->add_option("--node", job.node, "Node i for Psi_i");
    psi->add_option("--weight,-w", job.weight, "Dominant mu for Psi(mu)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", job.suite, "paper | identities | all")
        ->check(CLI::IsMember({"paper", "identities", "all"}));
    verify->add_option("--format,-f", job.format, "plain | json | latex")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    verify->add_option("--cache", cache, "Persistent tensor cache (KRCHAR_CACHE overrides)");

    std::vector<const char*> argv{"krchar"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {std::nullopt, ok, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {std::nullopt, ok, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {std::nullopt, input_error, e.what()};
    }

    const std::pair<CLI::App*, Command> commands[] = {{gch, Command::gch},     {ext, Command::ext},
                                                      {gamma, Command::gamma}, {tensor, Command::tensor},
                                                      {psi, Command::psi},     {verify, Command::verify}};
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed())
            job.command = cmd;
    if (!cache.empty())
        job.cache_path = cache;
    return {job, ok, {}};
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    try {
        const auto cache = resolve_cache_path(job.cache_path);
        if (cache) {
            const auto report = cache_load(*cache);
            for (const auto& w : report.warnings)
                err << "warning: " << w << '\n';
        }
        int code = ok;
        if (job.command == Command::verify) {
            code = run_verify(job, out);
        } else {
            const RootSystem rs = build_root_system(LieType::parse(job.algebra));
            switch (job.command) {
            case Command::gch: code = run_gch(job, rs, out); break;
            case Command::ext: code = run_ext(job, rs, out); break;
            case Command::gamma: code = run_gamma(job, rs, out); break;
            case Command::tensor: code = run_tensor(job, rs, out); break;
            case Command::psi: code = run_psi(job, rs, out); break;
            case Command::verify: break;
            }
        }
        if (cache)
            cache_store(*cache);
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return input_error;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto parsed = parse_args(args);
    if (!parsed.job) {
        (parsed.exit_code == ok ? out : err) << parsed.message << '\n';
        return parsed.exit_code;
    }
    return run(*parsed.job, out, err);
}

} // namespace krchar::cli
