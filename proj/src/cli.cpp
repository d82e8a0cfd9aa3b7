#include "toricmle/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "toricmle/closedform.hpp"
#include "toricmle/jsonio.hpp"
#include "toricmle/mldegree.hpp"

namespace toricmle {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::string default_format() {
    const char* env = std::getenv("TORICMLE_FORMAT");
    if (env && std::string(env) == "json") return "json";
    return "table";
}

std::vector<long> parse_inline_data(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad count '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<long> parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file " + path);
    std::vector<long> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(std::stol(line));
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string mle_table(const MLEResult& r, const std::string& heading) {
    std::ostringstream os;
    os << heading << "\n";
    os << "  p_hat      =";
    for (double x : r.p_hat.p) os << " " << fmt_double(x);
    os << "\n  theta_hat  =";
    for (double x : r.theta_hat.theta) os << " " << fmt_double(x);
    os << "\n  log_lik    = " << fmt_double(r.log_lik)
       << "\n  residuals  = moment " << fmt_double(r.moment_residual)
       << ", variety " << fmt_double(r.variety_residual);
    if (r.method == MleMethod::birch_newton)
        os << "\n  iterations = " << r.iterations;
    os << "\n";
    return os.str();
}

int cmd_models(const std::string& format, CliResult& res) {
    if (format == "json") {
        res.out = canonical_dump(catalog_json(), 2) + "\n";
        return 0;
    }
    std::ostringstream os;
    os << "label  model   deg  singularities  ml_degree  ideal\n";
    for (const CatalogEntry& e : catalog()) {
        std::string sing = singularity_profile(e.polygon).str();
        std::string ideal = e.ideal.empty() ? "-" : e.ideal.front();
        for (size_t i = 1; i < e.ideal.size(); ++i) ideal += ", " + e.ideal[i];
        char line[512];
        std::snprintf(line, sizeof line, "%-6s %-7s %-4zu %-14s %-10s %s\n",
                      e.polygon_label.c_str(), e.model_label.c_str(),
                      boundary_lattice_points(e.polygon).size(), sing.c_str(),
                      e.known_ml_degree >= 0
                          ? std::to_string(e.known_ml_degree).c_str()
                          : "-",
                      ideal.c_str());
        os << line;
    }
    res.out = os.str();
    return 0;
}

int cmd_mle(const std::string& model_label, const std::string& data,
            const std::string& data_file, const std::string& method,
            double tol, int max_iter, const std::string& format,
            CliResult& res) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    std::vector<long> counts =
        data_file.empty() ? parse_inline_data(data) : parse_csv_file(data_file);
    if ((int)counts.size() != entry.model.cols())
        throw std::invalid_argument(
            "data has " + std::to_string(counts.size()) + " entries; model " +
            entry.model_label + " needs " + std::to_string(entry.model.cols()));
    DataVector u = DataVector::from_counts(counts);

    SolverOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;

    nlohmann::json out{{"model", entry.model_label}, {"data", u.u}};
    std::ostringstream table;
    std::optional<MLEResult> birch_res;
    std::optional<ClosedFormResult> cf_res;
    if (method == "birch" || method == "both") {
        birch_res = solve_birch(entry.model, u, opts);
        out["birch"] = to_json(*birch_res);
        table << mle_table(*birch_res, "birch_newton");
    }
    if (method == "closed-form" || method == "both") {
        cf_res = mle_closed_form(entry.model_label, u);
        out["closed_form"] = to_json(*cf_res);
        table << mle_table(cf_res->mle,
                           "closed_form (coordinate p" +
                               std::to_string(cf_res->coordinate) + ", " +
                               cf_res->poly_source + " polynomial)");
    }
    if (birch_res && cf_res) {
        double delta = 0.0;
        for (size_t j = 0; j < birch_res->p_hat.p.size(); ++j)
            delta = std::max(delta,
                             std::abs(birch_res->p_hat.p[j] - cf_res->mle.p_hat.p[j]));
        out["agreement_delta"] = delta;
        table << "agreement delta = " << fmt_double(delta) << "\n";
    }
    res.out = (format == "json") ? canonical_dump(out, 2) + "\n" : table.str();
    return 0;
}

int cmd_mldegree(const std::string& model_label, int trials,
                 unsigned long long seed, const std::string& format,
                 CliResult& res) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    if (trials < 3)
        throw std::invalid_argument("mldegree needs --trials >= 3");
    MLDegreeReport rep = ml_degree(entry.model, trials, seed);
    nlohmann::json out = to_json(rep);
    long bound = degree_of_variety(entry.model);
    out["degree_of_variety"] = bound;
    if (entry.known_ml_degree >= 0) out["published_count"] = entry.known_ml_degree;
    bool experimental = boundary_lattice_points(entry.polygon).size() >= 7;
    if (experimental) out["experimental"] = true;
    if (format == "json") {
        res.out = canonical_dump(out, 2) + "\n";
    } else {
        std::ostringstream os;
        os << "model " << entry.model_label << ": ml_degree = " << rep.count
           << (rep.consistent ? "" : " (INCONSISTENT)") << " across "
           << trials << " trials, fiber degree " << rep.fiber_degree
           << ", variety degree " << bound << "\n";
        if (entry.known_ml_degree >= 0)
            os << "published count: " << entry.known_ml_degree << "\n";
        if (experimental)
            os << "note: degree >= 7 model, no published count to compare\n";
        res.out = os.str();
    }
    return 0;
}

int cmd_verify(const std::string& model_label, int samples,
               unsigned long long seed, const std::string& format,
               CliResult& res) {
    const CatalogEntry& entry = catalog_lookup(model_label);
    if (!has_closed_form(entry.model_label))
        throw std::invalid_argument("verify needs a closed-form model "
                                    "(S3, S4, S4_A2, S4_A3)");
    std::mt19937_64 rng(seed);
    double max_delta = 0.0, max_roundtrip = 0.0;
    int published_used = 0, derived_used = 0;
    std::vector<PolynomialDiscrepancy> audit;
    for (int s = 0; s < samples; ++s) {
        std::vector<long> counts(entry.model.cols());
        for (auto& x : counts) x = 1 + (long)(rng() % 1000ull);
        DataVector u = DataVector::from_counts(counts);
        MLEResult nb = solve_birch(entry.model, u);
        ClosedFormResult cf = mle_closed_form(entry.model_label, u);
        for (size_t j = 0; j < nb.p_hat.p.size(); ++j)
            max_delta = std::max(max_delta,
                                 std::abs(nb.p_hat.p[j] - cf.mle.p_hat.p[j]));
        ProbabilityDistribution rt =
            parametrize(entry.model, cf.mle.theta_hat);
        for (size_t j = 0; j < rt.p.size(); ++j)
            max_roundtrip = std::max(max_roundtrip,
                                     std::abs(rt.p[j] - cf.mle.p_hat.p[j]));
        if (cf.poly_source == "published") ++published_used; else ++derived_used;
        if (s == 0)
            audit = audit_published_polynomials(entry.model_label, u, nb.p_hat.p);
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : audit) arr.push_back(to_json(d));
    nlohmann::json out{{"model", entry.model_label},
                       {"samples", samples},
                       {"seed", seed},
                       {"max_componentwise_delta", max_delta},
                       {"max_theta_roundtrip", max_roundtrip},
                       {"published_poly_used", published_used},
                       {"derived_poly_used", derived_used},
                       {"published_audit", arr}};
    if (format == "json") {
        res.out = canonical_dump(out, 2) + "\n";
    } else {
        std::ostringstream os;
        os << "model " << entry.model_label << ", " << samples
           << " samples (seed " << seed << ")\n"
           << "  max |p_birch - p_closed| = " << fmt_double(max_delta) << "\n"
           << "  max theta round-trip     = " << fmt_double(max_roundtrip) << "\n"
           << "  polynomial source: published " << published_used << ", derived "
           << derived_used << "\n";
        for (const auto& d : audit)
            os << "  display for p" << d.coordinate << ": "
               << (d.published_ok ? "matches" : "DISCREPANT") << " (residual "
               << fmt_double(d.published_residual) << ")\n";
        res.out = os.str();
    }
    return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    CLI::App app{"maximum likelihood on log-linear models of reflexive polygons"};
    app.require_subcommand(1);

    std::string format = default_format();
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* models = app.add_subcommand("models", "catalog access");
    models->require_subcommand(1);
    models->add_subcommand("list", "list the sixteen catalog polygons");

    auto* mle = app.add_subcommand("mle", "maximum likelihood estimate");
    std::string mle_model, mle_data, mle_data_file, mle_method = "birch";
    double tol = 1e-12;
    int max_iter = 200;
    mle->add_option("--model", mle_model, "model label")->required();
    mle->add_option("--data", mle_data, "comma separated counts");
    mle->add_option("--data-file", mle_data_file,
                    "CSV file, one count per line");
    mle->add_option("--method", mle_method, "birch | closed-form | both")
        ->check(CLI::IsMember({"birch", "closed-form", "both"}));
    mle->add_option("--tol", tol, "moment residual tolerance");
    mle->add_option("--max-iter", max_iter, "Newton iteration cap");

    auto* mld = app.add_subcommand("mldegree", "count likelihood critical points");
    std::string mld_model;
    int trials = 3;
    unsigned long long seed = 1;
    mld->add_option("--model", mld_model, "model label")->required();
    mld->add_option("--trials", trials, "number of random data draws");
    mld->add_option("--seed", seed, "PRNG seed (mt19937_64 stream)");

    auto* ver = app.add_subcommand("verify", "closed form vs Newton agreement");
    std::string ver_model;
    int samples = 100;
    unsigned long long ver_seed = 7;
    ver->add_option("--model", ver_model, "closed-form model label")->required();
    ver->add_option("--samples", samples, "number of random data vectors");
    ver->add_option("--seed", ver_seed, "PRNG seed");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = kExitUsage;
        return res;
    }

    try {
        if (models->parsed()) return res.exit_code = cmd_models(format, res), res;
        if (mle->parsed()) {
            if (mle_data.empty() && mle_data_file.empty())
                throw std::invalid_argument("mle needs --data or --data-file");
            res.exit_code = cmd_mle(mle_model, mle_data, mle_data_file,
                                    mle_method, tol, max_iter, format, res);
            return res;
        }
        if (mld->parsed())
            return res.exit_code = cmd_mldegree(mld_model, trials, seed, format, res),
                   res;
        if (ver->parsed())
            return res.exit_code = cmd_verify(ver_model, samples, ver_seed, format, res),
                   res;
    } catch (const std::invalid_argument& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = kExitUsage;
    } catch (const std::out_of_range& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = kExitUsage;
    } catch (const SolveFailure& e) {
        nlohmann::json diag{{"error", e.what()},
                            {"last_p", e.last_p},
                            {"residual", e.residual}};
        res.err = canonical_dump(diag, 2) + "\n";
        res.exit_code = kExitComputation;
    } catch (const ClosedFormFailure& e) {
        nlohmann::json diag{{"error", e.what()}, {"diagnostics", e.diagnostics}};
        res.err = canonical_dump(diag, 2) + "\n";
        res.exit_code = kExitComputation;
    } catch (const std::exception& e) {
        nlohmann::json diag{{"error", e.what()}};
        res.err = canonical_dump(diag, 2) + "\n";
        res.exit_code = kExitComputation;
    }
    return res;
}

} // namespace toricmle
