// rmac: command-line front end. Every subcommand is deterministic in its arguments.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmac/errors.hpp"
#include "rmac/experiments.hpp"
#include "rmac/hochster.hpp"
#include "rmac/io.hpp"
#include "rmac/limit_polys.hpp"
#include "rmac/sampler.hpp"

namespace {

using nlohmann::json;
using namespace rmac;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInvariant = 4;

struct Common {
    std::string field = "f2";
    unsigned workers = 0;
    bool override_guards = false;
    std::string out;
    std::string format = "csv";
    std::string config;
};

void emit(const Common& common, const std::string& text)
{
    if (common.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(common.out);
    if (!file)
        throw std::invalid_argument("--out: cannot write '" + common.out + "'");
    file << text;
}

/// Reads typed values out of a JSON config object, naming the key on error.
class ConfigFile {
public:
    ConfigFile() = default;
    explicit ConfigFile(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("--config: cannot open '" + path + "'");
        try {
            in >> doc_;
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("--config: '" + path + "' is not valid JSON: " + e.what());
        }
        if (!doc_.is_object())
            throw std::invalid_argument("config: expected a JSON object");
    }

    template <typename T>
    void read(const std::string& key, T& target) const
    {
        if (!doc_.is_object() || !doc_.contains(key))
            return;
        const json& v = doc_[key];
        if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string())
                fail(key, "expected a string");
            target = v.get<std::string>();
        } else if constexpr (std::is_same_v<T, double>) {
            if (!v.is_number())
                fail(key, "expected a number");
            target = v.get<double>();
        } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            target = list<double>(key, v);
        } else if constexpr (std::is_same_v<T, std::vector<int>>) {
            target = list<int>(key, v);
        } else if constexpr (std::is_unsigned_v<T>) {
            if (!v.is_number_unsigned())
                fail(key, "expected a non-negative integer");
            target = v.get<T>();
        } else {
            if (!v.is_number_integer())
                fail(key, "expected an integer");
            target = v.get<T>();
        }
    }

    /// Unknown keys are almost always typos; reject them rather than silently ignore.
    void allow_only(std::initializer_list<const char*> keys) const
    {
        if (!doc_.is_object())
            return;
        for (const auto& [key, value] : doc_.items()) {
            bool known = false;
            for (const char* k : keys)
                known = known || key == k;
            if (!known)
                fail(key, "unknown key");
        }
    }

private:
    [[noreturn]] static void fail(const std::string& key, const std::string& what)
    {
        throw std::invalid_argument("config." + key + ": " + what);
    }

    template <typename T>
    static std::vector<T> list(const std::string& key, const json& v)
    {
        if (!v.is_array())
            fail(key, "expected an array");
        std::vector<T> out;
        for (std::size_t t = 0; t < v.size(); ++t) {
            const bool ok = std::is_integral_v<T> ? v[t].is_number_integer() : v[t].is_number();
            if (!ok)
                fail(key + "[" + std::to_string(t) + "]", std::is_integral_v<T> ? "expected an integer" : "expected a number");
            out.push_back(v[t].get<T>());
        }
        return out;
    }

    json doc_;
};

/// Value precedence: flag, then config file, then built-in default.
template <typename T>
void resolve(T& target, const CLI::Option* flag, const ConfigFile& config, const std::string& key, const T& flagged)
{
    if (flag->count() > 0)
        target = flagged;
    else
        config.read(key, target);
}

void add_common(CLI::App* sub, Common& common, bool tables)
{
    sub->add_option("--field", common.field, "Coefficient field: q, f2 or f<p>")->capture_default_str();
    sub->add_option("--workers", common.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    sub->add_flag("--override-guards", common.override_guards, "Run past size and work guards");
    sub->add_option("--out", common.out, "Write output to this path instead of standard output");
    if (tables) {
        sub->add_option("--format", common.format, "Table format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--config", common.config, "JSON config file; flags override its values");
    }
}

std::vector<Bidegree> parse_filter(const std::vector<std::string>& specs)
{
    std::vector<Bidegree> out;
    for (const auto& spec : specs) {
        const auto comma = spec.find(',');
        try {
            if (comma == std::string::npos)
                throw std::invalid_argument("");
            std::size_t used_i = 0, used_j = 0;
            const int i = std::stoi(spec.substr(0, comma), &used_i);
            const std::string tail = spec.substr(comma + 1);
            const int j = std::stoi(tail, &used_j);
            if (used_i != comma || used_j != tail.size())
                throw std::invalid_argument("");
            out.push_back({i, j});
        } catch (const std::exception&) {
            throw std::invalid_argument("--filter: expected i,j (got '" + spec + "')");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology of random simplicial complexes: bigraded Betti numbers, exact limit "
                 "polynomials and Monte Carlo experiments."};
    app.require_subcommand(1);
    Common common;

    // betti / zk / taylor-check
    std::string complex_path;
    std::vector<std::string> filter_specs;
    auto* betti = app.add_subcommand("betti", "Bigraded Betti table of a complex file, as JSON");
    betti->add_option("complex", complex_path, "Complex file {\"n\":..,\"facets\":[[..]..]}")->required();
    betti->add_option("--filter", filter_specs, "Only these bidegrees, each as i,j");
    add_common(betti, common, false);

    auto* zk = app.add_subcommand("zk", "Betti numbers of the moment-angle complex, as a JSON array");
    zk->add_option("complex", complex_path, "Complex file")->required();
    add_common(zk, common, false);

    auto* taylor = app.add_subcommand("taylor-check", "Compare the Hochster table against the Taylor resolution");
    taylor->add_option("complex", complex_path, "Complex file")->required();
    add_common(taylor, common, false);

    // sample
    LMParams lm;
    std::optional<std::uint64_t> trial;
    auto* sample = app.add_subcommand("sample", "Draw a Linial-Meshulam complex, as a complex file");
    sample->add_option("--n", lm.n, "Vertex count")->required();
    sample->add_option("--d", lm.d, "Dimension")->required();
    sample->add_option("--p", lm.p, "Probability of each d-simplex")->required();
    sample->add_option("--seed", lm.seed, "Master seed")->required();
    sample->add_option("--trial", trial, "Trial substream index");
    sample->add_option("--out", common.out, "Write output to this path");

    // limit-poly
    int poly_d = 1, poly_j = 3;
    std::string kind_text;
    std::optional<int> poly_m, poly_i;
    auto* limit = app.add_subcommand("limit-poly", "Exact limit, variance or covariance polynomial, as JSON");
    limit->add_option("--d", poly_d, "Dimension")->required();
    limit->add_option("--j", poly_j, "Vertex count of the subset")->required();
    limit->add_option("--kind", kind_text, "f, g, var or cov")->required()->check(CLI::IsMember({"f", "g", "var", "cov"}));
    limit->add_option("--m", poly_m, "Overlap size (cov only)");
    limit->add_option("--i", poly_i, "Homological index for var and cov (default j-d)");
    limit->add_option("--field", common.field, "Coefficient field")->capture_default_str();
    limit->add_option("--workers", common.workers, "Worker threads (0 = hardware concurrency)");
    limit->add_option("--out", common.out, "Write output to this path");

    // converge / var-scale. Defaults: d=1 j=3 i=j-d, p 0.3 0.5 0.7, n 8 12 16, 200 trials, seed 0.
    int flag_d = 1, flag_j = 3, flag_i = 0;
    std::vector<double> flag_ps;
    std::vector<int> flag_ns;
    std::uint64_t flag_trials = 200, flag_seed = 0;
    std::vector<CLI::App*> experiments;
    struct ExperimentFlags {
        CLI::Option *d, *j, *i, *p, *n, *trials, *seed, *field, *workers;
    };
    std::map<CLI::App*, ExperimentFlags> flags;
    for (const auto& [name, help] : {std::pair{"converge", "Convergence table of normalized Betti numbers"},
                                     std::pair{"var-scale", "Variance scaling table and log-log slope"}}) {
        auto* sub = app.add_subcommand(name, help);
        ExperimentFlags f{};
        f.d = sub->add_option("--d", flag_d, "Dimension (default 1)");
        f.j = sub->add_option("--j", flag_j, "Subset size (default 3)");
        f.i = sub->add_option("--i", flag_i, "Homological index (default j-d)");
        f.p = sub->add_option("--p", flag_ps, "Probability grid (default 0.3 0.5 0.7)");
        f.n = sub->add_option("--n", flag_ns, "Vertex-count grid (default 8 12 16; var-scale 8 12 16 24)");
        f.trials = sub->add_option("--trials", flag_trials, "Trials per cell (default 200)");
        f.seed = sub->add_option("--seed", flag_seed, "Master seed (default 0)");
        add_common(sub, common, true);
        f.field = sub->get_option("--field");
        f.workers = sub->get_option("--workers");
        flags[sub] = f;
        experiments.push_back(sub);
    }

    // cov-check. Defaults: d=1 j=3 i=j-d m=1 n=2j-m p=0.5, 5000 trials, seed 0.
    int cov_d = 1, cov_j = 3, cov_i = 0, cov_m = 1, cov_n = 0;
    double cov_p = 0.5;
    std::uint64_t cov_trials = 5000, cov_seed = 0;
    auto* cov = app.add_subcommand("cov-check", "Empirical covariance of two overlapping subsets");
    auto* co_d = cov->add_option("--d", cov_d, "Dimension (default 1)");
    auto* co_j = cov->add_option("--j", cov_j, "Subset size (default 3)");
    auto* co_i = cov->add_option("--i", cov_i, "Homological index (default j-d)");
    auto* co_m = cov->add_option("--m", cov_m, "Overlap size (default 1)");
    auto* co_n = cov->add_option("--n", cov_n, "Vertex count (default 2j-m)");
    auto* co_p = cov->add_option("--p", cov_p, "Probability (default 0.5)");
    auto* co_trials = cov->add_option("--trials", cov_trials, "Trials (default 5000)");
    auto* co_seed = cov->add_option("--seed", cov_seed, "Master seed (default 0)");
    add_common(cov, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (betti->parsed() || zk->parsed() || taylor->parsed()) {
            const FieldSpec field = FieldSpec::parse(common.field);
            const SimplicialComplex complex = io::load_complex(complex_path);
            HochsterOptions options;
            options.override_guard = common.override_guards;
            options.workers = common.workers;
            if (betti->parsed()) {
                if (!filter_specs.empty()) {
                    const auto wanted = parse_filter(filter_specs);
                    options.filter = std::set<Bidegree>(wanted.begin(), wanted.end());
                }
                emit(common, io::table_to_json(bigraded_betti(complex, field, options)).dump() + "\n");
            } else if (zk->parsed()) {
                emit(common, json(zk_betti_numbers(complex, field, options)).dump() + "\n");
            } else {
                const auto hochster = bigraded_betti(complex, field, options);
                const auto tor = tor_via_taylor(complex, field, common.override_guards);
                const bool agree = hochster == tor;
                json doc{{"agree", agree}, {"hochster", io::table_to_json(hochster)}, {"taylor", io::table_to_json(tor)}};
                emit(common, doc.dump() + "\n");
                if (!agree) {
                    std::cerr << "rmac: Hochster and Taylor tables disagree\n";
                    return kExitInvariant;
                }
            }
            return kExitOk;
        }

        if (sample->parsed()) {
            const auto k = trial ? sample_stream(lm, *trial) : sample_lm(lm);
            emit(common, io::complex_to_json(k).dump() + "\n");
            return kExitOk;
        }

        if (limit->parsed()) {
            const FieldSpec field = FieldSpec::parse(common.field);
            const io::PolyKind kind = io::parse_poly_kind(kind_text);
            const int i = poly_i.value_or(poly_j - poly_d);
            IntPolynomial poly;
            std::optional<int> m;
            switch (kind) {
            case io::PolyKind::F: poly = limit_poly_f(poly_d, poly_j, field, common.workers); break;
            case io::PolyKind::G: poly = limit_poly_g(poly_d, poly_j, field, common.workers); break;
            case io::PolyKind::Variance: poly = exact_variance_poly(poly_d, poly_j, i, field, common.workers); break;
            case io::PolyKind::Covariance:
                if (!poly_m)
                    throw std::invalid_argument("--m: required for kind cov");
                m = poly_m;
                poly = exact_cov_poly(poly_d, poly_j, *poly_m, i, field, common.workers);
                break;
            }
            emit(common, io::poly_to_json(poly, poly_d, poly_j, kind, m, field).dump() + "\n");
            return kExitOk;
        }

        for (auto* sub : experiments) {
            if (!sub->parsed())
                continue;
            const ExperimentFlags& f = flags.at(sub);
            const bool scaling = sub->get_name() == "var-scale";
            const ConfigFile file = common.config.empty() ? ConfigFile{} : ConfigFile{common.config};
            file.allow_only({"d", "j", "i", "p", "n", "trials", "seed", "field", "workers"});
            ConvergenceConfig config;
            config.p_grid = {0.3, 0.5, 0.7};
            config.n_grid = scaling ? std::vector<int>{8, 12, 16, 24} : std::vector<int>{8, 12, 16};
            resolve(config.d, f.d, file, "d", flag_d);
            resolve(config.j, f.j, file, "j", flag_j);
            config.i = config.j - config.d;
            resolve(config.i, f.i, file, "i", flag_i);
            resolve(config.p_grid, f.p, file, "p", flag_ps);
            resolve(config.n_grid, f.n, file, "n", flag_ns);
            resolve(config.trials, f.trials, file, "trials", flag_trials);
            resolve(config.seed, f.seed, file, "seed", flag_seed);
            std::string field_text = "f2";
            resolve(field_text, f.field, file, "field", common.field);
            unsigned workers = 0;
            resolve(workers, f.workers, file, "workers", common.workers);
            try {
                config.field = FieldSpec::parse(field_text);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string("config.field: ") + e.what());
            }
            config.validate();

            ExperimentOptions options;
            options.workers = workers;
            options.override_budget = common.override_guards;
            const bool csv = common.format == "csv";
            if (scaling) {
                const auto result = run_variance_scaling(config, options);
                emit(common, csv ? io::variance_csv(result) : io::variance_json(result));
            } else {
                const auto rows = run_convergence(config, options);
                emit(common, csv ? io::convergence_csv(rows) : io::convergence_json(rows));
            }
            return kExitOk;
        }

        if (cov->parsed()) {
            const ConfigFile file = common.config.empty() ? ConfigFile{} : ConfigFile{common.config};
            file.allow_only({"d", "j", "i", "m", "n", "p", "trials", "seed", "field", "workers"});
            int d = 1, j = 3, m = 1;
            resolve(d, co_d, file, "d", cov_d);
            resolve(j, co_j, file, "j", cov_j);
            resolve(m, co_m, file, "m", cov_m);
            int i = j - d, n = 2 * j - m;
            resolve(i, co_i, file, "i", cov_i);
            resolve(n, co_n, file, "n", cov_n);
            double p = 0.5;
            resolve(p, co_p, file, "p", cov_p);
            std::uint64_t trials = 5000, seed = 0;
            resolve(trials, co_trials, file, "trials", cov_trials);
            resolve(seed, co_seed, file, "seed", cov_seed);
            std::string field_text = "f2";
            resolve(field_text, cov->get_option("--field"), file, "field", common.field);
            unsigned workers = 0;
            resolve(workers, cov->get_option("--workers"), file, "workers", common.workers);

            ExperimentOptions options;
            options.workers = workers;
            options.override_budget = common.override_guards;
            const auto check = run_covariance_check(d, j, i, m, n, p, trials, seed, FieldSpec::parse(field_text), options);
            emit(common, common.format == "csv" ? io::covariance_csv(check) : io::covariance_json(check));
            return kExitOk;
        }
    } catch (const GuardError& e) {
        std::cerr << "rmac: refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rmac: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rmac: internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
