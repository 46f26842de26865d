#include "latbound/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latbound/errors.hpp"
#include "latbound/format.hpp"
#include "latbound/hermite_bounds.hpp"
#include "latbound/kz_bounds.hpp"
#include "latbound/lattice.hpp"
#include "latbound/proofcheck.hpp"
#include "latbound/validate.hpp"

namespace latbound::cli {

namespace {

using Row = std::pair<std::string, std::optional<double>>;

std::vector<Row> hermite_rows(int n) {
    namespace h = hermite;
    std::vector<Row> rows;
    rows.emplace_back("exact", h::exact_gamma(n));
    rows.emplace_back("blichfeldt", h::blichfeldt_bound(n));
    const std::pair<std::string, h::BoundKind> linear[] = {
        {"linear_lls", h::BoundKind::LinearLLS},
        {"linear_nv", h::BoundKind::LinearNV},
        {"linear_neu", h::BoundKind::LinearNeu},
        {"linear_wc18", h::BoundKind::LinearWC18},
        {"linear_new", h::BoundKind::LinearNew},
    };
    for (const auto& [name, kind] : linear) {
        h::BoundEvaluation e = h::evaluate_bound(kind, n);
        rows.emplace_back(name, e.valid ? std::optional<double>(e.value)
                                        : std::nullopt);
    }
    rows.emplace_back("best", h::best_upper_bound(n));
    return rows;
}

std::vector<Row> kz_rows(int n) {
    auto guarded = [n](double (*f)(int)) -> std::optional<double> {
        try {
            return f(n);
        } catch (const ValidityError&) {
            return std::nullopt;
        }
    };
    std::vector<Row> rows;
    rows.emplace_back("schnorr", guarded(kz::schnorr_bound));
    rows.emplace_back("hanrot_stehle", guarded(kz::hanrot_stehle_bound));
    rows.emplace_back("wc18", guarded(kz::wc18_bound));
    rows.emplace_back("new", guarded(kz::new_bound));
    std::optional<double> best;
    for (const Row& r : rows) {
        if (r.second && (!best || *r.second < *best)) {
            best = *r.second;
        }
    }
    rows.emplace_back("best", best);
    return rows;
}

void print_rows(std::ostream& out, int n, const std::vector<Row>& rows,
                bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        for (const Row& r : rows) {
            if (r.second) {
                j[r.first] = *r.second;
            } else {
                j[r.first] = nullptr;
            }
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "n=" << n << "\n";
    for (const Row& r : rows) {
        out << r.first << "="
            << (r.second ? fmt12(*r.second) : std::string("invalid"))
            << "\n";
    }
}

void print_check_line(std::ostream& out, const proofcheck::CheckResult& r) {
    out << r.name << " " << (r.passed ? "PASS" : "FAIL")
        << " computed=" << fmt17(r.computed)
        << " threshold=" << fmt17(r.threshold)
        << " margin=" << fmt17(r.margin)
        << " tolerance=" << fmt17(r.tolerance) << "\n";
}

int run_verify(const std::string& check_name, bool json, std::ostream& out,
               std::ostream& err) {
    proofcheck::ProofReport report = proofcheck::run_all();
    if (!check_name.empty()) {
        proofcheck::ProofReport filtered;
        for (const proofcheck::CheckResult& r : report.results) {
            if (r.name == check_name) {
                filtered.results.push_back(r);
            }
        }
        if (filtered.results.empty()) {
            err << "unknown check: " << check_name << "\n";
            err << "known checks:\n";
            for (const proofcheck::CheckResult& r : report.results) {
                err << "  " << r.name << "\n";
            }
            return 2;
        }
        filtered.all_passed = filtered.results.front().passed;
        report = std::move(filtered);
    }
    if (json) {
        out << proofcheck::to_json(report).dump(2) << "\n";
    } else {
        for (const proofcheck::CheckResult& r : report.results) {
            print_check_line(out, r);
        }
        out << "all_passed " << (report.all_passed ? "true" : "false")
            << "\n";
    }
    return report.all_passed ? 0 : 1;
}

int run_figure(int id, int n_max, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "cannot open for writing: " << out_path << "\n";
            return 2;
        }
        target = &file;
    }
    if (id == 1) {
        hermite::write_figure1_csv(*target, hermite::figure1_series(n_max));
    } else {
        kz::write_figure2_csv(*target, kz::figure2_series(111, n_max));
    }
    return 0;
}

lattice::Basis read_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileFormatError("cannot open: " + path);
    }
    return lattice::read_basis(in);
}

int run_reduce(const std::string& in_path, const std::string& method,
               double delta, int cap, const std::string& out_path,
               std::ostream& err) {
    lattice::Basis basis = read_basis_file(in_path);
    lattice::Basis reduced;
    if (method == "lll") {
        reduced = lattice::lll_reduce(basis, delta).first;
    } else {
        reduced = lattice::kz_reduce(basis, cap).first;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "cannot open for writing: " << out_path << "\n";
        return 2;
    }
    lattice::write_basis(file, reduced);
    return 0;
}

int run_svp(const std::string& in_path, int cap, std::ostream& out) {
    lattice::Basis basis = read_basis_file(in_path);
    lattice::RFactor rf = lattice::qr_decompose(basis);
    lattice::ShortestVectorResult sv = lattice::svp_shortest(rf, cap);
    out << "norm=" << fmt17(sv.norm) << "\n";
    out << "norm_squared=" << fmt17(sv.norm * sv.norm) << "\n";
    out << "coefficients=";
    for (int i = 0; i < static_cast<int>(sv.coefficients.size()); ++i) {
        if (i > 0) {
            out << " ";
        }
        out << sv.coefficients[i];
    }
    out << "\n";
    return 0;
}

int run_validate(const std::string& mode, const validate::TrialConfig& config,
                 const std::string& csv_path, std::ostream& out,
                 std::ostream& err) {
    validate::ValidationReport report =
        mode == "hermite" ? validate::run_hermite_trials(config)
                          : validate::run_kz_trials(config);
    if (!csv_path.empty()) {
        std::ofstream file(csv_path);
        if (!file) {
            err << "cannot open for writing: " << csv_path << "\n";
            return 2;
        }
        validate::write_trials_csv(file, report);
    }
    report.per_trial.clear();
    out << validate::to_json(report).dump(2) << "\n";
    return report.violations > 0 ? 1 : 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"upper bounds on lattice reduction constants"};
    app.require_subcommand(1);

    auto* bounds = app.add_subcommand(
        "bounds", "evaluate every bound for one dimension");
    std::string bounds_kind;
    int bounds_n = 0;
    bool bounds_json = false;
    bounds->add_option("kind", bounds_kind, "hermite or kz")
        ->required()
        ->check(CLI::IsMember({"hermite", "kz"}));
    bounds->add_option("--n", bounds_n, "dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds->add_flag("--json", bounds_json, "JSON instead of key=value");

    auto* verify = app.add_subcommand(
        "verify", "re-run the numeric derivation audit");
    std::string verify_what;
    std::string verify_check;
    bool verify_json = false;
    verify->add_option("what", verify_what, "only `proof` exists")
        ->required()
        ->check(CLI::IsMember({"proof"}));
    verify->add_option("--check", verify_check, "run a single named check");
    verify->add_flag("--json", verify_json, "JSON array instead of lines");

    auto* figure = app.add_subcommand(
        "figure", "bound-ratio series as CSV");
    int figure_id = 0;
    int figure_nmax = 1000;
    std::string figure_out;
    figure->add_option("--id", figure_id, "1: hermite ratios, 2: kz ratio")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    figure->add_option("--nmax", figure_nmax, "largest dimension");
    figure->add_option("--out", figure_out, "output path (default stdout)");

    auto* reduce = app.add_subcommand(
        "reduce", "reduce a basis file and write the result");
    std::string reduce_in;
    std::string reduce_method;
    double reduce_delta = 0.99;
    int reduce_cap = lattice::default_dimension_cap;
    std::string reduce_out;
    reduce->add_option("--in", reduce_in, "input basis file")->required();
    reduce->add_option("--method", reduce_method, "lll or kz")
        ->required()
        ->check(CLI::IsMember({"lll", "kz"}));
    reduce->add_option("--delta", reduce_delta,
                       "reduction quality (lll only)");
    reduce->add_option("--cap", reduce_cap, "enumeration dimension cap");
    reduce->add_option("--out", reduce_out, "output basis file")->required();

    auto* svp = app.add_subcommand(
        "svp", "exact shortest vector of a basis file");
    std::string svp_in;
    int svp_cap = lattice::default_dimension_cap;
    svp->add_option("--in", svp_in, "input basis file")->required();
    svp->add_option("--cap", svp_cap, "enumeration dimension cap");

    auto* val = app.add_subcommand(
        "validate", "random-lattice soundness trials");
    std::string val_mode;
    validate::TrialConfig config;
    std::string val_csv;
    val->add_option("kind", val_mode, "hermite or kz")
        ->required()
        ->check(CLI::IsMember({"hermite", "kz"}));
    val->add_option("--n", config.n, "dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    val->add_option("--trials", config.trials, "number of trials");
    val->add_option("--seed", config.seed, "stream seed");
    val->add_option("--range", config.entry_range,
                    "entries drawn from [-range, range]");
    val->add_option("--csv", val_csv, "write per-trial rows to this path");

    std::vector<const char*> argv;
    argv.push_back("latbound");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*bounds) {
            auto rows = bounds_kind == "hermite" ? hermite_rows(bounds_n)
                                                 : kz_rows(bounds_n);
            print_rows(out, bounds_n, rows, bounds_json);
            return 0;
        }
        if (*verify) {
            return run_verify(verify_check, verify_json, out, err);
        }
        if (*figure) {
            return run_figure(figure_id, figure_nmax, figure_out, out, err);
        }
        if (*reduce) {
            return run_reduce(reduce_in, reduce_method, reduce_delta,
                              reduce_cap, reduce_out, err);
        }
        if (*svp) {
            return run_svp(svp_in, svp_cap, out);
        }
        if (*val) {
            return run_validate(val_mode, config, val_csv, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace latbound::cli
