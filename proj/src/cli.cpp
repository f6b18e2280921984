#include "stablerep/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "stablerep/characters.hpp"
#include "stablerep/fw_algebra.hpp"
#include "stablerep/labeled_partitions.hpp"
#include "stablerep/modules.hpp"
#include "stablerep/partitions.hpp"
#include "stablerep/report.hpp"
#include "stablerep/stable_cohomology.hpp"

#ifndef STABLEREP_VERSION
#define STABLEREP_VERSION "dev"
#endif

namespace stablerep::cli {

namespace fs = std::filesystem;

const char* version() { return STABLEREP_VERSION; }

namespace {

/// What a command computed: the JSON payload (the cached, machine-readable
/// form) and how to render it as text.
struct Outcome {
    json data;
    int exit_code = Success;
};

using TextRenderer = std::function<void(const json&, std::ostream&)>;

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Fixed-width ASCII table.
void print_table(std::ostream& out, const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows,
                 const std::string& indent = "") {
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        out << indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c + 1 == row.size()) out << row[c];
            else out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
        }
        out << "\n";
    };
    line(headers);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : rows) line(row);
}

/// Array of objects → table over the given keys.
void print_records(std::ostream& out, const json& records, const std::vector<std::string>& keys, const std::string& indent = "") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records) {
        std::vector<std::string> row;
        for (const auto& k : keys) row.push_back(cell(r.at(k)));
        rows.push_back(std::move(row));
    }
    print_table(out, keys, rows, indent);
}

void render_report(const json& data, std::ostream& out) {
    out << (data.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << data.at("claim").get<std::string>() << "\n";
    const json& w = data.at("witnesses");
    if (w.contains("classwise") && w.at("classwise").is_array() && !w.at("classwise").empty()) {
        std::vector<std::string> keys;
        for (const auto& item : w.at("classwise").front().items()) keys.push_back(item.key());
        print_records(out, w.at("classwise"), keys);
        for (const auto& item : w.items()) {
            if (item.key() != "classwise") out << item.key() << ": " << cell(item.value()) << "\n";
        }
        return;
    }
    out << "left:  " << data.at("left").dump() << "\n";
    out << "right: " << data.at("right").dump() << "\n";
    for (const auto& item : w.items()) out << item.key() << ": " << cell(item.value()) << "\n";
}

Outcome from_report(const Report& r) { return {json(r), r.pass ? Success : VerificationFailed}; }

int to_int(const std::string& text, const std::string& name) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, name + " must be an integer, got '" + text + "'");
}

/// FNV-1a, stable across runs and platforms, for cache file names.
std::string fingerprint(const std::string& key) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

class ResultCache {
public:
    explicit ResultCache(fs::path dir) : dir_(std::move(dir)) {}

    std::optional<Outcome> load(const std::string& key) const {
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        try {
            const json entry = json::parse(in);
            if (entry.at("key") != key || entry.at("version") != version()) return std::nullopt;
            return Outcome{entry.at("data"), entry.at("exit_code").get<int>()};
        } catch (const std::exception&) {
            return std::nullopt;  // unreadable entries are recomputed and overwritten
        }
    }

    void store(const std::string& key, const Outcome& outcome) const {
        fs::create_directories(dir_);
        const fs::path target = path(key);
        const fs::path temp = target.string() + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream o(temp);
            o << json{{"key", key}, {"version", version()}, {"exit_code", outcome.exit_code}, {"data", outcome.data}}.dump() << "\n";
            if (!o) throw std::runtime_error("cannot write cache entry " + temp.string());
        }
        fs::rename(temp, target);
    }

private:
    fs::path path(const std::string& key) const { return dir_ / (fingerprint(key) + ".json"); }

    fs::path dir_;
};

struct Command {
    std::string key;
    std::function<Outcome()> compute;
    TextRenderer render;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact representation theory of symmetric groups, Schur functors and labeled partitions"};
    app.name("stablerep");
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::optional<std::size_t> budget_flag;
    std::string cache_dir;
    app.add_flag("--json", as_json, "Print JSON instead of text");
    app.add_option("--budget", budget_flag, "Maximum dimension of explicit modules (overrides STABLEREP_BUDGET)");
    app.add_option("--cache", cache_dir, "Directory for cached results");

    Budget budget;
    try {
        budget = Budget::from_environment();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    std::optional<Command> command;
    auto set = [&](std::string key, std::function<Outcome()> compute, TextRenderer render) {
        command = Command{std::move(key), std::move(compute), std::move(render)};
    };

    // partitions N
    std::string n_text;
    auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of N in canonical order");
    partitions_cmd->add_option("N", n_text)->required();
    partitions_cmd->callback([&] {
        const int n = to_int(n_text, "N");
        set("partitions " + std::to_string(n),
            [n] {
                if (n < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
                json list = json::array();
                for (const auto& p : enumerate_partitions(n)) list.push_back(p.to_string());
                return Outcome{{{"n", n}, {"count", list.size()}, {"partitions", list}}};
            },
            [](const json& d, std::ostream& o) {
                for (const auto& p : d.at("partitions")) o << p.get<std::string>() << "\n";
            });
    });

    // char LAMBDA
    std::string lambda_text;
    auto* char_cmd = app.add_subcommand("char", "Character of the Specht module S^LAMBDA");
    char_cmd->add_option("LAMBDA", lambda_text)->required();
    char_cmd->callback([&] {
        const Partition lambda = Partition::parse(lambda_text);
        set("char " + lambda.to_string(),
            [lambda] {
                return Outcome{{{"lambda", lambda.to_string()},
                                {"dimension", big_to_json(specht_dimension(lambda))},
                                {"character", class_function_to_json(irreducible_character(lambda))}}};
            },
            [](const json& d, std::ostream& o) {
                o << "chi^" << d.at("lambda").get<std::string>() << "  (dimension " << cell(d.at("dimension")) << ")\n";
                print_records(o, d.at("character"), {"class", "value"});
            });
    });

    // lr LAMBDA MU NU
    std::string lr_lambda, lr_mu, lr_nu;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^LAMBDA_{MU,NU}");
    lr_cmd->add_option("LAMBDA", lr_lambda)->required();
    lr_cmd->add_option("MU", lr_mu)->required();
    lr_cmd->add_option("NU", lr_nu)->required();
    lr_cmd->callback([&] {
        const Partition lambda = Partition::parse(lr_lambda), mu = Partition::parse(lr_mu), nu = Partition::parse(lr_nu);
        set("lr " + lambda.to_string() + " " + mu.to_string() + " " + nu.to_string(),
            [=] {
                return Outcome{{{"lambda", lambda.to_string()},
                                {"mu", mu.to_string()},
                                {"nu", nu.to_string()},
                                {"coefficient", big_to_json(lr_coefficient(lambda, mu, nu))}}};
            },
            [](const json& d, std::ostream& o) { o << cell(d.at("coefficient")) << "\n"; });
    });

    // cauchy R DV DW
    std::string r_text, dv_text, dw_text;
    auto* cauchy_cmd = app.add_subcommand("cauchy", "Check Cauchy's decomposition of the exterior power of V tensor W");
    cauchy_cmd->add_option("R", r_text)->required();
    cauchy_cmd->add_option("DV", dv_text)->required();
    cauchy_cmd->add_option("DW", dw_text)->required();
    cauchy_cmd->callback([&] {
        const int r = to_int(r_text, "R"), dv = to_int(dv_text, "DV"), dw = to_int(dw_text, "DW");
        set("cauchy " + std::to_string(r) + " " + std::to_string(dv) + " " + std::to_string(dw),
            [=, &budget] { return from_report(verify_cauchy(r, dv, dw, budget)); }, render_report);
    });

    // schur-weyl R D
    std::string sw_r, sw_d;
    auto* sw_cmd = app.add_subcommand("schur-weyl", "Check Schur-Weyl duality on (Q^D)^{tensor R}");
    sw_cmd->add_option("R", sw_r)->required();
    sw_cmd->add_option("D", sw_d)->required();
    sw_cmd->callback([&] {
        const int r = to_int(sw_r, "R"), d = to_int(sw_d, "D");
        set("schur-weyl " + std::to_string(r) + " " + std::to_string(d), [=, &budget] { return from_report(verify_schur_weyl(r, d, budget)); },
            render_report);
    });

    // labeled-partitions P Q
    std::string lp_p, lp_q;
    auto* lp_cmd = app.add_subcommand("labeled-partitions", "Enumerate P_{p,q}");
    lp_cmd->add_option("P", lp_p)->required();
    lp_cmd->add_option("Q", lp_q)->required();
    lp_cmd->callback([&] {
        const int p = to_int(lp_p, "P"), q = to_int(lp_q, "Q");
        set("labeled-partitions " + std::to_string(p) + " " + std::to_string(q),
            [=, &budget] {
                json elements = json::array();
                json text = json::array();
                for (const auto& x : enumerate_pq(p, q, budget)) {
                    elements.push_back(labeled_to_json(x));
                    text.push_back(format_labeled(x));
                }
                return Outcome{{{"p", p}, {"q", q}, {"count", elements.size()}, {"elements", elements}, {"text", text}}};
            },
            [](const json& d, std::ostream& o) {
                for (const auto& t : d.at("text")) o << t.get<std::string>() << "\n";
                o << "count: " << cell(d.at("count")) << "\n";
            });
    });

    // hom-dim P Q D
    std::string hd_p, hd_q, hd_d;
    auto* hom_cmd = app.add_subcommand("hom-dim", "dim Hom_gl((Q^D)^{tensor P}, F_W(Q^D)) two ways");
    hom_cmd->add_option("P", hd_p)->required();
    hom_cmd->add_option("Q", hd_q)->required();
    hom_cmd->add_option("D", hd_d)->required();
    hom_cmd->callback([&] {
        const int p = to_int(hd_p, "P"), q = to_int(hd_q, "Q"), d = to_int(hd_d, "D");
        set("hom-dim " + std::to_string(p) + " " + std::to_string(q) + " " + std::to_string(d),
            [=, &budget] {
                const HomDimension h = hom_space_dimension_gl(p, q, d, budget);
                return Outcome{{{"p", p}, {"q", q}, {"d", d}, {"by_highest_weights", h.by_highest_weights}, {"by_characters", h.by_characters}}};
            },
            [](const json& d, std::ostream& o) {
                o << cell(d.at("by_highest_weights")) << "\n";
                o << "highest weights: " << cell(d.at("by_highest_weights")) << ", characters: " << cell(d.at("by_characters")) << "\n";
            });
    });

    // verify <check> ...
    auto* verify_cmd = app.add_subcommand("verify", "Run one verification");
    verify_cmd->require_subcommand(1);
    std::vector<std::string> vargs;
    auto add_check = [&](const std::string& name, const std::string& description, std::vector<std::string> params,
                         std::function<Report(const std::vector<std::string>&)> check) {
        auto* sub = verify_cmd->add_subcommand(name, description);
        sub->add_option("params", vargs, "Parameters: " + CLI::detail::join(params, " "))->expected(static_cast<int>(params.size()))->required();
        sub->callback([&, name, check] {
            std::vector<std::string> canonical = vargs;
            set("verify " + name + " " + CLI::detail::join(canonical, " "), [check, canonical] { return from_report(check(canonical)); },
                render_report);
        });
    };
    add_check("rw-prop", "phi is an isomorphism onto the Hom space", {"P", "Q", "D"}, [&](const auto& a) {
        return verify_rw_prop(to_int(a[0], "P"), to_int(a[1], "Q"), to_int(a[2], "D"), budget);
    });
    add_check("splitting", "Induced P_{p,i} modules against the Hom space, classwise", {"P", "Q", "D"}, [&](const auto& a) {
        return verify_splitting_lemma(to_int(a[0], "P"), to_int(a[1], "Q"), to_int(a[2], "D"), budget);
    });
    add_check("extension", "Schur functor of a split extension, dimension identities", {"LAMBDA", "DA", "DC"}, [&](const auto& a) {
        return split_extension_filtration_check(Partition::parse(a[0]), to_int(a[1], "DA"), to_int(a[2], "DC"), budget);
    });
    add_check("induction", "Recover P_{p,q} from the Hom space by the induction on q", {"P", "Q"},
              [&](const auto& a) { return theorem_a_induction_check(to_int(a[0], "P"), to_int(a[1], "Q"), budget); });
    add_check("step1", "Graded dimension identity for the symmetric algebra", {"P", "Q", "D"},
              [&](const auto& a) { return step1_dimension_identity(to_int(a[0], "P"), to_int(a[1], "Q"), to_int(a[2], "D")); });

    // stable-cohomology [P Q] [--degree K] [--table PMAX QMAX]
    std::vector<std::string> sc_pq;
    std::optional<int> sc_degree;
    std::vector<int> sc_table;
    auto* sc_cmd = app.add_subcommand("stable-cohomology", "Stable cohomology of Aut(F_n) with coefficients in K_{p,q}(n)");
    sc_cmd->add_option("PQ", sc_pq, "P Q")->expected(0, 2);
    sc_cmd->add_option("--degree", sc_degree, "Cohomological degree (default p - q)");
    sc_cmd->add_option("--table", sc_table, "PMAX QMAX")->expected(2);
    sc_cmd->callback([&] {
        if (!sc_table.empty()) {
            if (!sc_pq.empty() || sc_degree) throw CLI::ValidationError("--table", "cannot be combined with P Q or --degree");
            const int pmax = sc_table[0], qmax = sc_table[1];
            set("stable-cohomology --table " + std::to_string(pmax) + " " + std::to_string(qmax),
                [=, &budget] { return Outcome{{{"table", to_json(dimension_table(pmax, qmax, budget))}}}; },
                [](const json& d, std::ostream& o) { print_records(o, d.at("table"), {"p", "q", "degree", "dimension", "minimal_n"}); });
            return;
        }
        if (sc_pq.size() != 2) throw CLI::ValidationError("stable-cohomology", "needs P Q or --table PMAX QMAX");
        const int p = to_int(sc_pq[0], "P"), q = to_int(sc_pq[1], "Q");
        const int degree = sc_degree.value_or(p - q);
        set("stable-cohomology " + std::to_string(p) + " " + std::to_string(q) + " --degree " + std::to_string(degree),
            [=, &budget] { return Outcome{to_json(stable_cohomology(p, q, degree, budget))}; },
            [](const json& d, std::ostream& o) {
                const StableCohomologyResult r = stable_cohomology_from_json(d);
                o << "H^" << r.degree << "(Aut(F_n); " << r.coefficient.to_string() << ")\n";
                o << "stable for n >= " << r.valid_n_bound() << "  (" << r.valid_range() << ")\n";
                o << "dimension: " << r.dimension.get_str() << "\n";
                if (r.is_zero()) return;
                o << "decomposition (Sigma_p x Sigma_q irreducibles):\n";
                print_records(o, d.at("decomposition"), {"lambda", "mu", "mult"}, "  ");
                o << "character:\n";
                print_records(o, d.at("character"), {"sigma_class", "tau_class", "value"}, "  ");
            });
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return UsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SizeBudgetExceeded ? BudgetExceeded : UsageError;
    }
    if (budget_flag) budget.max_dimension = *budget_flag;
    if (!command) {
        err << app.help("", CLI::AppFormatMode::All);
        return UsageError;
    }

    const std::string key = command->key;
    Outcome outcome;
    try {
        std::optional<Outcome> cached;
        if (!cache_dir.empty()) cached = ResultCache(cache_dir).load(key);
        if (cached) {
            outcome = std::move(*cached);
        } else {
            outcome = command->compute();
            if (!cache_dir.empty()) ResultCache(cache_dir).store(key, outcome);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::SizeBudgetExceeded: return BudgetExceeded;
            case ErrorKind::OracleDisagreement:
            case ErrorKind::NonIntegralMultiplicity:
            case ErrorKind::NegativeMultiplicity:
            case ErrorKind::NonPolynomialAction: return VerificationFailed;
            default: return UsageError;
        }
    } catch (const fs::filesystem_error& e) {
        err << "error: cache: " << e.what() << "\n";
        return UsageError;
    }

    if (as_json) out << outcome.data.dump(2) << "\n";
    else command->render(outcome.data, out);
    return outcome.exit_code;
}

}  // namespace stablerep::cli
