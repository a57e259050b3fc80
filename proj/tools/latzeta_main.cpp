// latzeta command-line front end.  Talks to the core exclusively through the
// C API in latzeta.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latzeta.h"

namespace {

struct Options {
    std::string algebra;       // catalog name
    std::string algebra_file;  // or definition file
    std::string poly_file;
    std::string series_file;
    std::string table_file;
    std::string kind = "subalgebra";
    std::string suite;
    std::string out;
    std::string config_path;
    std::string point;
    std::string lambdas = "1";
    int64_t prime = 2;
    int k_target = 2;
    lz_config cfg{};
};

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

void require_ok(lz_status rc) {
    if (rc != LZ_OK) die(std::string(lz_status_string(rc)) + ": " + lz_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    lz_string_free(s);
    return out;
}

void write_out(const Options& opt, const std::string& records) {
    if (opt.out.empty()) return;
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) die("cannot write " + opt.out);
    f << records;
}

// Config file: JSON object whose keys mirror the flags; applied on top of
// the command line only when --config is given.
void apply_config(Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream f(opt.config_path);
    if (!f) die("cannot read config " + opt.config_path);
    nlohmann::json j;
    f >> j;
    auto geti = [&](const char* key, int32_t& slot) {
        if (j.contains(key)) slot = j[key].get<int32_t>();
    };
    if (j.contains("prime")) opt.prime = j["prime"].get<int64_t>();
    geti("imax", opt.cfg.i_max);
    geti("kmax", opt.cfg.k_max);
    geti("strata-imax", opt.cfg.strata_i_max);
    geti("budget-types", opt.cfg.type_budget);
    geti("precision", opt.cfg.precision);
    geti("workers", opt.cfg.workers);
    if (j.contains("budget")) opt.cfg.budget = j["budget"].get<uint64_t>();
    geti("fit-max-a", opt.cfg.fit_max_a);
    geti("fit-max-b", opt.cfg.fit_max_b);
    geti("fit-max-mult", opt.cfg.fit_max_mult);
    if (j.contains("seed")) opt.cfg.seed = j["seed"].get<uint64_t>();
}

lz_algebra* open_algebra(const Options& opt, bool required) {
    lz_algebra* a = nullptr;
    if (!opt.algebra_file.empty()) {
        require_ok(lz_algebra_from_file(opt.algebra_file.c_str(), &a));
    } else if (!opt.algebra.empty()) {
        require_ok(lz_algebra_from_catalog(opt.algebra.c_str(), opt.prime, &a));
    } else if (required) {
        die("an algebra is required (--algebra or --algebra-file)");
    }
    return a;
}

lz_polysys* open_polysys(const Options& opt) {
    if (opt.poly_file.empty()) die("a polynomial file is required (--poly-file)");
    lz_polysys* f = nullptr;
    require_ok(lz_polysys_from_file(opt.poly_file.c_str(), &f));
    return f;
}

int cmd_count(Options& opt) {
    lz_algebra* a = open_algebra(opt, true);
    lz_table* t = nullptr;
    std::cerr << "counting up to i=" << opt.cfg.i_max << " ...\n";
    require_ok(lz_count(a, &opt.cfg, &t));
    char* text = nullptr;
    require_ok(lz_table_text(t, &text));
    std::cout << take_string(text);
    char* records = nullptr;
    require_ok(lz_table_records(t, &records));
    write_out(opt, take_string(records));
    lz_table_free(t);
    lz_algebra_free(a);
    return 0;
}

int cmd_verify(Options& opt) {
    lz_algebra* a = open_algebra(opt, opt.suite != "igusa-suite");
    char* report = nullptr;
    int32_t outcome = 0;
    require_ok(lz_verify(a, opt.suite.c_str(), &opt.cfg, &report, &outcome));
    std::string text = take_string(report);
    std::cout << text << "\n";
    write_out(opt, text + "\n");
    if (a) lz_algebra_free(a);
    if (outcome == 2) {
        std::cerr << "suite refused (precondition not met)\n";
        return 3;
    }
    return outcome == 1 ? 0 : 1;
}

int cmd_fit(Options& opt) {
    lz_series* s = nullptr;
    if (!opt.series_file.empty()) {
        std::ifstream f(opt.series_file, std::ios::binary);
        if (!f) die("cannot read " + opt.series_file);
        std::ostringstream ss;
        ss << f.rdbuf();
        require_ok(lz_series_from_text(ss.str().c_str(), &s));
    } else if (!opt.table_file.empty()) {
        // machine-readable count records: rebuild the requested series
        std::ifstream f(opt.table_file);
        if (!f) die("cannot read " + opt.table_file);
        std::string line, word;
        int64_t prime = 0;
        std::ostringstream series_text;
        std::vector<std::pair<int, std::string>> coeffs;
        while (std::getline(f, line)) {
            std::istringstream ls(line);
            ls >> word;
            if (word == "table") {
                std::string tok;
                while (ls >> tok)
                    if (tok.rfind("p=", 0) == 0) prime = std::stoll(tok.substr(2));
            } else if (word == "count") {
                std::string kind, value;
                int i;
                ls >> kind >> i >> value;
                if (kind == opt.kind) coeffs.emplace_back(i, value);
            }
        }
        if (prime == 0 || coeffs.empty()) die("no usable records in " + opt.table_file);
        series_text << "series p=" << prime << "\n";
        for (auto& [i, v] : coeffs) series_text << i << " " << v << "\n";
        require_ok(lz_series_from_text(series_text.str().c_str(), &s));
    } else {
        die("a series is required (--series-file or --table-file)");
    }
    char* report = nullptr;
    lz_status rc = lz_series_fit(s, &opt.cfg, &report);
    if (rc == LZ_ERR_NO_FIT) {
        std::cout << "no-fit: no candidate denominator reproduces the series\n";
        lz_series_free(s);
        return 1;
    }
    require_ok(rc);
    std::string text = take_string(report);
    std::cout << text << "\n";
    write_out(opt, text + "\n");
    lz_series_free(s);
    return 0;
}

int cmd_igusa(const std::string& sub, Options& opt) {
    lz_polysys* f = open_polysys(opt);
    char* report = nullptr;
    if (sub == "count") require_ok(lz_igusa_count(f, &opt.cfg, &report));
    else if (sub == "slopes") require_ok(lz_igusa_slopes(f, &opt.cfg, &report));
    else if (sub == "hensel")
        require_ok(lz_igusa_hensel(f, opt.point.c_str(), opt.k_target, &report));
    else if (sub == "reverse-hensel")
        require_ok(lz_igusa_reverse_hensel(f, opt.lambdas.c_str(), &opt.cfg, &report));
    else if (sub == "homog") require_ok(lz_igusa_homog(f, &opt.cfg, &report));
    else die("unknown igusa subcommand " + sub);
    std::string text = take_string(report);
    std::cout << text << "\n";
    write_out(opt, text + "\n");
    lz_polysys_free(f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    lz_config_default(&opt.cfg);

    CLI::App app{"exact sublattice / subalgebra / polynomial-congruence counting over Z_p"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--prime", opt.prime, "prime p for catalog algebras");
        cmd->add_option("--imax", opt.cfg.i_max, "largest index exponent");
        cmd->add_option("--kmax", opt.cfg.k_max, "c_k window");
        cmd->add_option("--strata-imax", opt.cfg.strata_i_max,
                        "record weight/type strata up to this index (-1 = off)");
        cmd->add_option("--budget", opt.cfg.budget, "point-sweep budget");
        cmd->add_option("--budget-types", opt.cfg.type_budget, "cell sweep index bound");
        cmd->add_option("--precision", opt.cfg.precision, "working precision K");
        cmd->add_option("--workers", opt.cfg.workers, "worker threads (0 = auto)");
        cmd->add_option("--seed", opt.cfg.seed, "seed for randomized spot checks");
        cmd->add_option("--out", opt.out, "write the machine-readable report here");
        cmd->add_option("--config", opt.config_path, "JSON config overriding the flags");
    };

    auto* count = app.add_subcommand("count", "count sublattices, subalgebras and ideals");
    count->add_option("--algebra", opt.algebra, "catalog algebra name");
    count->add_option("--algebra-file", opt.algebra_file, "algebra definition file");
    add_common(count);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", opt.suite, "suite name")->required();
    verify->add_option("--algebra", opt.algebra, "catalog algebra name");
    verify->add_option("--algebra-file", opt.algebra_file, "algebra definition file");
    add_common(verify);

    auto* fit = app.add_subcommand("fit", "reconstruct a rational function from a series");
    fit->add_option("--series-file", opt.series_file, "series file");
    fit->add_option("--table-file", opt.table_file, "count records file");
    fit->add_option("--kind", opt.kind, "series kind from a table file");
    fit->add_option("--fit-max-a", opt.cfg.fit_max_a, "candidate exponent bound a");
    fit->add_option("--fit-max-b", opt.cfg.fit_max_b, "candidate exponent bound b");
    fit->add_option("--fit-max-mult", opt.cfg.fit_max_mult, "factor multiplicity cap");
    add_common(fit);

    auto* igusa = app.add_subcommand("igusa", "polynomial congruence counting");
    igusa->require_subcommand(1);
    std::vector<CLI::App*> igusa_subs;
    for (const char* name : {"count", "slopes", "hensel", "reverse-hensel", "homog"}) {
        auto* sub = igusa->add_subcommand(name);
        sub->add_option("--poly-file", opt.poly_file, "polynomial system file")->required();
        sub->add_option("--point", opt.point, "comma-separated start point (hensel)");
        sub->add_option("--ktarget", opt.k_target, "target precision (hensel)");
        sub->add_option("--lambdas", opt.lambdas, "comma-separated rationals (reverse-hensel)");
        add_common(sub);
        igusa_subs.push_back(sub);
    }

    auto* catalog = app.add_subcommand("catalog", "list built-in algebras and suites");

    CLI11_PARSE(app, argc, argv);
    apply_config(opt);

    if (count->parsed()) return cmd_count(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (fit->parsed()) return cmd_fit(opt);
    if (igusa->parsed()) {
        for (auto* sub : igusa_subs)
            if (sub->parsed()) return cmd_igusa(sub->get_name(), opt);
    }
    if (catalog->parsed()) {
        char* names = nullptr;
        require_ok(lz_algebra_catalog_names(&names));
        std::cout << "algebras:\n" << take_string(names);
        require_ok(lz_suite_names(&names));
        std::cout << "suites:\n" << take_string(names);
        return 0;
    }
    return 2;
}
