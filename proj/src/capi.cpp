#include "latzeta.h"

#include <cstring>
#include <sstream>
#include <string>

#include "counting/count.hpp"
#include "exactmath/exactmath.hpp"
#include "igusa/igusa.hpp"
#include "io/formats.hpp"
#include "verify/verify.hpp"

using namespace latzeta;

struct lz_algebra {
    algebra::StructureAlgebra value;
};
struct lz_table {
    counting::CountTable value;
};
struct lz_series {
    exactmath::TruncatedSeries value;
};
struct lz_polysys {
    igusa::PolySystem value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lz_status classify(const std::exception& e) {
    std::string what = e.what();
    g_last_error = what;
    if (what.find("budget") != std::string::npos) return LZ_ERR_BUDGET;
    if (what.find("file") != std::string::npos) return LZ_ERR_IO;
    if (what.find("parse") != std::string::npos || what.find("header") != std::string::npos ||
        what.find("line") != std::string::npos)
        return LZ_ERR_PARSE;
    return LZ_ERR_MATH;
}

template <class Fn>
lz_status guarded(Fn&& fn) {
    try {
        fn();
        return LZ_OK;
    } catch (const MathError& e) {
        return classify(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return LZ_ERR_INTERNAL;
    }
}

verify::RunConfig to_run_config(const lz_config* cfg) {
    verify::RunConfig rc;
    if (!cfg) return rc;
    rc.i_max = cfg->i_max;
    rc.k_max = cfg->k_max;
    rc.type_budget = cfg->type_budget;
    rc.precision = cfg->precision;
    rc.workers = cfg->workers;
    rc.budget = cfg->budget;
    rc.fit_max_a = cfg->fit_max_a;
    rc.fit_max_b = cfg->fit_max_b;
    rc.fit_max_mult = cfg->fit_max_mult;
    rc.seed = cfg->seed;
    return rc;
}

}  // namespace

extern "C" {

void lz_config_default(lz_config* cfg) {
    if (!cfg) return;
    cfg->i_max = 6;
    cfg->k_max = 8;
    cfg->strata_i_max = -1;
    cfg->type_budget = 4;
    cfg->precision = 8;
    cfg->workers = 0;
    cfg->budget = 10000000;
    cfg->fit_max_a = 4;
    cfg->fit_max_b = 3;
    cfg->fit_max_mult = 3;
    cfg->seed = 20240001;
}

const char* lz_status_string(lz_status status) {
    switch (status) {
        case LZ_OK: return "ok";
        case LZ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LZ_ERR_PARSE: return "parse error";
        case LZ_ERR_MATH: return "math error";
        case LZ_ERR_BUDGET: return "budget exceeded";
        case LZ_ERR_IO: return "io error";
        case LZ_ERR_NO_FIT: return "no exact fit";
        default: return "internal error";
    }
}

const char* lz_last_error(void) { return g_last_error.c_str(); }

void lz_string_free(char* s) { std::free(s); }

lz_status lz_algebra_from_catalog(const char* name, int64_t prime, lz_algebra** out) {
    if (!name || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_algebra{io::catalog_algebra(name, prime)}; });
}

lz_status lz_algebra_from_text(const char* text, lz_algebra** out) {
    if (!text || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_algebra{io::parse_algebra(text)}; });
}

lz_status lz_algebra_from_file(const char* path, lz_algebra** out) {
    if (!path || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_algebra{io::load_algebra_file(path)}; });
}

void lz_algebra_free(lz_algebra* a) { delete a; }

int32_t lz_algebra_dim(const lz_algebra* a) { return a ? a->value.n : 0; }

int64_t lz_algebra_prime(const lz_algebra* a) { return a ? a->value.p : 0; }

lz_status lz_algebra_name(const lz_algebra* a, char** out) {
    if (!a || !out) return LZ_ERR_INVALID_ARGUMENT;
    *out = dup_string(a->value.name);
    return LZ_OK;
}

int32_t lz_algebra_is_graded(const lz_algebra* a) {
    return a && a->value.weights ? 1 : 0;
}

lz_status lz_algebra_catalog_names(char** out) {
    if (!out) return LZ_ERR_INVALID_ARGUMENT;
    std::ostringstream os;
    for (const auto& n : io::catalog_names()) os << n << "\n";
    *out = dup_string(os.str());
    return LZ_OK;
}

lz_status lz_count(const lz_algebra* a, const lz_config* cfg, lz_table** out) {
    if (!a || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        lz_config def;
        lz_config_default(&def);
        const lz_config* c = cfg ? cfg : &def;
        Parallel par(c->workers);
        int imax = c->i_max;
        if (a->value.n >= 4) imax = std::min(imax, 4);
        *out = new lz_table{counting::count_table(a->value, imax, c->strata_i_max, par)};
    });
}

void lz_table_free(lz_table* t) { delete t; }

lz_status lz_table_records(const lz_table* t, char** out) {
    if (!t || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = dup_string(t->value.to_records()); });
}

lz_status lz_table_text(const lz_table* t, char** out) {
    if (!t || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = dup_string(t->value.to_text()); });
}

lz_status lz_table_series(const lz_table* t, const char* kind, lz_series** out) {
    if (!t || !kind || !out) return LZ_ERR_INVALID_ARGUMENT;
    auto k = counting::kind_from_string(kind);
    if (!k) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        exactmath::TruncatedSeries s(t->value.p, t->value.i_max());
        for (int i = 0; i <= t->value.i_max(); ++i) {
            const auto& src = *k == counting::Kind::Lattice ? t->value.lattices
                              : *k == counting::Kind::Subalgebra ? t->value.subalgebras
                                                                 : t->value.ideals;
            s[i] = QInt(src[static_cast<size_t>(i)]);
        }
        *out = new lz_series{std::move(s)};
    });
}

lz_status lz_table_count(const lz_table* t, const char* kind, int32_t i, char** out) {
    if (!t || !kind || !out) return LZ_ERR_INVALID_ARGUMENT;
    auto k = counting::kind_from_string(kind);
    if (!k || i < 0 || i > t->value.i_max()) return LZ_ERR_INVALID_ARGUMENT;
    const auto& src = *k == counting::Kind::Lattice ? t->value.lattices
                      : *k == counting::Kind::Subalgebra ? t->value.subalgebras
                                                         : t->value.ideals;
    *out = dup_string(src[static_cast<size_t>(i)].get_str());
    return LZ_OK;
}

lz_status lz_series_from_text(const char* text, lz_series** out) {
    if (!text || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_series{io::parse_series(text)}; });
}

lz_status lz_series_text(const lz_series* s, char** out) {
    if (!s || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = dup_string(io::series_to_text(s->value)); });
}

void lz_series_free(lz_series* s) { delete s; }

lz_status lz_series_fit(const lz_series* s, const lz_config* cfg, char** report) {
    if (!s || !report) return LZ_ERR_INVALID_ARGUMENT;
    lz_config def;
    lz_config_default(&def);
    const lz_config* c = cfg ? cfg : &def;
    lz_status rc = guarded([&] {
        std::set<std::pair<int, int>> grid;
        for (int a = 0; a <= c->fit_max_a; ++a)
            for (int b = 1; b <= c->fit_max_b; ++b) grid.insert({a, b});
        auto fit = exactmath::fit_rational(s->value, grid, c->fit_max_mult);
        if (!fit) throw MathError("no-fit: no candidate denominator reproduces the series");
        *report = dup_string(fit->str());
    });
    if (rc != LZ_OK && g_last_error.rfind("no-fit", 0) == 0) return LZ_ERR_NO_FIT;
    return rc;
}

lz_status lz_verify(const lz_algebra* a, const char* suite, const lz_config* cfg, char** report,
                    int32_t* outcome) {
    if (!suite || !report || !outcome) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        verify::RunConfig rc = to_run_config(cfg);
        Parallel par(rc.workers);
        auto result = verify::run_suite(suite, a ? &a->value : nullptr, rc, par);
        *report = dup_string(result.text());
        *outcome = result.status == verify::SuiteStatus::Pass      ? 1
                   : result.status == verify::SuiteStatus::Refused ? 2
                                                                   : 0;
    });
}

lz_status lz_suite_names(char** out) {
    if (!out) return LZ_ERR_INVALID_ARGUMENT;
    std::ostringstream os;
    for (const auto& n : verify::suite_names()) os << n << "\n";
    *out = dup_string(os.str());
    return LZ_OK;
}

lz_status lz_polysys_from_text(const char* text, lz_polysys** out) {
    if (!text || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_polysys{igusa::PolySystem::parse(text)}; });
}

lz_status lz_polysys_from_file(const char* path, lz_polysys** out) {
    if (!path || !out) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new lz_polysys{igusa::PolySystem::parse(io::read_file(path))}; });
}

void lz_polysys_free(lz_polysys* f) { delete f; }

lz_status lz_igusa_count(const lz_polysys* f, const lz_config* cfg, char** report) {
    if (!f || !report) return LZ_ERR_INVALID_ARGUMENT;
    lz_config def;
    lz_config_default(&def);
    const lz_config* c = cfg ? cfg : &def;
    return guarded([&] {
        auto counts = igusa::count_tree(f->value, c->i_max, c->budget);
        std::ostringstream os;
        os << "i M_i\n";
        for (int i = 0; i <= counts.i_max(); ++i)
            os << i << " " << counts.M[static_cast<size_t>(i)].get_str() << "\n";
        // cross-check against the direct sweep where it fits the budget
        for (int i = 0; i <= counts.i_max(); ++i) {
            bool feasible = true;
            uint64_t cost = 1;
            for (int t = 0; t < f->value.n * i && feasible; ++t) {
                cost *= static_cast<uint64_t>(f->value.p);
                if (cost > c->budget) feasible = false;
            }
            if (!feasible) break;
            if (igusa::count_naive(f->value, i, c->budget) != counts.M[static_cast<size_t>(i)])
                throw MathError("naive and lifting-tree counters disagree");
        }
        os << "naive-agreement: checked within budget\n";
        *report = dup_string(os.str());
    });
}

lz_status lz_igusa_slopes(const lz_polysys* f, const lz_config* cfg, char** report) {
    if (!f || !report) return LZ_ERR_INVALID_ARGUMENT;
    lz_config def;
    lz_config_default(&def);
    const lz_config* c = cfg ? cfg : &def;
    return guarded([&] {
        auto counts = igusa::count_tree(f->value, c->i_max, c->budget);
        auto rep = igusa::slope_report(f->value, counts);
        *report = dup_string(rep.str());
    });
}

lz_status lz_igusa_hensel(const lz_polysys* f, const char* point, int32_t k_target,
                          char** report) {
    if (!f || !point || !report) return LZ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<ZInt> a;
        std::stringstream ss(point);
        std::string tok;
        while (std::getline(ss, tok, ',')) a.emplace_back(tok);
        auto res = igusa::hensel_lift(f->value, a, k_target);
        *report = dup_string(res.str());
    });
}

lz_status lz_igusa_reverse_hensel(const lz_polysys* f, const char* lambdas,
                                  const lz_config* cfg, char** report) {
    if (!f || !lambdas || !report) return LZ_ERR_INVALID_ARGUMENT;
    lz_config def;
    lz_config_default(&def);
    const lz_config* c = cfg ? cfg : &def;
    return guarded([&] {
        std::vector<QInt> ls;
        std::stringstream ss(lambdas);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            QInt q(tok);
            q.canonicalize();
            ls.push_back(q);
        }
        auto res = igusa::reverse_hensel_check(f->value, ls, c->precision, c->i_max, c->budget);
        *report = dup_string(res.str());
    });
}

lz_status lz_igusa_homog(const lz_polysys* f, const lz_config* cfg, char** report) {
    if (!f || !report) return LZ_ERR_INVALID_ARGUMENT;
    lz_config def;
    lz_config_default(&def);
    const lz_config* c = cfg ? cfg : &def;
    return guarded([&] {
        auto rep = igusa::homogeneous_bound_check(f->value, c->i_max, c->budget);
        *report = dup_string(rep.str());
    });
}

}  // extern "C"
