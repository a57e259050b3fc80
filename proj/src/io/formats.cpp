#include "io/formats.hpp"

#include <fstream>
#include <sstream>

namespace latzeta::io {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct DeclaredProps {
    std::optional<bool> lie;
    std::optional<int> nilpotent_class;
    std::optional<bool> residually_nilpotent;
};

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw MathError("algebra file: bad boolean for " + key);
}

}  // namespace

algebra::StructureAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    int dim = 0;
    int64_t prime = 0;
    std::vector<int> weights;
    DeclaredProps props;
    struct Entry {
        int i, j, k;
        int64_t v;
    };
    std::vector<Entry> entries;

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = trim(line.substr(0, colon));
            std::string val = trim(line.substr(colon + 1));
            if (key == "name") name = val;
            else if (key == "dim") dim = std::stoi(val);
            else if (key == "prime") prime = std::stoll(val);
            else if (key == "weights") {
                std::istringstream ws(val);
                int w;
                while (ws >> w) weights.push_back(w);
            } else if (key == "lie") props.lie = parse_bool(val, key);
            else if (key == "nilpotent_class") props.nilpotent_class = std::stoi(val);
            else if (key == "residually_nilpotent")
                props.residually_nilpotent = parse_bool(val, key);
            else throw MathError("algebra file: unknown key '" + key + "'");
            continue;
        }
        std::istringstream es(line);
        Entry e;
        if (!(es >> e.i >> e.j >> e.k >> e.v))
            throw MathError("algebra file: bad constant line '" + line + "'");
        std::string rest;
        if (es >> rest) throw MathError("algebra file: trailing data '" + line + "'");
        entries.push_back(e);
    }
    if (dim < 1) throw MathError("algebra file: dim missing or invalid");
    if (prime < 2) throw MathError("algebra file: prime missing or invalid");

    algebra::StructureAlgebra a(name, dim, prime);
    for (const auto& e : entries) {
        if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
            throw MathError("algebra file: index out of range");
        a.set_c(e.i - 1, e.j - 1, e.k - 1, e.v);
    }
    a.rebuild_terms();
    if (!weights.empty()) algebra::attach_weights(a, weights);

    // re-verify declared properties
    if (props.lie && *props.lie != algebra::is_lie(a))
        throw MathError("algebra file: declared 'lie' property does not hold");
    if (props.nilpotent_class) {
        auto cls = algebra::nilpotency_class(a, *props.nilpotent_class + 2);
        if (!cls || *cls != *props.nilpotent_class)
            throw MathError("algebra file: declared nilpotency class does not hold");
    }
    if (props.residually_nilpotent) {
        auto verdict = algebra::is_residually_nilpotent(a, 2, 16);
        if (*props.residually_nilpotent && verdict != algebra::ResidualVerdict::Verified)
            throw MathError("algebra file: declared residual nilpotency not confirmed");
        if (!*props.residually_nilpotent && verdict != algebra::ResidualVerdict::RefutedAtDepth)
            throw MathError("algebra file: declared non-residual-nilpotency not confirmed");
    }
    return a;
}

algebra::StructureAlgebra load_algebra_file(const std::string& path) {
    return parse_algebra(read_file(path));
}

std::string algebra_to_text(const algebra::StructureAlgebra& a) {
    std::ostringstream os;
    if (!a.name.empty()) os << "name: " << a.name << "\n";
    os << "dim: " << a.n << "\n";
    os << "prime: " << a.p << "\n";
    if (a.weights) {
        os << "weights:";
        for (int w : *a.weights) os << ' ' << w;
        os << "\n";
    }
    for (const auto& t : a.terms)
        os << t.i + 1 << ' ' << t.j + 1 << ' ' << t.k + 1 << ' ' << t.v << "\n";
    return os.str();
}

std::vector<std::string> catalog_names() {
    return {"abelian-1", "abelian-2", "abelian-3", "abelian-4",
            "heisenberg", "filiform-4", "zp2-componentwise"};
}

algebra::StructureAlgebra catalog_algebra(const std::string& name, int64_t p) {
    if (p < 2) throw MathError("catalog: prime must be >= 2");
    if (name.rfind("pi-", 0) == 0)
        return algebra::pi_scale(catalog_algebra(name.substr(3), p));

    if (name.rfind("abelian-", 0) == 0) {
        int n = std::stoi(name.substr(8));
        if (n < 1 || n > 8) throw MathError("catalog: abelian dimension out of range");
        algebra::StructureAlgebra a(name, n, p);
        a.rebuild_terms();
        algebra::attach_weights(a, std::vector<int>(static_cast<size_t>(n), 1));
        return a;
    }
    if (name == "heisenberg") {
        algebra::StructureAlgebra a(name, 3, p);
        a.set_c(0, 1, 2, 1);
        a.set_c(1, 0, 2, -1);
        a.rebuild_terms();
        algebra::attach_weights(a, {1, 1, 2});
        return a;
    }
    if (name == "filiform-4") {
        algebra::StructureAlgebra a(name, 4, p);
        a.set_c(0, 1, 2, 1);
        a.set_c(1, 0, 2, -1);
        a.set_c(0, 2, 3, 1);
        a.set_c(2, 0, 3, -1);
        a.rebuild_terms();
        algebra::attach_weights(a, {1, 1, 2, 3});
        return a;
    }
    if (name == "zp2-componentwise") {
        algebra::StructureAlgebra a(name, 2, p);
        a.set_c(0, 0, 0, 1);
        a.set_c(1, 1, 1, 1);
        a.rebuild_terms();
        return a;
    }
    throw MathError("catalog: unknown algebra '" + name + "'");
}

exactmath::TruncatedSeries parse_series(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int64_t prime = 0;
    std::vector<std::pair<int, QInt>> coeffs;
    int max_i = -1;
    bool header_seen = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header_seen) {
            std::istringstream hs(line);
            std::string tok;
            hs >> tok;
            if (tok != "series") throw MathError("series file: missing 'series' header");
            while (hs >> tok) {
                if (tok.rfind("p=", 0) == 0) prime = std::stoll(tok.substr(2));
                else throw MathError("series file: unexpected header token");
            }
            if (prime < 2) throw MathError("series file: header must declare p");
            header_seen = true;
            continue;
        }
        std::istringstream cs(line);
        int idx;
        std::string val;
        if (!(cs >> idx >> val)) throw MathError("series file: bad coefficient line");
        QInt q(val);
        q.canonicalize();
        coeffs.emplace_back(idx, q);
        max_i = std::max(max_i, idx);
    }
    if (!header_seen || max_i < 0) throw MathError("series file: empty");
    exactmath::TruncatedSeries s(prime, max_i);
    for (auto& [i, v] : coeffs) {
        if (i < 0) throw MathError("series file: negative index");
        s[i] = v;
    }
    return s;
}

std::string series_to_text(const exactmath::TruncatedSeries& s) {
    std::ostringstream os;
    os << "series p=" << s.p << "\n";
    for (int i = 0; i <= s.order(); ++i) os << i << ' ' << s[i].get_str() << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MathError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MathError("cannot write file: " + path);
    out << content;
}

}  // namespace latzeta::io
