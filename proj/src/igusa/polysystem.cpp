#include "igusa/polysystem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latzeta::igusa {

int Poly::total_degree() const {
    int d = 0;
    for (const auto& m : monomials) {
        int t = 0;
        for (int e : m.exp) t += e;
        d = std::max(d, t);
    }
    return d;
}

bool Poly::homogeneous() const {
    if (monomials.empty()) return true;
    int d = -1;
    for (const auto& m : monomials) {
        int t = 0;
        for (int e : m.exp) t += e;
        if (d < 0) d = t;
        if (t != d) return false;
    }
    return true;
}

Poly Poly::derivative(int var) const {
    Poly out;
    for (const auto& m : monomials) {
        int e = m.exp[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d.coeff = m.coeff * e;
        d.exp[static_cast<size_t>(var)] = e - 1;
        out.monomials.push_back(std::move(d));
    }
    return out;
}

int64_t PolySystem::eval(int poly, const std::vector<int64_t>& a, int64_t mod) const {
    int64_t acc = 0;
    for (const auto& mono : polys[static_cast<size_t>(poly)].monomials) {
        int64_t term = mod_floor(mono.coeff, mod);
        for (int v = 0; v < n && term != 0; ++v) {
            int e = mono.exp[static_cast<size_t>(v)];
            if (e) term = mul_mod(term, pow_mod(a[static_cast<size_t>(v)], e, mod), mod);
        }
        acc = (acc + term) % mod;
    }
    return acc;
}

namespace {

// one monomial: [coeff] [* x<i>[^<e>]]...
Poly::Monomial parse_monomial(const std::string& tok, int n, int line_no) {
    Poly::Monomial m;
    m.exp.assign(static_cast<size_t>(n), 0);
    m.coeff = 1;
    size_t pos = 0;
    bool saw_anything = false;
    auto fail = [&](const std::string& why) {
        throw MathError("polynomial line " + std::to_string(line_no) + ": " + why + " in '" +
                        tok + "'");
    };
    while (pos < tok.size()) {
        if (tok[pos] == '*') {
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(tok[pos]))) {
            size_t end = pos;
            while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
            m.coeff *= std::stoll(tok.substr(pos, end - pos));
            pos = end;
            saw_anything = true;
            continue;
        }
        if (tok[pos] == 'x') {
            size_t end = pos + 1;
            while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
            if (end == pos + 1) fail("variable index missing");
            int var = std::stoi(tok.substr(pos + 1, end - pos - 1));
            if (var < 1 || var > n) fail("variable index out of range");
            int e = 1;
            pos = end;
            if (pos < tok.size() && tok[pos] == '^') {
                size_t estart = pos + 1, eend = estart;
                while (eend < tok.size() && std::isdigit(static_cast<unsigned char>(tok[eend])))
                    ++eend;
                if (eend == estart) fail("exponent missing");
                e = std::stoi(tok.substr(estart, eend - estart));
                pos = eend;
            }
            m.exp[static_cast<size_t>(var - 1)] += e;
            saw_anything = true;
            continue;
        }
        fail("unexpected character");
    }
    if (!saw_anything) fail("empty monomial");
    return m;
}

}  // namespace

PolySystem PolySystem::parse(const std::string& text) {
    PolySystem sys;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        if (!header_seen) {
            // "n=<vars> p=<prime>"
            std::istringstream hs(line);
            std::string tok;
            while (hs >> tok) {
                if (tok.rfind("n=", 0) == 0) sys.n = std::stoi(tok.substr(2));
                else if (tok.rfind("p=", 0) == 0) sys.p = std::stoll(tok.substr(2));
                else throw MathError("polynomial header: unexpected token '" + tok + "'");
            }
            if (sys.n < 1 || sys.p < 2)
                throw MathError("polynomial header must declare n>=1 and a prime p");
            header_seen = true;
            continue;
        }

        // split the polynomial into signed monomials
        Poly poly;
        std::string cur;
        int sign = 1;
        bool anything = false;
        auto flush = [&]() {
            if (cur.empty()) return;
            auto m = parse_monomial(cur, sys.n, line_no);
            m.coeff *= sign;
            poly.monomials.push_back(std::move(m));
            cur.clear();
            anything = true;
        };
        int pending_sign = 1;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch == '+' || ch == '-') {
                if (cur.empty()) {
                    pending_sign *= (ch == '-') ? -1 : 1;
                } else {
                    flush();
                    pending_sign = (ch == '-') ? -1 : 1;
                }
                sign = pending_sign;
                continue;
            }
            if (cur.empty()) sign = pending_sign;
            cur.push_back(ch);
        }
        flush();
        if (!anything) continue;
        // "0" alone denotes the zero polynomial
        if (poly.monomials.size() == 1 && poly.monomials[0].coeff == 0) poly.monomials.clear();
        // merge duplicate exponent vectors
        Poly merged;
        for (auto& m : poly.monomials) {
            bool found = false;
            for (auto& o : merged.monomials)
                if (o.exp == m.exp) {
                    o.coeff += m.coeff;
                    found = true;
                    break;
                }
            if (!found) merged.monomials.push_back(m);
        }
        merged.monomials.erase(std::remove_if(merged.monomials.begin(), merged.monomials.end(),
                                              [](const Poly::Monomial& m) { return m.coeff == 0; }),
                               merged.monomials.end());
        sys.polys.push_back(std::move(merged));
    }
    if (!header_seen) throw MathError("polynomial file: missing header");
    if (sys.polys.empty()) throw MathError("polynomial file: no polynomials");
    return sys;
}

std::string PolySystem::str() const {
    std::ostringstream os;
    os << "n=" << n << " p=" << p << "\n";
    for (const auto& poly : polys) {
        if (poly.monomials.empty()) {
            os << "0\n";
            continue;
        }
        bool first = true;
        for (const auto& m : poly.monomials) {
            int64_t c = m.coeff;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            int64_t ac = std::abs(c);
            bool printed = false;
            if (ac != 1) {
                os << ac;
                printed = true;
            }
            for (int v = 0; v < n; ++v) {
                int e = m.exp[static_cast<size_t>(v)];
                if (!e) continue;
                if (printed) os << "*";
                os << "x" << (v + 1);
                if (e > 1) os << "^" << e;
                printed = true;
            }
            if (!printed) os << ac;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace latzeta::igusa
