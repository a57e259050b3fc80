#pragma once

#include <optional>
#include <string>
#include <vector>

#include "support/numeric.hpp"

namespace latzeta::igusa {

// Sparse integer polynomial in n variables.
struct Poly {
    struct Monomial {
        std::vector<int> exp;  // length n
        int64_t coeff;
    };
    std::vector<Monomial> monomials;

    int total_degree() const;
    bool homogeneous() const;  // all monomials of equal total degree
    Poly derivative(int var) const;
};

// A polynomial map f : Z_p^n -> Z_p^m.
struct PolySystem {
    int n = 0;       // variables
    int64_t p = 0;   // prime
    std::vector<Poly> polys;

    int m() const { return static_cast<int>(polys.size()); }

    // evaluation mod `mod` (a p-power), point coordinates reduced mod `mod`
    int64_t eval(int poly, const std::vector<int64_t>& a, int64_t mod) const;

    // text format: header "n=<vars> p=<prime>", one polynomial per line,
    // monomials "coeff*x1^e1*...*xn^en" joined with + and -
    static PolySystem parse(const std::string& text);
    std::string str() const;
};

}  // namespace latzeta::igusa
