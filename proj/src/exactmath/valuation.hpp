#pragma once

#include <string>

#include "support/numeric.hpp"

namespace latzeta::exactmath {

// p-adic valuation value.  The valuation of 0 is a dedicated infinite
// marker that compares above every finite value.
class Valuation {
public:
    Valuation() : inf_(true), v_(0) {}
    explicit Valuation(long v) : inf_(false), v_(v) {}

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return inf_; }
    long finite() const {
        if (inf_) throw MathError("Valuation: infinite value");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return Valuation(v_ + o.v_);
    }

    bool operator==(const Valuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Valuation& o) const { return *this == o || *this < o; }
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    bool operator>(const Valuation& o) const { return o < *this; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    bool inf_;
    long v_;
};

// v_p of a rational; infinity for 0.
Valuation valuation(const QInt& x, int64_t p);
Valuation valuation(const ZInt& x, int64_t p);

}  // namespace latzeta::exactmath
