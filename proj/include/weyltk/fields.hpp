#pragma once

#include "weyltk/numeric.hpp"

#include <stdexcept>
#include <string>

namespace weyltk {

/// Exact rational arithmetic.
struct RatField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RatField: inverse of zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return rat_to_string(a); }
    std::string name() const { return "Q"; }
};

/// Arithmetic modulo an odd prime.
struct PrimeField {
    long p;
    explicit PrimeField(long prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("PrimeField: bad modulus");
    }
    using Elem = long;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended euclid
        long t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        return from_int(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }
};

} // namespace weyltk
