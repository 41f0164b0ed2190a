#pragma once

#include "weyltk/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace weyltk {

/// Univariate polynomial in q with exact integer coefficients.
/// Coefficients are stored densely from degree 0; the zero polynomial
/// has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Int(1)); }
    static QPoly q_power(int k, Int coeff = Int(1)) {
        QPoly p;
        if (coeff == 0) return p;
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    int low_degree() const; // lowest exponent with nonzero coefficient; -1 for zero
    const Int& coeff(int k) const {
        static const Int kZero = 0;
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[k];
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Int& s) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    /// Exact division; throws std::domain_error if the remainder is nonzero.
    QPoly div_exact(const QPoly& d) const;
    /// Division by an integer scalar, exact in every coefficient.
    QPoly div_exact(const Int& s) const;
    bool divisible_by(const QPoly& d) const;

    QPoly pow(int e) const;

    Int eval_int(const Int& x) const;
    Rat eval(const Rat& x) const;

    /// Human-readable form like "q^3-2*q+1"; "0" for zero.
    std::string to_string(const std::string& var = "q") const;

    /// Coefficient list, lowest degree first, as exact decimal strings.
    std::vector<std::string> coeff_strings() const;
    static QPoly from_coeff_strings(const std::vector<std::string>& v);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// The d-th cyclotomic polynomial (memoized).
const QPoly& cyclotomic(int d);

/// Factors p as a product of cyclotomic polynomials, d -> multiplicity.
/// Throws std::domain_error if p is not such a product (up to sign the
/// characteristic polynomials handled here always are).
std::map<int, int> cyclotomic_factor(const QPoly& p);

/// Renders a cyclotomic multiset as "Phi2^3*Phi6".
std::string cyclotomic_string(const std::map<int, int>& f);
/// Parses the format above; tolerates a "(...)'"/"(...)''"-style wrapper,
/// whose content is parsed and whose decoration is returned in *suffix.
std::map<int, int> parse_cyclotomic_string(const std::string& s,
                                           std::string* suffix = nullptr);

} // namespace weyltk
