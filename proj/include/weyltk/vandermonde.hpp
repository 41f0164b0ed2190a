#pragma once

#include "weyltk/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace weyltk {

/// Multivariate Laurent polynomial with exact integer coefficients,
/// exponent vectors of fixed length.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, Int c);
    static LaurentPoly monomial(int nvars, const std::vector<int>& exps, Int c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Multiplies by the monomial t^shift (entrywise exponent shift).
    LaurentPoly shifted(const std::vector<int>& shift) const;
    /// Minimal exponent per variable over all terms (0 if none).
    std::vector<int> min_exponents() const;

    Rat eval(const std::vector<Rat>& point) const;
    std::string to_string() const;

    void add_term(const std::vector<int>& exps, const Int& c);

private:
    int nvars_;
    std::map<std::vector<int>, Int> terms_;
};

/// Exact division of multivariate polynomials (Laurent handled by shifting
/// to nonnegative exponents); throws std::domain_error when not divisible.
LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den);

struct VandermondeReport {
    bool pass = false;
    char matrix = 'M'; // 'M' or 'P' (the bordered variant)
    std::string mode;  // "symbolic" or "random"
    int sign = 0;
    std::vector<int> monomial; // exponent of t_i in the extracted monomial
    int points_checked = 0;
    std::string detail;
};

/// Checks that det(M) (rows t_i^j - t_i^{-j}, j = 1..m) equals
/// sign * monomial * prod_{i<j}(t_i - t_j) * prod_{i<=j}(t_i - t_j^{-1});
/// 'symbolic' expands exactly (m <= 3), 'random' verifies the identity at
/// >= 20 exact rational points after deriving sign and monomial from a
/// prime-coordinate evaluation.
VandermondeReport vandermonde_check(int m, bool symbolic, unsigned long seed = 1);

/// Same for the bordered matrix M' (rows 1, (-1)^j, t_i^j + t_i^{-j},
/// j = 0..m+1) against 2 * prod_i(t_i - t_i^{-1}) * the product above.
VandermondeReport vandermonde_check_bordered(int m, bool symbolic, unsigned long seed = 1);

} // namespace weyltk
