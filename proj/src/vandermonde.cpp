#include "weyltk/vandermonde.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace weyltk {

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& exps, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[exps] = std::move(c);
    return p;
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Int& c) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_[exps] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const std::vector<int>& shift) const {
    LaurentPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [e1, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + shift[i];
        r.terms_[e] = c;
    }
    return r;
}

std::vector<int> LaurentPoly::min_exponents() const {
    std::vector<int> m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < nvars_; ++i) {
            Rat p = point[i];
            int k = e[i];
            Rat base = k >= 0 ? p : Rat(1) / p;
            for (int s = 0; s < std::abs(k); ++s) term *= base;
        }
        total += term;
    }
    return total;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) os << "*t" << i + 1 << "^" << e[i];
    }
    return os.str();
}

namespace {

// lex order on exponent vectors
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::pair<std::vector<int>, Int> leading_term(const LaurentPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (lex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

} // namespace

LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("laurent_div_exact: zero divisor");
    if (num.is_zero()) return LaurentPoly(num.nvars());
    int nv = num.nvars();
    // shift both to ordinary polynomials
    auto shiftOf = [&](const LaurentPoly& p) {
        auto m = p.min_exponents();
        for (auto& x : m) x = -x;
        return m;
    };
    LaurentPoly N = num.shifted(shiftOf(num));
    LaurentPoly D = den.shifted(shiftOf(den));
    auto [dLead, dCoeff] = leading_term(D);

    LaurentPoly Q(nv);
    int guard = 0;
    while (!N.is_zero()) {
        if (++guard > 1000000) throw std::domain_error("laurent_div_exact: runaway division");
        auto [nLead, nCoeff] = leading_term(N);
        std::vector<int> diff(nv);
        for (int i = 0; i < nv; ++i) {
            diff[i] = nLead[i] - dLead[i];
            if (diff[i] < 0) throw std::domain_error("laurent_div_exact: not divisible (exponent)");
        }
        if (nCoeff % dCoeff != 0)
            throw std::domain_error("laurent_div_exact: not divisible (coefficient)");
        LaurentPoly t = LaurentPoly::monomial(nv, diff, nCoeff / dCoeff);
        Q = Q + t;
        N = N - t * D;
    }
    // undo the shifts: num/den = Q * t^(min(num) - min(den))
    std::vector<int> back(nv);
    auto mn = num.min_exponents(), md = den.min_exponents();
    for (int i = 0; i < nv; ++i) back[i] = mn[i] - md[i];
    return Q.shifted(back);
}

namespace {

LaurentPoly var_power(int nv, int i, int e) {
    std::vector<int> exps(nv, 0);
    exps[i] = e;
    return LaurentPoly::monomial(nv, exps, Int(1));
}

LaurentPoly det_expand(const std::vector<std::vector<LaurentPoly>>& m) {
    int n = static_cast<int>(m.size());
    int nv = m[0][0].nvars();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    LaurentPoly det(nv);
    do {
        // permutation sign
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        LaurentPoly term = LaurentPoly::constant(nv, Int(inv % 2 == 0 ? 1 : -1));
        for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::vector<LaurentPoly>> matrix_plain(int m) {
    std::vector<std::vector<LaurentPoly>> rows;
    for (int j = 1; j <= m; ++j) {
        std::vector<LaurentPoly> row;
        for (int i = 0; i < m; ++i) row.push_back(var_power(m, i, j) - var_power(m, i, -j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<LaurentPoly>> matrix_bordered(int m) {
    std::vector<std::vector<LaurentPoly>> rows;
    for (int j = 0; j <= m + 1; ++j) {
        std::vector<LaurentPoly> row;
        row.push_back(LaurentPoly::constant(m, Int(1)));
        row.push_back(LaurentPoly::constant(m, Int(j % 2 == 0 ? 1 : -1)));
        for (int i = 0; i < m; ++i) row.push_back(var_power(m, i, j) + var_power(m, i, -j));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct ProductParts {
    std::vector<LaurentPoly> factors;
    LaurentPoly full;
};

ProductParts stated_product(int m, bool bordered) {
    ProductParts out{{}, LaurentPoly::constant(m, Int(bordered ? 2 : 1))};
    if (bordered)
        for (int i = 0; i < m; ++i)
            out.factors.push_back(var_power(m, i, 1) - var_power(m, i, -1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            out.factors.push_back(var_power(m, i, 1) - var_power(m, j, 1));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            out.factors.push_back(var_power(m, i, 1) - var_power(m, j, -1));
    for (const auto& f : out.factors) out.full = out.full * f;
    return out;
}

long primes_list[] = {2, 3, 5, 7, 11, 13, 17};

VandermondeReport run_check(int m, bool bordered, bool symbolic, unsigned long seed) {
    VandermondeReport rep;
    rep.matrix = bordered ? 'P' : 'M';
    rep.mode = symbolic ? "symbolic" : "random";
    if (m < 1) throw std::invalid_argument("vandermonde_check: m must be >= 1");
    if (symbolic && m > 3)
        throw std::invalid_argument("vandermonde_check: symbolic mode supports m <= 3");

    ProductParts prod = stated_product(m, bordered);

    if (symbolic) {
        auto rowsM = bordered ? matrix_bordered(m) : matrix_plain(m);
        LaurentPoly det = det_expand(rowsM);
        LaurentPoly q = laurent_div_exact(det, prod.full);
        if (q.term_count() != 1)
            throw std::logic_error("vandermonde_check: quotient is not a monomial");
        auto [exps, coeff] = *q.terms().begin();
        if (coeff != 1 && coeff != -1)
            throw std::logic_error("vandermonde_check: quotient coefficient is not a unit");
        rep.sign = coeff == 1 ? 1 : -1;
        rep.monomial = exps;
        rep.pass = true;
        std::ostringstream os;
        os << "det = " << (rep.sign > 0 ? "+" : "-") << "monomial * product, monomial exponents (";
        for (int i = 0; i < m; ++i) os << (i ? "," : "") << exps[i];
        os << ")";
        rep.detail = os.str();
        return rep;
    }

    // random mode: derive sign and monomial from a prime-coordinate point
    auto detAt = [&](const std::vector<Rat>& pt) {
        // numeric determinant over Q
        int dimension = bordered ? m + 2 : m;
        std::vector<std::vector<Rat>> a(dimension, std::vector<Rat>(dimension));
        for (int j = 0; j < dimension; ++j) {
            int power = bordered ? j : j + 1;
            int col = 0;
            if (bordered) {
                a[j][col++] = 1;
                a[j][col++] = power % 2 == 0 ? 1 : -1;
            }
            for (int i = 0; i < m; ++i) {
                Rat t = pt[i];
                Rat tp = 1, tm = 1;
                for (int s = 0; s < power; ++s) tp *= t;
                tm = Rat(1) / tp;
                a[j][col++] = bordered ? Rat(tp + tm) : Rat(tp - tm);
            }
        }
        // fraction-ful gaussian elimination
        Rat det = 1;
        for (int c = 0; c < dimension; ++c) {
            int piv = -1;
            for (int r = c; r < dimension; ++r)
                if (a[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rat(0);
            if (piv != c) {
                std::swap(a[piv], a[c]);
                det = -det;
            }
            det *= a[c][c];
            Rat inv = Rat(1) / a[c][c];
            for (int r = c + 1; r < dimension; ++r) {
                if (a[r][c] == 0) continue;
                Rat f = a[r][c] * inv;
                for (int cc = c; cc < dimension; ++cc) a[r][cc] -= f * a[c][cc];
            }
        }
        return det;
    };

    std::vector<Rat> primePt;
    for (int i = 0; i < m; ++i) primePt.emplace_back(primes_list[i]);
    Rat detP = detAt(primePt);
    Rat prodP = prod.full.eval(primePt);
    if (prodP == 0) throw std::logic_error("vandermonde_check: product vanished at the prime point");
    Rat ratio = detP / prodP;
    // ratio must be +- a product of the prime coordinates
    Int num = numerator(ratio), den = denominator(ratio);
    rep.sign = num < 0 ? -1 : 1;
    if (num < 0) num = -num;
    rep.monomial.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        Int p = primes_list[i];
        while (num % p == 0) {
            num /= p;
            rep.monomial[i]++;
        }
        while (den % p == 0) {
            den /= p;
            rep.monomial[i]--;
        }
    }
    if (num != 1 || den != 1)
        throw std::logic_error("vandermonde_check: ratio is not a signed monomial");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numd(-20, 20), dend(1, 8);
    int checked = 0;
    int attempts = 0;
    while (checked < 20) {
        if (++attempts > 2000)
            throw std::logic_error("vandermonde_check: could not find enough valid points");
        std::vector<Rat> pt;
        for (int i = 0; i < m; ++i) {
            int nu = numd(rng);
            if (nu == 0) nu = 1;
            pt.emplace_back(Rat(nu, dend(rng)));
        }
        bool zero = false;
        for (const auto& f : prod.factors)
            if (f.eval(pt) == 0) zero = true;
        if (zero) continue;
        Rat lhs = detAt(pt);
        Rat mono = 1;
        for (int i = 0; i < m; ++i) {
            Rat base = rep.monomial[i] >= 0 ? pt[i] : Rat(1) / pt[i];
            for (int s = 0; s < std::abs(rep.monomial[i]); ++s) mono *= base;
        }
        Rat rhs = Rat(rep.sign) * mono * prod.full.eval(pt);
        if (lhs != rhs) {
            rep.pass = false;
            rep.detail = "mismatch at a random point";
            return rep;
        }
        ++checked;
    }
    rep.points_checked = checked;
    rep.pass = true;
    std::ostringstream os;
    os << "sign " << (rep.sign > 0 ? "+" : "-") << ", monomial exponents (";
    for (int i = 0; i < m; ++i) os << (i ? "," : "") << rep.monomial[i];
    os << "), " << checked << " exact point checks";
    rep.detail = os.str();
    return rep;
}

} // namespace

VandermondeReport vandermonde_check(int m, bool symbolic, unsigned long seed) {
    return run_check(m, false, symbolic, seed);
}

VandermondeReport vandermonde_check_bordered(int m, bool symbolic, unsigned long seed) {
    return run_check(m, true, symbolic, seed);
}

} // namespace weyltk
