#include "weyltk/gf.hpp"

#include <sstream>

namespace weyltk {

namespace {

int smallest_prime_factor(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// polynomial coefficients over F_p, lowest first
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da] % p;
        if (lead != 0) {
            // m is monic
            for (int i = 0; i <= dm; ++i) {
                int idx = da - dm + i;
                a[idx] = ((a[idx] - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool is_irreducible(const Poly& m, int p) {
    // brute force: no roots needed only for degree 2..3; general small check
    // by trial division over all monic polynomials of degree <= deg/2
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[d] = 1;
            // divisibility test
            Poly rem = poly_mod(m, div, p);
            bool zero = true;
            for (int x : rem)
                if (x % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

GF::GF(int q_order) : q_(q_order) {
    if (q_ < 2 || q_ > 12000) throw std::invalid_argument("GF: order out of supported range");
    p_ = smallest_prime_factor(q_);
    e_ = 0;
    int t = q_;
    while (t > 1) {
        if (t % p_ != 0) throw std::invalid_argument("GF: order is not a prime power");
        t /= p_;
        ++e_;
    }

    // find a monic irreducible of degree e over F_p
    Poly modulus(e_ + 1, 0);
    modulus[e_] = 1;
    if (e_ == 1) {
        modulus[0] = 0;
    } else {
        bool found = false;
        long count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        for (long code = 0; code < count && !found; ++code) {
            long c = code;
            for (int i = 0; i < e_; ++i) {
                modulus[i] = static_cast<int>(c % p_);
                c /= p_;
            }
            if (is_irreducible(modulus, p_)) found = true;
        }
        if (!found) throw std::logic_error("GF: no irreducible polynomial found");
    }

    auto decode = [&](int a) {
        Poly v;
        for (int i = 0; i < e_; ++i) {
            v.push_back(a % p_);
            a /= p_;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto encode = [&](Poly v) {
        int a = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            a = a * p_ + ((v[i] % p_ + p_) % p_);
        return a;
    };

    add_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly sum(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < sum.size(); ++i) {
                int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                sum[i] = x % p_;
            }
            add_[static_cast<size_t>(a) * q_ + b] = encode(sum);
            Poly prod = poly_mul(pa, pb, p_);
            if (e_ > 1) prod = poly_mod(prod, modulus, p_);
            mul_[static_cast<size_t>(a) * q_ + b] = encode(prod);
        }
    }
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        for (auto& x : pa) x = (p_ - x) % p_;
        neg_[a] = encode(pa);
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] == 0) throw std::logic_error("GF: element without inverse");
    }
}

std::string GF::str(int a) const {
    if (e_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << a << "#" << p_ << "^" << e_;
    return os.str();
}

} // namespace weyltk
