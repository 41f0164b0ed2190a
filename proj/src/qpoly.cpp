#include "weyltk/qpoly.hpp"

#include <mutex>
#include <sstream>

namespace weyltk {

int QPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<Int> r = c_;
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Int& s) const {
    if (s == 0) return QPoly();
    std::vector<Int> r = c_;
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::div_exact(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero");
    if (is_zero()) return QPoly();
    if (degree() < d.degree())
        throw std::domain_error("QPoly: inexact division (degree)");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(degree() - d.degree() + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Int& top = rem[k + d.degree()];
        if (top == 0) continue;
        if (top % lead != 0)
            throw std::domain_error("QPoly: inexact division (leading coefficient)");
        Int f = top / lead;
        quot[k] = f;
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * d.c_[i];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("QPoly: inexact division (remainder)");
    return QPoly(std::move(quot));
}

QPoly QPoly::div_exact(const Int& s) const {
    if (s == 0) throw std::domain_error("QPoly: division by zero scalar");
    std::vector<Int> r = c_;
    for (auto& x : r) {
        if (x % s != 0) throw std::domain_error("QPoly: inexact scalar division");
        x /= s;
    }
    return QPoly(std::move(r));
}

bool QPoly::divisible_by(const QPoly& d) const {
    try {
        (void)div_exact(d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

QPoly QPoly::pow(int e) const {
    QPoly r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

Int QPoly::eval_int(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = c_[k];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? "-" : "+");
        }
        if (k == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> QPoly::coeff_strings() const {
    std::vector<std::string> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x.str());
    return v;
}

QPoly QPoly::from_coeff_strings(const std::vector<std::string>& v) {
    std::vector<Int> c;
    c.reserve(v.size());
    for (const auto& s : v) c.emplace_back(s);
    return QPoly(std::move(c));
}

namespace {

QPoly x_power_minus_one(int d) {
    std::vector<Int> c(d + 1, Int(0));
    c[0] = -1;
    c[d] = 1;
    return QPoly(std::move(c));
}

} // namespace

const QPoly& cyclotomic(int d) {
    static std::map<int, QPoly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 1) throw std::domain_error("cyclotomic: d must be >= 1");
    QPoly p = x_power_minus_one(d);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        // recursion through the cache; divisors are strictly smaller
        p = p.div_exact(cyclotomic(e));
    }
    return cache.emplace(d, std::move(p)).first->second;
}

std::map<int, int> cyclotomic_factor(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("cyclotomic_factor: zero polynomial");
    std::map<int, int> out;
    QPoly rest = p;
    // phi(d) >= sqrt(d/2), so factors of a degree-n product satisfy d <= 2n^2+2.
    int bound = 2 * p.degree() * p.degree() + 2;
    for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
        const QPoly& phi = cyclotomic(d);
        while (rest.degree() >= phi.degree() && rest.divisible_by(phi)) {
            rest = rest.div_exact(phi);
            out[d]++;
        }
    }
    if (rest != QPoly::one())
        throw std::domain_error("cyclotomic_factor: not a product of cyclotomics");
    return out;
}

std::string cyclotomic_string(const std::map<int, int>& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, k] : f) {
        if (k == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "Phi" << d;
        if (k > 1) os << "^" << k;
    }
    return first ? "1" : os.str();
}

std::map<int, int> parse_cyclotomic_string(const std::string& s, std::string* suffix) {
    std::string body = s;
    if (suffix) suffix->clear();
    if (!body.empty() && body.front() == '(') {
        auto close = body.find(')');
        if (close == std::string::npos)
            throw std::invalid_argument("parse_cyclotomic_string: unbalanced '('");
        if (suffix) *suffix = body.substr(close + 1);
        body = body.substr(1, close - 1);
    }
    std::map<int, int> out;
    size_t i = 0;
    while (i < body.size()) {
        if (body[i] == '*') {
            ++i;
            continue;
        }
        if (body.compare(i, 3, "Phi") != 0)
            throw std::invalid_argument("parse_cyclotomic_string: expected 'Phi' in '" + s + "'");
        i += 3;
        size_t j = i;
        while (j < body.size() && isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == i) throw std::invalid_argument("parse_cyclotomic_string: missing index");
        int d = std::stoi(body.substr(i, j - i));
        i = j;
        int k = 1;
        if (i < body.size() && body[i] == '^') {
            ++i;
            j = i;
            while (j < body.size() && isdigit(static_cast<unsigned char>(body[j]))) ++j;
            if (j == i) throw std::invalid_argument("parse_cyclotomic_string: missing exponent");
            k = std::stoi(body.substr(i, j - i));
            i = j;
        }
        out[d] += k;
    }
    return out;
}

} // namespace weyltk
