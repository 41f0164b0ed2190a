#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyltk {

/// Small finite field GF(p^e) with table-based arithmetic; elements are
/// encoded as integers 0..q-1 (base-p digit vectors of the polynomial
/// representation modulo a found irreducible).
class GF {
public:
    explicit GF(int q_order);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        return inv_[a];
    }
    /// Encodes an integer (mod p) as a field element.
    int from_int(long v) const {
        long r = v % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    std::string str(int a) const;

private:
    int q_, p_, e_;
    std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace weyltk
