#include "weyltk/signed_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weyltk {

std::string SignedCycleType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < pos.size(); ++i) {
        if (i) os << ",";
        os << pos[i];
    }
    os << "|";
    for (size_t i = 0; i < neg.size(); ++i) {
        if (i) os << ",";
        os << neg[i];
    }
    os << ")";
    return os.str();
}

SignedPerm::SignedPerm(int n) : n_(n), img_(2 * n) {
    std::iota(img_.begin(), img_.end(), 0);
}

SignedPerm SignedPerm::from_images(std::vector<int> images) {
    SignedPerm w(static_cast<int>(images.size()) / 2);
    if (images.size() % 2 != 0)
        throw std::invalid_argument("SignedPerm: image array must have even length");
    int m = static_cast<int>(images.size());
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
        int v = images[i];
        if (v < 0 || v >= m || seen[v])
            throw std::invalid_argument("SignedPerm: not a permutation");
        seen[v] = true;
    }
    for (int i = 0; i < m; ++i)
        if (images[m - 1 - i] != m - 1 - images[i])
            throw std::invalid_argument("SignedPerm: does not commute with the involution");
    w.img_ = std::move(images);
    return w;
}

SignedPerm SignedPerm::from_window(const std::vector<int>& window) {
    int n = static_cast<int>(window.size());
    std::vector<int> img(2 * n);
    for (int i = 0; i < n; ++i) {
        int v = window[i];
        if (v == 0 || v > n || v < -n)
            throw std::invalid_argument("SignedPerm: window value out of range");
        int target = v > 0 ? v - 1 : 2 * n - (-v); // -k maps to index of k'
        img[i] = target;
        img[2 * n - 1 - i] = 2 * n - 1 - target;
    }
    return from_images(std::move(img));
}

std::vector<int> SignedPerm::window() const {
    std::vector<int> w(n_);
    for (int i = 0; i < n_; ++i) {
        int t = img_[i];
        w[i] = t < n_ ? t + 1 : -(2 * n_ - t);
    }
    return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SignedPerm: rank mismatch");
    std::vector<int> img(2 * n_);
    for (int i = 0; i < 2 * n_; ++i) img[i] = img_[o.img_[i]];
    return from_images(std::move(img));
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> img(2 * n_);
    for (int i = 0; i < 2 * n_; ++i) img[img_[i]] = i;
    return from_images(std::move(img));
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < 2 * n_; ++i)
        if (img_[i] != i) return false;
    return true;
}

bool SignedPerm::is_even() const {
    // parity as a permutation of [0, 2n)
    std::vector<bool> seen(img_.size(), false);
    int transpositions = 0;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

SignedCycleType SignedPerm::cycle_type() const {
    SignedCycleType t;
    auto w = window(); // w[i] = signed image of i+1
    std::vector<bool> seen(n_, false);
    for (int i = 0; i < n_; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1, cur = i;
        do {
            seen[cur] = true;
            ++len;
            int v = w[cur];
            if (v < 0) sign = -sign;
            cur = std::abs(v) - 1;
        } while (cur != i);
        (sign > 0 ? t.pos : t.neg).push_back(len);
    }
    std::sort(t.pos.begin(), t.pos.end(), std::greater<int>());
    std::sort(t.neg.begin(), t.neg.end(), std::greater<int>());
    return t;
}

std::vector<std::pair<int, int>> SignedPerm::matrix_columns() const {
    std::vector<std::pair<int, int>> cols(n_);
    for (int j = 0; j < n_; ++j) {
        int v = img_[j];
        cols[j] = v < n_ ? std::make_pair(v, 1) : std::make_pair(2 * n_ - 1 - v, -1);
    }
    return cols;
}

std::string SignedPerm::to_string() const {
    std::ostringstream os;
    os << "[";
    auto w = window();
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

namespace {

// image of e_i: (coordinate, sign), 0-based
struct Image {
    int coord;
    int sign;
};

std::vector<Image> images_on_weights(const SignedPerm& w) {
    std::vector<Image> im(w.n());
    auto cols = w.matrix_columns();
    for (int j = 0; j < w.n(); ++j) im[j] = {cols[j].first, cols[j].second};
    return im;
}

} // namespace

long length_b(const SignedPerm& w) {
    auto im = images_on_weights(w);
    int n = w.n();
    long count = 0;
    for (int i = 0; i < n; ++i)
        if (im[i].sign < 0) ++count; // root e_i
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // e_i - e_j and e_i + e_j: image is a combination supported on
            // coordinates im[i].coord, im[j].coord; positive iff the
            // coefficient at the smaller coordinate is +1.
            int ci = im[i].coord, cj = im[j].coord;
            int si = im[i].sign, sj = im[j].sign;
            int lead_minus = ci < cj ? si : -sj;
            int lead_plus = ci < cj ? si : sj;
            if (lead_minus < 0) ++count;
            if (lead_plus < 0) ++count;
        }
    }
    return count;
}

long length_d(const SignedPerm& w) {
    if (!w.is_even())
        throw std::invalid_argument("length_d: element is not in the even subgroup");
    auto im = images_on_weights(w);
    int n = w.n();
    long count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int ci = im[i].coord, cj = im[j].coord;
            int si = im[i].sign, sj = im[j].sign;
            if ((ci < cj ? si : -sj) < 0) ++count;
            if ((ci < cj ? si : sj) < 0) ++count;
        }
    }
    return count;
}

long length_for_kind(const SignedPerm& w, GroupKind kind) {
    return kind == GroupKind::SO_EVEN ? length_d(w) : length_b(w);
}

SignedPerm w_min_rep(const PartitionSeq& p, GroupKind kind) {
    // one negative cycle per part, largest part first; within the block
    // [a+1, a+len] the element maps i -> i-1 and a+1 -> -(a+len).
    int n = p.n();
    std::vector<int> window(n);
    int off = 0;
    for (int t = 1; t <= p.sigma(); ++t) {
        int len = p.part(t);
        for (int i = 1; i < len; ++i) window[off + i] = off + i;
        window[off] = -(off + len);
        off += len;
    }
    SignedPerm w = SignedPerm::from_window(window);
    long expect = d_min(p, kind);
    if (length_for_kind(w, kind) != expect)
        throw std::logic_error("w_min_rep: constructed element misses the minimal length");
    return w;
}

CharPolyReport char_poly_reflection(const SignedPerm& w) {
    CharPolyReport rep;
    auto type = w.cycle_type();
    QPoly poly = QPoly::one();
    for (int c : type.pos) {
        // X^c - 1
        std::vector<Int> v(c + 1, Int(0));
        v[0] = -1;
        v[c] = 1;
        poly *= QPoly(std::move(v));
        for (int d = 1; d <= c; ++d)
            if (c % d == 0) rep.cyclotomic[d]++;
    }
    for (int c : type.neg) {
        // X^c + 1
        std::vector<Int> v(c + 1, Int(0));
        v[0] = 1;
        v[c] = 1;
        poly *= QPoly(std::move(v));
        for (int d = 1; d <= 2 * c; ++d)
            if ((2 * c) % d == 0 && c % d != 0) rep.cyclotomic[d]++;
    }
    rep.poly = poly;
    // factorization sanity: the product of the listed cyclotomics is poly
    QPoly check = QPoly::one();
    for (const auto& [d, k] : rep.cyclotomic) check *= cyclotomic(d).pow(k);
    if (check != poly)
        throw std::logic_error("char_poly_reflection: cyclotomic bookkeeping mismatch");
    rep.elliptic = rep.cyclotomic.find(1) == rep.cyclotomic.end();
    return rep;
}

std::vector<SignedPerm> enumerate_group_b(int n) {
    std::vector<SignedPerm> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> window(n);
            for (int i = 0; i < n; ++i)
                window[i] = (mask >> i & 1) ? -perm[i] : perm[i];
            out.push_back(SignedPerm::from_window(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<SignedPerm> enumerate_group_d(int n) {
    std::vector<SignedPerm> out;
    for (auto& w : enumerate_group_b(n))
        if (w.is_even()) out.push_back(w);
    return out;
}

std::vector<SignedPerm> conjugacy_class_of_type(int n, const SignedCycleType& type) {
    std::vector<SignedPerm> out;
    for (auto& w : enumerate_group_b(n))
        if (w.cycle_type() == type) out.push_back(w);
    return out;
}

} // namespace weyltk
