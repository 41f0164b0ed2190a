#include "weyltk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weyltk {

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::SP: return "sp";
        case GroupKind::SO_ODD: return "so-odd";
        case GroupKind::SO_EVEN: return "so-even";
    }
    return "?";
}

GroupKind kind_from_string(const std::string& s) {
    if (s == "sp") return GroupKind::SP;
    if (s == "so-odd") return GroupKind::SO_ODD;
    if (s == "so-even") return GroupKind::SO_EVEN;
    throw std::invalid_argument("unknown group kind '" + s + "' (want sp|so-odd|so-even)");
}

int kappa(GroupKind k) { return k == GroupKind::SO_ODD ? 1 : 0; }

PartitionSeq::PartitionSeq(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("PartitionSeq: no parts");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("PartitionSeq: parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("PartitionSeq: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string PartitionSeq::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

PartitionSeq PartitionSeq::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("PartitionSeq: empty component in '" + s + "'");
        parts.push_back(std::stoi(tok));
    }
    return PartitionSeq(parts);
}

JordanType::JordanType(std::vector<int> b) : blocks(std::move(b)) {
    std::sort(blocks.begin(), blocks.end(), std::greater<int>());
    for (int x : blocks) {
        if (x < 1) throw std::invalid_argument("JordanType: blocks must be >= 1");
        total += x;
    }
}

std::string JordanType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ",";
        os << blocks[i];
    }
    os << ")";
    return os.str();
}

std::vector<int> conjugate_counts(const PartitionSeq& p) {
    std::vector<int> bar;
    for (int i = 1; i <= p.part(1); ++i) {
        int count = 0;
        for (int t = 1; t <= p.sigma(); ++t)
            if (p.part(t) >= i) ++count;
        bar.push_back(count);
    }
    return bar;
}

long d_min(const PartitionSeq& p, GroupKind kind) {
    if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0)
        throw std::invalid_argument("d_min: SO_EVEN requires an even number of parts");
    long s = 0;
    for (int t = 2; t <= p.sigma(); ++t) s += static_cast<long>(t - 1) * p.part(t);
    long d = 2 * s + p.n();
    if (kind == GroupKind::SO_EVEN) d -= p.sigma();
    return d;
}

bool bar_square_identity(const PartitionSeq& p) {
    long lhs = 0;
    for (int b : conjugate_counts(p)) lhs += static_cast<long>(b) * b;
    return lhs == d_min(p, GroupKind::SP);
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending-first recursion yields lexicographically descending order
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxPart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<PartitionSeq> enumerate_elliptic(int n, GroupKind kind) {
    if (n < 1) throw std::invalid_argument("enumerate_elliptic: n must be >= 1");
    std::vector<PartitionSeq> out;
    for (auto& parts : partitions_of(n)) {
        if (kind == GroupKind::SO_EVEN && parts.size() % 2 != 0) continue;
        out.emplace_back(parts);
    }
    return out;
}

int psi(const PartitionSeq& p, int t) {
    if (t < 1 || t > p.sigma()) throw std::out_of_range("psi: index out of range");
    if (t % 2 == 1) {
        if (t == 1 || p.part(t - 1) > p.part(t)) return 1;
    } else {
        if (t == p.sigma() || p.part(t) > p.part(t + 1)) return -1;
    }
    return 0;
}

JordanType jordan_type(const PartitionSeq& p, GroupKind kind) {
    std::vector<int> blocks;
    if (kind == GroupKind::SP) {
        for (int t = 1; t <= p.sigma(); ++t) blocks.push_back(2 * p.part(t));
    } else {
        if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0)
            throw std::invalid_argument("jordan_type: SO_EVEN requires an even number of parts");
        for (int t = 1; t <= p.sigma(); ++t) blocks.push_back(2 * p.part(t) + psi(p, t));
        if (kind == GroupKind::SO_ODD && p.kappa_sigma() == 0) blocks.push_back(1);
    }
    JordanType jt(std::move(blocks));
    int expect = kind == GroupKind::SO_ODD ? 2 * p.n() + 1 : 2 * p.n();
    if (jt.total != expect)
        throw std::logic_error("jordan_type: block total mismatch");
    return jt;
}

} // namespace weyltk
