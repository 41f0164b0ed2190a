#include "weyltk/irr_label.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weyltk {

std::vector<int> trim_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        if (parts[i] == 0) throw std::invalid_argument("partition: interior zero part");
    }
    return parts;
}

int partition_weight(const std::vector<int>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

IrrLabel IrrLabel::make_S(std::vector<int> lambda) {
    IrrLabel l;
    l.kind_ = LabelKind::S;
    l.alpha_ = trim_partition(std::move(lambda));
    l.n_ = partition_weight(l.alpha_);
    return l;
}

IrrLabel IrrLabel::make_B(std::vector<int> alpha, std::vector<int> beta) {
    IrrLabel l;
    l.kind_ = LabelKind::B;
    l.alpha_ = trim_partition(std::move(alpha));
    l.beta_ = trim_partition(std::move(beta));
    l.n_ = partition_weight(l.alpha_) + partition_weight(l.beta_);
    return l;
}

IrrLabel IrrLabel::make_D(std::vector<int> alpha, std::vector<int> beta) {
    IrrLabel l;
    l.kind_ = LabelKind::D;
    l.alpha_ = trim_partition(std::move(alpha));
    l.beta_ = trim_partition(std::move(beta));
    if (l.beta_ > l.alpha_) std::swap(l.alpha_, l.beta_); // unordered pair, canonical order
    l.n_ = partition_weight(l.alpha_) + partition_weight(l.beta_);
    l.degenerate_ = l.alpha_ == l.beta_ && l.n_ > 0;
    return l;
}

namespace {

// strictly increasing row -> partition (weakly decreasing, zero-trimmed)
std::vector<int> row_to_partition(const std::vector<int>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0) throw std::invalid_argument("symbol: negative entry");
        if (i > 0 && row[i] <= row[i - 1])
            throw std::invalid_argument("symbol: rows must be strictly increasing");
    }
    std::vector<int> parts;
    for (size_t i = 0; i < row.size(); ++i) parts.push_back(row[i] - static_cast<int>(i));
    std::reverse(parts.begin(), parts.end());
    return trim_partition(std::move(parts));
}

// partition (weakly decreasing) -> strictly increasing row of given length
std::vector<int> partition_to_row(const std::vector<int>& parts, int len) {
    std::vector<int> asc(len, 0);
    for (size_t i = 0; i < parts.size(); ++i) asc[len - 1 - static_cast<int>(i)] = parts[i];
    for (int i = 0; i < len; ++i) asc[i] += i;
    return asc;
}

} // namespace

IrrLabel IrrLabel::from_symbol_B(const std::vector<int>& top, const std::vector<int>& bottom) {
    if (top.size() != bottom.size() + 1)
        throw std::invalid_argument("symbol: B rows must have sizes (m+1, m)");
    return make_B(row_to_partition(top), row_to_partition(bottom));
}

IrrLabel IrrLabel::from_symbol_D(const std::vector<int>& top, const std::vector<int>& bottom) {
    if (top.size() != bottom.size())
        throw std::invalid_argument("symbol: D rows must have equal sizes");
    return make_D(row_to_partition(top), row_to_partition(bottom));
}

IrrLabel IrrLabel::trivial(LabelKind kind, int n) {
    std::vector<int> full = n > 0 ? std::vector<int>{n} : std::vector<int>{};
    switch (kind) {
        case LabelKind::S: return make_S(full);
        case LabelKind::B: return make_B(full, {});
        case LabelKind::D: return make_D(full, {});
    }
    throw std::logic_error("trivial: bad kind");
}

IrrLabel IrrLabel::sign(LabelKind kind, int n) {
    std::vector<int> ones(n, 1);
    switch (kind) {
        case LabelKind::S: return make_S(ones);
        case LabelKind::B: return make_B({}, ones);
        case LabelKind::D: return make_D(ones, {});
    }
    throw std::logic_error("sign: bad kind");
}

bool IrrLabel::operator<(const IrrLabel& o) const {
    return std::tie(kind_, alpha_, beta_) < std::tie(o.kind_, o.alpha_, o.beta_);
}

std::pair<std::vector<int>, std::vector<int>> IrrLabel::symbol() const {
    if (kind_ == LabelKind::S)
        throw std::invalid_argument("symbol: S labels have no two-row symbol");
    int la = static_cast<int>(alpha_.size());
    int lb = static_cast<int>(beta_.size());
    int m;
    if (kind_ == LabelKind::B)
        m = std::max({la - 1, lb, 0});
    else
        m = std::max({la, lb, n_ == 0 ? 0 : 1});
    int topLen = kind_ == LabelKind::B ? m + 1 : m;
    return {partition_to_row(alpha_, topLen), partition_to_row(beta_, m)};
}

std::string IrrLabel::to_string() const {
    std::ostringstream os;
    auto renderRow = [&](const std::vector<int>& row) {
        os << "(";
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << ")";
    };
    if (kind_ == LabelKind::S) {
        renderRow(alpha_);
        return os.str();
    }
    auto [top, bottom] = symbol();
    os << "[";
    renderRow(top);
    os << ",";
    renderRow(bottom);
    os << "]";
    return os.str();
}

} // namespace weyltk
