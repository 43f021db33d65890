#include "eqschub/partition.hpp"

#include <algorithm>

namespace eqschub {

partition partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        const std::string piece = text.substr(i, j - i);
        if (piece.empty()) throw usage_error("empty part in partition text: '" + text + "'");
        for (char c : piece)
            if (c < '0' || c > '9') throw usage_error("bad partition text: '" + text + "'");
        parts.push_back(std::stoi(piece));
        i = j + 1;
    }
    return partition(std::move(parts));
}

std::string partition::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string partition::bracket() const {
    if (parts_.empty()) return "[]";
    return "[" + str() + "]";
}

partition partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    return partition(std::move(cols));
}

std::vector<partition> add_one_box(const partition& lam, int max_rows, int max_cols) {
    std::vector<partition> out;
    for (int i = 1; i <= std::min(lam.length() + 1, max_rows); ++i) {
        const int grown = lam.part(i) + 1;
        if (grown > max_cols) continue;
        if (i > 1 && grown > lam.part(i - 1)) continue;
        std::vector<int> parts(lam.parts());
        if (i <= lam.length()) parts[i - 1] = grown;
        else parts.push_back(grown);
        out.push_back(partition(std::move(parts)));
    }
    return out;
}

std::optional<partition> rim_minus(const partition& lam, const grassmann_shape& shape) {
    if (!shape.holds(lam)) throw usage_error("partition does not fit the shape");
    if (lam.part(1) != shape.cols() || lam.length() != shape.p) return std::nullopt;
    std::vector<int> parts;
    for (int i = 2; i <= shape.p; ++i) parts.push_back(lam.part(i) - 1);
    return partition(std::move(parts));
}

partition bar_extend(const partition& lam, const grassmann_shape& shape) {
    if (!shape.holds(lam) || lam.part(1) != shape.cols())
        throw usage_error("bar extension needs a partition with maximal first part");
    std::vector<int> parts(lam.parts());
    parts[0] = shape.cols() + 1;
    return partition(std::move(parts));
}

namespace {

void enumerate_rec(int rows_left, int max_part, int weight_left, std::vector<int>& acc,
                   std::vector<partition>& out) {
    out.push_back(partition(std::vector<int>(acc)));
    if (rows_left == 0) return;
    for (int part = std::min(max_part, weight_left); part >= 1; --part) {
        acc.push_back(part);
        enumerate_rec(rows_left - 1, part, weight_left - part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<partition> enumerate_rectangle(const grassmann_shape& shape) {
    std::vector<int> acc;
    std::vector<partition> out;
    enumerate_rec(shape.p, shape.cols(), shape.p * shape.cols(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<partition> enumerate_weight_at_most(int max_rows, int max_weight) {
    std::vector<int> acc;
    std::vector<partition> out;
    enumerate_rec(max_rows, max_weight, max_weight, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eqschub
