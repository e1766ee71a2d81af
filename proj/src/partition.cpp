#include "isf/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace isf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // reverse lexicographic: lexicographically larger comes first
    return a.parts() > b.parts();
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    int len = lambda.length();
    for (int row = 1; lambda.length() > 0 && row <= lambda.parts()[0]; ++row) {
        int count = 0;
        for (int i = 0; i < len; ++i)
            if (lambda.parts()[i] >= row) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

Partition sort_to_partition(const Composition& alpha) {
    std::vector<int> parts(alpha);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition lambda_of_subset(const std::set<int>& I, int n) {
    // component sizes of the graph on [n] with an edge {j, j+1} for each j in I
    Composition comp;
    int run = 1;
    for (int j = 1; j <= n - 1; ++j) {
        if (I.count(j)) {
            ++run;
        } else {
            comp.push_back(run);
            run = 1;
        }
    }
    if (n > 0) comp.push_back(run);
    for (int i : I)
        if (i < 1 || i > n - 1) throw std::invalid_argument("subset element outside [n-1]");
    return sort_to_partition(comp);
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

namespace {

// Enumerates the fillings of rows row.. given the remaining domino multiset,
// accumulating the product of [leftmost length]_q per completed row.
void domino_rec(const std::vector<int>& rows, std::size_t row,
                std::map<int, int>& avail, const QPoly& weight, QPoly& total) {
    if (row == rows.size()) {
        total += weight;
        return;
    }
    // Fill one row: ordered sequences of lengths summing to rows[row].
    // Only the first (leftmost) length enters the weight.
    std::function<void(int, bool, const QPoly&)> fill =
        [&](int remaining, bool first, const QPoly& w) {
            if (remaining == 0) {
                domino_rec(rows, row + 1, avail, w, total);
                return;
            }
            for (auto& [len, cnt] : avail) {
                if (cnt == 0 || len > remaining) continue;
                --cnt;
                fill(remaining - len, false, first ? w * q_integer(len) : w);
                ++cnt;
            }
        };
    fill(rows[row], true, weight);
}

}  // namespace

QPoly domino_weight_sum(const Partition& shape, const Partition& type) {
    if (shape.size() != type.size())
        throw std::invalid_argument("domino_weight_sum: |shape| != |type|");
    std::map<int, int> avail;
    for (int l : type.parts()) ++avail[l];
    QPoly total;
    domino_rec(shape.parts(), 0, avail, QPoly(1), total);
    return total;
}

}  // namespace isf
