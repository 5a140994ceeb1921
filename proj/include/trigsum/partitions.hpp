#pragma once

// Integer partitions as multiplicity vectors, enumerated in reverse
// lexicographic order of the part lists ({5}, {4,1}, {3,2}, {3,1,1}, ...),
// plus the multinomial weight N!/prod(n_i!) and Euler's pentagonal-number
// count p(k) as an independent tally.

#include <map>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigsum/numbers.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

struct PartitionMultiplicities {
    unsigned long k = 0;
    std::map<unsigned long, unsigned long> mult;  // part size -> count, absent = 0

    unsigned long total_parts() const {
        unsigned long n = 0;
        for (auto& [_, c] : mult) n += c;
        return n;
    }
    unsigned long weighted_sum() const {
        unsigned long s = 0;
        for (auto& [part, c] : mult) s += part * c;
        return s;
    }
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            for (unsigned long c = 0; c < it->second; ++c) {
                if (!first) s += ",";
                s += std::to_string(it->first);
                first = false;
            }
        return s + "}";
    }
};

// Single-consumer generator over the partitions of k. k = 0 yields exactly
// the empty partition.
class PartitionGenerator {
public:
    explicit PartitionGenerator(unsigned long k) : k_(k) {
        if (k_ > 0) parts_.assign(1, k_);
    }

    std::optional<PartitionMultiplicities> next() {
        if (done_) return std::nullopt;
        PartitionMultiplicities out;
        out.k = k_;
        for (unsigned long p : parts_) ++out.mult[p];
        advance();
        return out;
    }

private:
    void advance() {
        if (parts_.empty()) {  // the k = 0 empty partition was just emitted
            done_ = true;
            return;
        }
        // find the rightmost part > 1; everything after it is ones
        std::size_t i = parts_.size();
        while (i > 0 && parts_[i - 1] == 1) --i;
        if (i == 0) {
            done_ = true;
            return;
        }
        unsigned long ones = parts_.size() - i;
        unsigned long head = parts_[i - 1] - 1;
        parts_.resize(i - 1);
        // redistribute (head + ones + 1) into parts of size at most head
        unsigned long rest = head + ones + 1;
        while (rest > head) {
            parts_.push_back(head);
            rest -= head;
        }
        if (rest > 0) parts_.push_back(rest);
    }

    unsigned long k_;
    std::vector<unsigned long> parts_;  // weakly decreasing
    bool done_ = false;
};

inline Integer multinomial_factor(const PartitionMultiplicities& p) {
    Integer denom(1);
    for (auto& [_, c] : p.mult) denom *= factorial(c);
    return factorial(p.total_parts()) / denom;
}

// p(k) by the pentagonal-number recurrence; independent of the enumeration.
inline Integer partition_count(unsigned long k) {
    static std::vector<Integer> table{Integer(1)};
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        if (k < table.size()) return table[k];
    }
    std::unique_lock lk(mx);
    while (table.size() <= k) {
        unsigned long n = table.size();
        Integer acc(0);
        for (unsigned long j = 1;; ++j) {
            unsigned long g1 = j * (3 * j - 1) / 2;
            unsigned long g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            int sign = (j % 2 == 1) ? 1 : -1;
            acc += sign > 0 ? table[n - g1] : -table[n - g1];
            if (g2 <= n) acc += sign > 0 ? table[n - g2] : -table[n - g2];
        }
        table.push_back(acc);
    }
    return table[k];
}

}  // namespace trigsum
