#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "trigsum/partitions.hpp"

using namespace trigsum;

namespace {

std::vector<PartitionMultiplicities> all_partitions(unsigned long k) {
    std::vector<PartitionMultiplicities> out;
    PartitionGenerator gen(k);
    while (auto p = gen.next()) out.push_back(*p);
    return out;
}

}  // namespace

TEST_CASE("partition enumeration order is reverse lexicographic", "[partitions]") {
    auto parts = all_partitions(5);
    std::vector<std::string> expect = {"{5}",       "{4,1}",     "{3,2}",       "{3,1,1}",
                                       "{2,2,1}",   "{2,1,1,1}", "{1,1,1,1,1}"};
    REQUIRE(parts.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(parts[i].str() == expect[i]);
}

TEST_CASE("partition invariants", "[partitions]") {
    for (unsigned long k : {0ul, 1ul, 7ul, 9ul}) {
        auto parts = all_partitions(k);
        CHECK(Integer(parts.size()) == partition_count(k));
        for (const auto& p : parts) {
            CHECK(p.weighted_sum() == k);
            CHECK(multinomial_factor(p) >= 1);
        }
    }
    auto empty = all_partitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].mult.empty());
    CHECK(empty[0].str() == "{}");
}

TEST_CASE("generated counts match the pentagonal recurrence", "[partitions]") {
    for (unsigned long k = 0; k <= 30; ++k)
        CHECK(Integer(all_partitions(k).size()) == partition_count(k));
    // classic spot values
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(40) == 37338);
    CHECK(partition_count(100) == Integer("190569292"));
}

TEST_CASE("multinomial factors", "[partitions]") {
    // {2,1,1}: 3 parts, multiplicities 1 and 2 -> 3!/2! = 3
    PartitionMultiplicities p;
    p.k = 4;
    p.mult[2] = 1;
    p.mult[1] = 2;
    CHECK(multinomial_factor(p) == 3);
    CHECK(p.total_parts() == 3);
    CHECK(p.weighted_sum() == 4);
}
