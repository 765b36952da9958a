#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Crossing check straight from the quadruple definition.
bool crosses_brute(const SetPartition& pi) {
    const int n = pi.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int e = c + 1; e <= n; ++e)
                    if (pi.same_block(a, c) && pi.same_block(b, e) && !pi.same_block(a, b)) return true;
    return false;
}

bool interval_brute(const SetPartition& pi) {
    for (int a = 1; a <= pi.size(); ++a)
        for (int b = a + 1; b <= pi.size(); ++b)
            for (int c = a + 1; c < b; ++c)
                if (pi.same_block(a, b) && !pi.same_block(a, c)) return false;
    return true;
}

std::size_t bell(int n) {
    std::vector<std::vector<std::size_t>> tri{{1}};
    for (int i = 1; i < n; ++i) {
        std::vector<std::size_t> row{tri.back().back()};
        for (std::size_t v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(row);
    }
    return tri.back().back();
}

}  // namespace

TEST_CASE("partition counts") {
    CHECK(enumerate_partitions(3, PartitionFamily::Interval).size() == 4);
    CHECK(enumerate_partitions(1, PartitionFamily::All).size() == 1);
    CHECK(enumerate_partitions(4, PartitionFamily::NonCrossing).size() == 14);
    CHECK(enumerate_partitions(4, PartitionFamily::All).size() == 15);
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_partitions(n, PartitionFamily::Interval).size() == (std::size_t{1} << (n - 1)));
        CHECK(enumerate_partitions(n, PartitionFamily::NonCrossing).size() == catalan[n]);
        CHECK(enumerate_partitions(n, PartitionFamily::All).size() == bell(n));
    }
}

TEST_CASE("crossing and interval predicates") {
    const auto p1324 = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
    const auto p1423 = SetPartition::from_blocks(4, {{1, 4}, {2, 3}});
    const auto p1234 = SetPartition::from_blocks(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(is_noncrossing(p1324));
    CHECK(is_noncrossing(p1423));
    CHECK(is_interval(p1234));
    CHECK_FALSE(is_interval(p1423));
    CHECK(is_noncrossing(SetPartition::one(6)));
    CHECK(is_interval(SetPartition::zero(6)));
}

TEST_CASE("predicates agree with brute force and families nest") {
    for (int n = 1; n <= 8; ++n) {
        for (const SetPartition& pi : enumerate_partitions(n, PartitionFamily::All)) {
            CHECK(is_noncrossing(pi) == !crosses_brute(pi));
            CHECK(is_interval(pi) == interval_brute(pi));
            if (is_interval(pi)) CHECK(is_noncrossing(pi));
        }
    }
}

TEST_CASE("word indexing") {
    const WordIndexer idx(2, 4);
    CHECK(idx.size() == 31);
    for (std::size_t k = 0; k < idx.size(); ++k) CHECK(idx.index(idx.word(k)) == k);
    CHECK(MultiIndex::parse(3, "1,3,2").to_string() == "1,3,2");
    CHECK_THROWS(MultiIndex::parse(2, "1,3"));
    CHECK_THROWS(MultiIndex::parse(2, "1,,2"));
}
