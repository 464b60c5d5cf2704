#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "meander/partition.hpp"
#include "meander/series.hpp"

#include "support.hpp"

using namespace meander;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

ColoredPartition CP(std::vector<ColoredPart> parts) { return ColoredPartition(std::move(parts)); }

constexpr Color B = Color::Blue;
constexpr Color R = Color::Red;

int arc_count(const Partition& p) {
    int arcs = 0;
    for (int part : p.parts()) arcs += part / 2;
    return arcs;
}

} // namespace

TEST_CASE("enumerate_partitions of 4, unbounded") {
    const auto all = enumerate_partitions(4);
    REQUIRE(all.size() == 5);
    CHECK(all[0] == P({4}));
    CHECK(all[1] == P({3, 1}));
    CHECK(all[2] == P({2, 2}));
    CHECK(all[3] == P({2, 1, 1}));
    CHECK(all[4] == P({1, 1, 1, 1}));
}

TEST_CASE("enumerate_partitions of 0 yields exactly the empty partition") {
    const auto all = enumerate_partitions(0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
    CHECK(all[0].weight() == 0);
}

TEST_CASE("bounded enumeration count matches the series expansion") {
    // coefficient of x^10 in prod_{m=1..4} 1/(1 - x^m)
    std::vector<FactorSpec> factors;
    for (int m = 1; m <= 4; ++m) factors.push_back({-1, m});
    const TruncatedSeries gf = expand_inverse_product(factors, 10);
    CHECK(static_cast<std::int64_t>(enumerate_partitions(10, 4).size()) == gf.coeff(10));
}

TEST_CASE("enumeration yields p(n) distinct partitions of weight n") {
    for (int n = 0; n <= 40; ++n) {
        std::int64_t count = 0;
        std::set<std::vector<int>> seen;
        bool all_weight_n = true;
        for_each_partition(n, std::max(n, 1), [&](const std::vector<int>& parts) {
            ++count;
            seen.insert(parts);
            int sum = 0;
            for (int p : parts) sum += p;
            all_weight_n = all_weight_n && sum == n;
        });
        CHECK(count == testsupport::partition_count(n));
        CHECK(static_cast<std::int64_t>(seen.size()) == count);
        CHECK(all_weight_n);
    }
}

TEST_CASE("reverse lexicographic order holds") {
    for (int n : {6, 9, 12}) {
        const auto all = enumerate_partitions(n);
        for (std::size_t k = 1; k < all.size(); ++k)
            CHECK(std::lexicographical_compare(all[k].parts().begin(), all[k].parts().end(),
                                               all[k - 1].parts().begin(),
                                               all[k - 1].parts().end()));
    }
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
    CHECK(conjugate(P({1, 1, 1, 1, 1})) == P({5}));
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugation is an involution") {
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, std::max(n, 1), [&](const std::vector<int>& parts) {
            const Partition p{std::vector<int>(parts)};
            CHECK(conjugate(conjugate(p)) == p);
        });
}

TEST_CASE("reverse examples and weight preservation") {
    CHECK(reverse(P({3, 2, 1})) == Composition({1, 2, 3}));
    CHECK(reverse(P({2, 2})) == Composition({2, 2}));
    CHECK(reverse(Partition{}) == Composition{});

    for (int n = 1; n <= 20; ++n)
        for_each_partition(n, n, [&](const std::vector<int>& parts) {
            const Partition p{std::vector<int>(parts)};
            const Composition rev = reverse(p);
            CHECK(rev.weight() == p.weight());
            std::vector<int> sorted = rev.parts();
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            CHECK(sorted == p.parts());
        });
}

TEST_CASE("colored partitions of 2 are exactly the five known ones") {
    const auto all = enumerate_colored_partitions(2);
    REQUIRE(all.size() == 5);
    const std::set<ColoredPartition> want = {
        CP({{2, R}}),
        CP({{2, B}}),
        CP({{1, R}, {1, R}}),
        CP({{1, B}, {1, B}}),
        CP({{1, B}, {1, R}}),
    };
    std::set<ColoredPartition> got(all.begin(), all.end());
    CHECK(got == want);
}

TEST_CASE("colored partitions of 0") {
    const auto all = enumerate_colored_partitions(0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
}

TEST_CASE("colored partition counts match the two-kind generating function") {
    const TruncatedSeries gf = two_colored_gf(12);
    for (int i = 0; i <= 10; ++i) {
        const auto all = enumerate_colored_partitions(i);
        std::set<ColoredPartition> distinct(all.begin(), all.end());
        CHECK(static_cast<std::int64_t>(all.size()) == gf.coeff(i));
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("phi on small inputs") {
    CHECK(phi(CP({{1, B}, {1, R}})) == P({3, 2}));
    CHECK(phi(ColoredPartition{}) == Partition{});
    CHECK(phi(CP({{3, R}, {1, B}, {1, B}})) == P({6, 3, 3}));
}

TEST_CASE("phi is injective with image above 1") {
    for (int i = 0; i <= 10; ++i) {
        std::set<Partition> images;
        for (const auto& c : enumerate_colored_partitions(i)) {
            const Partition image = phi(c);
            CHECK(images.insert(image).second);
            for (int part : image.parts()) CHECK(part >= 2);
            CHECK(image.weight() >= 2 * c.weight());
            CHECK(image.weight() <= 3 * c.weight());
        }
    }
}

TEST_CASE("phi maps onto partitions with no 1s and a fixed arc count") {
    // colored partitions of i-1 <-> { mu : min part > 1, sum floor(mu_k/2) = i-1 }
    for (int i = 1; i <= 8; ++i) {
        std::set<Partition> image;
        for (const auto& c : enumerate_colored_partitions(i - 1)) image.insert(phi(c));

        std::set<Partition> target;
        for (int w = 0; w <= 3 * (i - 1); ++w)
            for_each_partition(w, std::max(w, 1), [&](const std::vector<int>& parts) {
                const Partition p{std::vector<int>(parts)};
                if (!p.empty() && p.parts().back() == 1) return;
                if (arc_count(p) == i - 1) target.insert(p);
            });
        CHECK(image == target);
    }
}

TEST_CASE("psi removes the 1s") {
    CHECK(psi(P({3, 2, 1, 1})) == P({3, 2}));
    CHECK(psi(P({1, 1, 1})) == Partition{});
    CHECK(psi(Partition{}) == Partition{});
}

TEST_CASE("psi then phi-inverse reconstructs partitions with a fixed arc count") {
    // for n >= 3i-3, stripping 1s maps {lambda ⊢ n : arcs = i-1} bijectively
    // into the phi image, and padding with 1s recovers lambda
    for (int i = 1; i <= 6; ++i) {
        std::set<Partition> image;
        for (const auto& c : enumerate_colored_partitions(i - 1)) image.insert(phi(c));
        for (int n = std::max(3 * i - 3, 1); n <= 3 * i; ++n) {
            std::set<Partition> stripped;
            std::int64_t matching = 0;
            for_each_partition(n, n, [&](const std::vector<int>& parts) {
                const Partition p{std::vector<int>(parts)};
                if (arc_count(p) != i - 1) return;
                ++matching;
                const Partition core = psi(p);
                CHECK(image.count(core) == 1);
                stripped.insert(core);
                // padding the core back up with 1s reconstructs lambda
                std::vector<int> padded = core.parts();
                padded.insert(padded.end(),
                              static_cast<std::size_t>(p.weight() - core.weight()), 1);
                CHECK(Partition(std::move(padded)) == p);
            });
            CHECK(matching == static_cast<std::int64_t>(image.size()));
            CHECK(stripped.size() == image.size());
        }
    }
}

TEST_CASE("colored partition canonical order and equality") {
    const ColoredPartition a = CP({{1, R}, {2, B}, {2, R}, {1, B}});
    const ColoredPartition b = CP({{2, B}, {2, R}, {1, B}, {1, R}});
    CHECK(a == b);
    REQUIRE(a.parts().size() == 4);
    CHECK(a.parts()[0] == ColoredPart{2, B});
    CHECK(a.parts()[1] == ColoredPart{2, R});
    CHECK(a.parts()[2] == ColoredPart{1, B});
    CHECK(a.parts()[3] == ColoredPart{1, R});
}

TEST_CASE("partition text forms") {
    CHECK(parse_partition("4,2,1") == P({4, 2, 1}));
    CHECK(parse_partition(" 4,2,1 ") == P({4, 2, 1}));
    CHECK(parse_partition("1^2 2^1 4^3") == P({4, 4, 4, 2, 1, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(to_string(P({4, 2, 1})) == "4,2,1");
    CHECK(to_string(Partition{}) == "");

    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0^2"), std::invalid_argument);
}

TEST_CASE("composition text forms") {
    CHECK(parse_composition("1|2|3") == Composition({1, 2, 3}));
    CHECK(parse_composition("7") == Composition({7}));
    CHECK(to_string(Composition({1, 2, 3})) == "1|2|3");

    CHECK_THROWS_AS(parse_composition("1||2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("0|3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("-1|2"), std::invalid_argument);
}

TEST_CASE("constructors validate") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(CP({{0, B}}), std::invalid_argument);
}
