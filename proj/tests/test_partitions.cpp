#include <doctest.h>

#include "qdr/partitions.hpp"

using namespace qdr;

TEST_CASE("boxes of a frame with a negative column") {
    GenPartition lam({2, -1});
    auto cells = boxes(lam);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].row == 1);
    CHECK(cells[0].col == 1);
    CHECK(cells[0].sign == 1);
    CHECK(cells[0].content == 0);
    CHECK(cells[1].col == 2);
    CHECK(cells[1].content == 1);
    CHECK(cells[2].row == 2);
    CHECK(cells[2].col == 0);
    CHECK(cells[2].sign == -1);
    CHECK(cells[2].content == -2);
    auto st = stats(lam);
    CHECK(st.weight == 1);
    CHECK(st.content == 3); // 0 + 1 - (-2)
}

TEST_CASE("trivial and single-box frames") {
    CHECK(boxes(GenPartition::zero(3)).empty());
    auto cells = boxes(GenPartition({1, 0, 0}));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].content == 0);
    CHECK(cells[0].sign == 1);
}

TEST_CASE("statistics and the conjugate identity") {
    auto st = stats(GenPartition({2, 1}));
    CHECK(st.content == 0);
    CHECK(st.n_lambda == 1);
    CHECK(st.n_conj == 1);
    CHECK(st.content == st.n_conj - st.n_lambda);

    // (1^N): c = N(1-N)/2
    for (int n = 2; n <= 5; ++n) {
        auto c = stats(GenPartition::ones(n)).content;
        CHECK(c == n * (1 - n) / 2);
    }
    CHECK(stats(GenPartition::zero(4)).content == 0);
    CHECK_THROWS_AS(conjugate_or_throw(GenPartition({1, -1})), std::domain_error);
}

TEST_CASE("conjugate identity holds across a window") {
    GroupSpec g(GroupFamily::GL, 3);
    Window w{6, 4};
    for (auto& lam : list_partitions(g, w)) {
        if (!lam.nonnegative()) continue;
        auto st = stats(lam);
        CHECK(st.content == st.n_conj - st.n_lambda);
        long signsum = 0;
        for (auto& c : boxes(lam)) signsum += c.sign;
        CHECK(signsum == st.weight);
    }
}

TEST_CASE("shift adds a constant column") {
    CHECK(shift(GenPartition::zero(2), 1) == GenPartition({1, 1}));
    auto s = shift(GenPartition({2, -1}), 1);
    CHECK(s == GenPartition({3, 0}));
    CHECK(s.weight() == 3);
    CHECK(shift(GenPartition({1, 1}), -1) == GenPartition::zero(2));
}

TEST_CASE("monotonicity is validated") {
    CHECK_THROWS_AS(GenPartition({1, 2}), std::invalid_argument);
    CHECK_NOTHROW(GenPartition({2, 2, -1}));
}

TEST_CASE("partition literals parse") {
    auto p = GenPartition::parse("2,-1", 2);
    CHECK(p == GenPartition({2, -1}));
    CHECK(GenPartition::parse("1", 3) == GenPartition({1, 0, 0}));
}

TEST_CASE("enumeration windows per family") {
    GroupSpec gl2(GroupFamily::GL, 2);
    auto all = list_partitions(gl2, Window{-1, 1});
    std::vector<GenPartition> expect = {
        GenPartition({0, 0}),  GenPartition({1, 0}),  GenPartition({1, 1}),
        GenPartition({0, -1}), GenPartition({-1, -1}), GenPartition({1, -1})};
    CHECK(all.size() == expect.size());
    for (auto& e : expect) CHECK(std::count(all.begin(), all.end(), e) == 1);

    GroupSpec sl2(GroupFamily::SL, 2);
    auto sl = list_partitions(sl2, Window{2, 2});
    std::vector<GenPartition> slexp = {GenPartition({0, 0}), GenPartition({1, 0}),
                                       GenPartition({2, 0})};
    CHECK(sl.size() == slexp.size());
    for (auto& e : slexp) CHECK(std::count(sl.begin(), sl.end(), e) == 1);

    // symplectic column constraint: (1,1,1,0) excluded
    GroupSpec sp4(GroupFamily::Sp, 4);
    auto sp = list_partitions(sp4, Window{-1, 2});
    CHECK(std::count(sp.begin(), sp.end(), GenPartition({1, 1, 1, 0})) == 0);
    CHECK(std::count(sp.begin(), sp.end(), GenPartition({1, 1, 0, 0})) == 1);

    // orthogonal constraint: first two columns fit in N
    GroupSpec o3(GroupFamily::OOdd, 3);
    auto o = list_partitions(o3, Window{-1, 2});
    CHECK(std::count(o.begin(), o.end(), GenPartition({1, 1, 1})) == 1);
    CHECK(std::count(o.begin(), o.end(), GenPartition({2, 2, 1})) == 0);
}

TEST_CASE("enumeration streams are restartable and duplicate-free") {
    GroupSpec g(GroupFamily::GL, 3);
    Window w{4, 2};
    auto a = list_partitions(g, w);
    auto b = list_partitions(g, w);
    CHECK(a == b);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) CHECK(!(a[i] == a[j]));
}
