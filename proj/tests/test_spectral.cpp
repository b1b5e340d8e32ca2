#include <doctest.h>

#include "qdr/spectral.hpp"

using namespace qdr;

namespace {

struct GlSym {
    RatFnCtx C{2, {"q", "z"}};
    GroupSpec g{GroupFamily::GL, 2};
    SpectralParams<RatFnCtx> p;
    GlSym(int n = 2) : g(GroupFamily::GL, n), p(make_params(C, g, C.var(0), C.var(1))) {}
};

} // namespace

TEST_CASE("eigenvalues on the trivial frame vanish") {
    GlSym s;
    CHECK(s.C.is_zero(eigen_a(s.p, GenPartition::zero(2), +1)));
    CHECK(s.C.is_zero(eigen_a(s.p, GenPartition::zero(2), -1)));
}

TEST_CASE("eigenvalue of the determinant column (1^N)") {
    for (int n : {2, 3}) {
        GlSym s(n);
        auto q = s.C.var(0), z = s.C.var(1);
        auto e = eigen_a(s.p, GenPartition::ones(n), +1);
        auto expect = (q * q * cpow(s.C, z, -n) - s.C.one()) * qnumber(s.C, q, n);
        CHECK(e == expect);
    }
}

TEST_CASE("eigenvalue of a single box") {
    GlSym s;
    auto q = s.C.var(0), z = s.C.var(1);
    auto e = eigen_a(s.p, GenPartition({1, 0}), +1);
    auto expect = (qnumber(s.C, q, 2) + cpow(s.C, q, 3) - q) / z - qnumber(s.C, q, 2);
    CHECK(e == expect);
}

TEST_CASE("eigen_a rejects non-A-series groups") {
    RatFnCtx C(1, {"q"});
    GroupSpec o3(GroupFamily::OOdd, 3);
    auto p = make_params(C, o3, C.var(0), C.one());
    CHECK_THROWS_AS(eigen_a(p, GenPartition::zero(3), +1), std::domain_error);
    GlSym s;
    CHECK_THROWS_AS(eigen_bcd(s.p, GenPartition::zero(2)), std::domain_error);
}

TEST_CASE("both codings of the regularity quantity agree across a window") {
    for (int n : {2, 3}) {
        GlSym s(n);
        GroupSpec g(GroupFamily::GL, n);
        Window w{4, 2};
        auto parts = list_partitions(g, w);
        for (auto& lam : parts)
            for (auto& mu : parts) {
                auto rec = regularity_value(s.p, lam, mu); // throws on a mismatch
                CHECK(rec.e_sum == rec.f_value);
            }
    }
}

TEST_CASE("regularity landmarks") {
    GlSym s;
    auto zero2 = GenPartition::zero(2);
    CHECK(regularity_value(s.p, zero2, zero2).is_zero);

    RatFnCtx C1(1, {"q"});
    GroupSpec g(GroupFamily::GL, 2);
    auto p1 = make_params(C1, g, C1.var(0), C1.one()); // z = 1
    CHECK(!regularity_value(p1, GenPartition({1, 0}), GenPartition({1, 0})).is_zero);

    auto pq = make_params(C1, g, C1.var(0), C1.var(0)); // z = q, so z^2 q^-2 = 1
    CHECK(regularity_value(pq, GenPartition({1, 1}), GenPartition({1, 1})).is_zero);
}

TEST_CASE("orthogonal and symplectic eigenvalues") {
    RatFnCtx C(1, {"q"});
    auto q = C.var(0);
    GroupSpec o3(GroupFamily::OOdd, 3);
    auto p3 = make_params(C, o3, q, C.one());
    CHECK(C.is_zero(eigen_bcd(p3, GenPartition::zero(3))));
    CHECK(C.is_zero(eigen_bcd(p3, GenPartition::ones(3)))); // telescoping sum

    GroupSpec sp4(GroupFamily::Sp, 4);
    auto p4 = make_params(C, sp4, q, C.one());
    auto e = eigen_bcd(p4, GenPartition({1, 0, 0, 0}));
    auto qd = q - C.one() / q;
    CHECK(e == C.zero() - qd * qd * qnumber(C, q, 5));
    CHECK_THROWS_AS(eigen_bcd(p4, GenPartition({1, 0, 0, -1})), std::domain_error);
}

TEST_CASE("zero scans: determinant-one and z = 1 cases") {
    RatFnCtx Cw(1, {"w"});
    GroupSpec sl2(GroupFamily::SL, 2);
    auto w = Cw.var(0);
    auto psl = make_params(Cw, sl2, cpow(Cw, w, 2), w * w);
    auto zs = zero_scan(psl, Window{4, 4});
    REQUIRE(zs.zeros.size() == 1);
    CHECK(zs.zeros[0].first == GenPartition::zero(2));
    CHECK(zs.zeros[0].second == GenPartition::zero(2));

    RatFnCtx C1(1, {"q"});
    GroupSpec gl2(GroupFamily::GL, 2);
    auto p1 = make_params(C1, gl2, C1.var(0), C1.one());
    auto zs1 = zero_scan(p1, Window{-1, 3});
    REQUIRE(zs1.zeros.size() == 1);
    CHECK(zs1.zeros[0].first.is_zero());
}

TEST_CASE("zero scans at a root of unity") {
    auto f = make_root_of_unity_params(2, 2);
    auto zs = zero_scan(f.params, Window{-1, 4});
    // {(n,n),(k,k)} with n,k even in [-4,4]: five values each
    CHECK(zs.zeros.size() == 25);
    for (auto& [lam, mu] : zs.zeros) {
        CHECK(lam.part(0) == lam.part(1));
        CHECK(mu.part(0) == mu.part(1));
        CHECK(lam.part(0) % 2 == 0);
        CHECK(mu.part(0) % 2 == 0);
    }
}

TEST_CASE("orthogonal zero set respects the parity filter") {
    RatFnCtx C(1, {"q"});
    GroupSpec o3(GroupFamily::OOdd, 3);
    auto p = make_params(C, o3, C.var(0), C.one());
    auto zs = zero_scan(p, Window{4, 4});
    CHECK(zs.raw_zeros.size() == 4);
    REQUIRE(zs.zeros.size() == 2);
    for (auto& [lam, mu] : zs.zeros) CHECK((lam.weight() - mu.weight()) % 2 == 0);
}

TEST_CASE("zero pairs under z = 1 balance their weights") {
    RatFnCtx C(1, {"q"});
    GroupSpec gl2(GroupFamily::GL, 2);
    auto p = make_params(C, gl2, C.var(0), C.one());
    auto zs = zero_scan(p, Window{6, 3});
    for (auto& [lam, mu] : zs.zeros) CHECK(lam.weight() == mu.weight());
}

TEST_CASE("exact limits along z = t^{2/N}") {
    auto lc = limit_checks(GenPartition({1, 0}), 2);
    CHECK(lc.tilde_plus == Rat(3, 4));
    CHECK(lc.mi_sum == Rat(3, 2));
    CHECK(lc.ok);

    CHECK(limit_checks(GenPartition::zero(2), 2).tilde_plus == Rat(0));
    auto lc21 = limit_checks(GenPartition({2, 1}), 2);
    CHECK(lc21.tilde_plus == Rat(3, 4));
    CHECK(lc21.ok);
    CHECK_THROWS_AS(limit_checks(GenPartition({1, -1}), 2), std::domain_error);
}

TEST_CASE("the limit functional is shift invariant") {
    for (auto& parts : std::vector<std::vector<int>>{{1, 0}, {2, 1}, {2, 0}, {3, 1}}) {
        GenPartition lam(parts);
        auto a = limit_checks(lam, 2);
        auto b = limit_checks(shift(lam, 1), 2);
        CHECK(a.tilde_plus == b.tilde_plus);
    }
}

TEST_CASE("shift recursion for the eigenvalues") {
    GlSym s;
    for (auto& parts : std::vector<std::vector<int>>{{0, 0}, {2, -1}, {1, 1}})
        for (int tau : {+1, -1}) CHECK(recursion_check(s.p, GenPartition(parts), tau));
    // iterating the recursion twice reaches the doubled column
    auto q = s.C.var(0), z = s.C.var(1);
    auto qn = qnumber(s.C, q, 2);
    auto e22 = eigen_a(s.p, GenPartition({2, 2}), +1);
    auto factor = q * q * cpow(s.C, z, -2);
    CHECK(e22 + qn == factor * factor * (s.C.zero() + qn));
}

TEST_CASE("quantum determinant closure coefficients") {
    GlSym s;
    auto dd = determinant_data(s.p, +1);
    CHECK(!dd.closed);

    RatFnCtx C1(1, {"q"});
    GroupSpec gl2(GroupFamily::GL, 2);
    auto pq = make_params(C1, gl2, C1.var(0), C1.var(0));
    CHECK(determinant_data(pq, +1).closed); // z^N = q^2 point

    GroupSpec sl2(GroupFamily::SL, 2);
    RatFnCtx Cw(1, {"w"});
    auto w = Cw.var(0);
    auto psl = make_params(Cw, sl2, cpow(Cw, w, 2), w * w);
    auto dsl = determinant_data(psl, +1);
    CHECK(dsl.closed);
    CHECK(Cw.is_zero(dsl.coefficient));

    GroupSpec o3(GroupFamily::OOdd, 3);
    auto po = make_params(C1, o3, C1.var(0), C1.zero() - C1.one());
    auto dod = determinant_data(po, +1);
    CHECK(!dod.closed);
    CHECK(dod.coefficient == C1.from_long(-2));
}

TEST_CASE("predicted cohomology dimensions") {
    auto pred2 = cohomology_prediction(2, false, 0);
    CHECK(pred2.coinvariant_dims == std::vector<long>{1, 1, 0, 1, 1});
    CHECK(pred2.agree);
    auto pred3 = cohomology_prediction(3, false, 0, 3);
    CHECK(pred3.coinvariant_dims == std::vector<long>{1, 1, 0, 1});
    CHECK(pred3.agree);
    auto rou = cohomology_prediction(2, true, 2);
    CHECK(rou.root_of_unity);
    CHECK(rou.tensor_factor == "C[D^2,D^-2]");
}
