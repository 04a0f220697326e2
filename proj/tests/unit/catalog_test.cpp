#include "doctest.h"

#include "hopfring/catalog.hpp"

#include <map>

using namespace hopf;

TEST_CASE("catalog covers the five groups with their torsion primes") {
    CHECK(builtin_catalog_data().groups.size() == 5);
    std::map<Group, std::vector<int>> want = {
        {Group::G2, {2}},       {Group::F4, {2, 3}}, {Group::E6, {2, 3}},
        {Group::E7, {2, 3}},    {Group::E8, {2, 3, 5}},
    };
    for (auto& [g, ps] : want) {
        const CatalogEntry& e = entry(g);
        CHECK(e.primes() == ps);
        CHECK(!e.has_prime(7));
    }
    CHECK(entry(Group::E6).data().DG == std::vector<int>{2, 5, 6, 8, 9, 12});
}

TEST_CASE("mod-p total dimensions and top degrees") {
    // Top degree of every model equals dim G; the totals are the products of
    // the truncation heights times 2^(number of odd generators).
    struct Row { Group g; int p; long total; int dim; };
    const Row rows[] = {
        {Group::G2, 2, 8, 14},      {Group::F4, 2, 32, 52},
        {Group::F4, 3, 48, 52},     {Group::E6, 2, 128, 78},
        {Group::E6, 3, 192, 78},    {Group::E7, 2, 1024, 133},
        {Group::E7, 3, 384, 133},   {Group::E8, 2, 32768, 248},
        {Group::E8, 3, 2304, 248},  {Group::E8, 5, 1280, 248},
    };
    for (const Row& r : rows) {
        const Algebra& A = entry(r.g).modp(r.p);
        CHECK(A.total_dim() == r.total);
        CHECK(A.top_degree() == r.dim);
    }
    const int dims[] = {14, 52, 78, 133, 248};
    int i = 0;
    for (Group g : all_groups()) {
        const Algebra& Q = entry(g).rational();
        CHECK(Q.top_degree() == dims[i++]);
        CHECK(Q.total_dim() == (1L << Q.gens().size()));
    }
}

TEST_CASE("every free generator has one reduction row per torsion prime") {
    const std::size_t counts[] = {2, 8, 12, 14, 24};
    int i = 0;
    for (Group g : all_groups()) {
        const GroupData& d = entry(g).data();
        CHECK(d.reductions.size() == counts[i++]);
        for (int p : entry(g).primes())
            for (int k : d.DG)
                CHECK_NOTHROW((void)entry(g).reduction_image(p, rg(2 * k - 1)));
    }
}

TEST_CASE("specific reduction images") {
    {
        const CatalogEntry& e = entry(Group::G2);
        const Algebra& A = e.modp(2);
        CHECK(e.reduction_image(2, rg(3)) == A.gen(zg(3)));
        CHECK(e.reduction_image(2, rg(11)) == A.make(Rat(1), {{xg(6), 1}, {zg(5), 1}}));
        CHECK(e.reduction_image(2, xg(6)) == A.gen(xg(6)));
    }
    {
        const CatalogEntry& e = entry(Group::F4);
        const Algebra& A = e.modp(3);
        CHECK(e.reduction_image(3, rg(23)) == A.make(Rat(-1), {{xg(8), 2}, {zg(7), 1}}));
        // x6 is 2-primary, so it dies mod 3.
        CHECK(e.reduction_image(3, xg(6)).is_zero());
        CHECK_THROWS_AS((void)e.reduction_image(3, zg(7)), HopfError);
    }
    {
        const CatalogEntry& e = entry(Group::E8);
        const Algebra& A = e.modp(5);
        CHECK(e.reduction_image(5, rg(23)) == A.make(Rat(2), {{zg(23), 1}}));
        CHECK(e.reduction_image(5, rg(59)) == A.make(Rat(2), {{xg(12), 4}, {zg(11), 1}}));
    }
}

TEST_CASE("torsion classes C_I") {
    {
        const CatalogEntry& e = entry(Group::G2);
        auto c = e.class_CI({2, {3}});
        CHECK(c.degree == 6);
        CHECK(c.zeta_I == e.modp(2).gen(zg(5)));
        CHECK(c.rp_image == e.modp(2).gen(xg(6)));  // beta2(zeta5), sign dies mod 2
        CHECK_THROWS_AS((void)e.class_CI({2, {2}}), HopfError);    // 2 not in e(G2,2)
        CHECK_THROWS_AS((void)e.class_CI({3, {3}}), HopfError);    // no 3-torsion
        CHECK_THROWS_AS((void)e.class_CI({2, {3, 3}}), HopfError); // repeated
    }
    {
        const CatalogEntry& e = entry(Group::E8);
        const Algebra& A = e.modp(3);
        auto c = e.class_CI({3, {4, 10}});
        CHECK(c.degree == 27);
        CHECK(c.zeta_I == A.make(Rat(1), {{zg(7), 1}, {zg(19), 1}}));
        // beta3(zeta7 zeta19) = -x8 zeta19 + x20 zeta7.
        Element want = A.add(A.make(Rat(-1), {{xg(8), 1}, {zg(19), 1}}),
                             A.make(Rat(1), {{xg(20), 1}, {zg(7), 1}}));
        CHECK(c.rp_image == want);
        CHECK(e.reduction_image(CRef{3, {4, 10}}) == want);
    }
}

TEST_CASE("presentation access contract") {
    CHECK_THROWS_AS((void)make_algebra(Group::G2, Coeff::F3), HopfError);
    Algebra A = make_algebra(Group::G2, Coeff::F3, true);
    CHECK(A.total_dim() == 4);
    CHECK(A.mul(A.gen(zg(3)), A.gen(zg(3))).is_zero());

    CHECK_NOTHROW((void)make_algebra(Group::F4, Coeff::Z));
    CHECK_THROWS_AS((void)make_algebra(Group::E7, Coeff::Z), HopfError);

    CHECK(parse_group("E6") == Group::E6);
    CHECK_THROWS_AS((void)parse_group("E9"), HopfError);
}

TEST_CASE("construction rejects corrupted tables") {
    auto corrupt = [](auto&& mutate) {
        GroupData d = entry(Group::F4).data();
        mutate(d);
        CHECK_THROWS_AS(CatalogEntry{std::move(d)}, HopfError);
    };
    corrupt([](GroupData& d) { d.modp[0].eset.push_back(99); });
    corrupt([](GroupData& d) { d.reductions.pop_back(); });
    corrupt([](GroupData& d) { d.specials.pop_back(); });
    corrupt([](GroupData& d) { d.modp[1].psi[0].direct[0].left = {{xg(8), 2}}; });
    corrupt([](GroupData& d) { d.xclasses[0].torsion = 7; });

    // The stored tables themselves rebuild cleanly.
    GroupData d = entry(Group::F4).data();
    CHECK_NOTHROW(CatalogEntry{std::move(d)});
}

TEST_CASE("coefficient sites cover the stated formulas") {
    GroupData d = entry(Group::E8).data();
    auto sites = coefficient_sites(d);
    CHECK(sites.size() > 40);
    for (Rat* s : sites) {
        REQUIRE(s != nullptr);
        CHECK(!(*s == Rat(0)));
    }
    // Sites alias the copy, not the builtin tables.
    *sites[0] = Rat(7);
    CHECK(!(d == entry(Group::E8).data()));
}
