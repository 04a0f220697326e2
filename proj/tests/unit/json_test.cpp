#include "doctest.h"

#include "hopfring/json_io.hpp"
#include "json.hpp"

using namespace hopf;

TEST_CASE("export/import round-trips every group exactly") {
    for (Group g : all_groups()) {
        CAPTURE(group_name(g));
        const GroupData& built = entry(g).data();
        GroupData back = import_group_json(export_group_json(built));
        CHECK(back == built);
        // and the reload constructs a working entry
        CatalogEntry rebuilt(std::move(back));
        CHECK(rebuilt.modp(2).total_dim() == entry(g).modp(2).total_dim());
    }
}

TEST_CASE("export carries the advertised header fields") {
    std::string text = export_group_json(entry(Group::E8).data());
    for (const char* needle :
         {"\"schema_version\"", "\"group\": \"E8\"", "\"primes\"", "\"algebras\"",
          "\"generators\"", "\"rule\"", "\"bockstein\"", "\"free_generators\"",
          "\"psi_formulas\"", "\"primitives\"", "\"monomial_left\""}) {
        CAPTURE(needle);
        CHECK(text.find(needle) != std::string::npos);
    }
    CHECK(text.find("e+") == std::string::npos);  // exact integers only
    CHECK(text.find('.') == std::string::npos);
}

TEST_CASE("import rejects structural damage") {
    const nlohmann::json good =
        nlohmann::json::parse(export_group_json(entry(Group::F4).data()));

    auto mutated = [&](auto&& edit) {
        nlohmann::json j = good;
        edit(j);
        return j.dump();
    };

    CHECK_THROWS_AS(import_group_json("not json"), HopfError);
    CHECK_THROWS_AS(import_group_json("{}"), HopfError);
    CHECK_THROWS_AS(
        import_group_json(mutated([](auto& j) { j["schema_version"] = 7; })),
        HopfError);
    CHECK_THROWS_AS(import_group_json(mutated([](auto& j) { j["group"] = "F9"; })),
                    HopfError);
    // a bockstein row that contradicts the pairing set
    CHECK_THROWS_AS(import_group_json(mutated([](auto& j) {
                        j["algebras"][0]["bockstein"][0]["gen"] = "zeta7";
                    })),
                    HopfError);

    // a flipped stored coefficient still imports (the verifier's job, not
    // the schema's) but no longer equals the builtin
    GroupData warped = import_group_json(
        mutated([](auto& j) { j["integral"]["reductions"][0]["coeff"] = 5; }));
    CHECK(warped != entry(Group::F4).data());
}

TEST_CASE("report json lists mismatch ids") {
    auto reports = run_all();
    std::string text = report_json(reports);
    CHECK(text.find("\"total_items\": 518") != std::string::npos);
    CHECK(text.find("E7/F/rho15/3") != std::string::npos);
    CHECK(text.find("\"lhs\"") != std::string::npos);

    CheckReport clean = run_suite(Group::G2);
    std::string green = report_json({clean});
    CHECK(green.find("\"mismatches\": []") != std::string::npos);
}
