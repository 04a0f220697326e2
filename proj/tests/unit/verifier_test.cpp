#include "doctest.h"

#include "hopfring/verifier.hpp"

#include <cstdlib>
#include <set>

using namespace hopf;

namespace {

std::set<std::string> mismatch_ids(const std::vector<CheckReport>& reports) {
    std::set<std::string> ids;
    for (const CheckItem* it : mismatches(reports)) ids.insert(it->id());
    return ids;
}

const std::set<std::string> kKnownFindings = {
    "E7/F/rho15/3",  "F4/F/rho23/3",  "E8/F/rho35/3",   "E8/F/rho35/5",
    "E8/F/rho47/5",  "E8/F/rho59/3",  "E8/E/x20*rho23/3",
};

} // namespace

TEST_CASE("suite item census") {
    for (Group g : all_groups()) {
        CheckReport r = run_suite(g);
        CHECK(r.items.size() == expected_item_count(entry(g).data()));
        for (const auto& it : r.items) {
            CHECK(it.group == group_name(g));
            CHECK(!it.subject.empty());
        }
    }
    CHECK(expected_item_count(entry(Group::G2).data()) == 26);
    CHECK(expected_item_count(entry(Group::E8).data()) == 230);
}

TEST_CASE("full run reports exactly the known findings") {
    auto reports = run_all();
    CHECK(reports.size() == 5);
    CHECK(mismatch_ids(reports) == kKnownFindings);

    // Both sides of a finding are printed.
    for (const CheckItem* it : mismatches(reports)) {
        CHECK(!it->lhs.empty());
        CHECK(!it->rhs.empty());
    }

    CHECK(!aggregate_pass(reports, {}));
    CHECK(aggregate_pass(reports, kKnownFindings));
    std::set<std::string> partial = kKnownFindings;
    partial.erase("E8/E/x20*rho23/3");
    CHECK(!aggregate_pass(reports, partial));
}

TEST_CASE("the one G2 example suite is fully green") {
    CheckReport r = run_suite(Group::G2);
    for (const auto& it : r.items) {
        CAPTURE(it.id());
        CHECK(it.pass);
    }
    CHECK(r.notes.empty());  // no odd-p torsion, no sign notes
}

TEST_CASE("singleton sign notes at odd primes") {
    CheckReport r = run_suite(Group::E8);
    REQUIRE(r.notes.size() == 3);
    CHECK(r.notes[0].find("C{4}") != std::string::npos);
    CHECK(r.notes[1].find("C{10}") != std::string::npos);
    CHECK(r.notes[2].find("r_5(C{6}) = -x12") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    CheckReport a = run_suite(Group::E7), b = run_suite(Group::E7);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].id() == b.items[i].id());
        CHECK(a.items[i].pass == b.items[i].pass);
        CHECK(a.items[i].lhs == b.items[i].lhs);
        CHECK(a.items[i].rhs == b.items[i].rhs);
    }
    CHECK(a.notes == b.notes);
}

TEST_CASE("allow-list file parsing") {
    const char* path = std::getenv("HOPFRING_ALLOW");
    REQUIRE(path != nullptr);
    auto allow = load_allow_list(path);
    CHECK(allow == kKnownFindings);
    CHECK(load_allow_list("/nonexistent/findings.allow").empty());
}

TEST_CASE("a flipped coefficient shows up as a fresh mismatch") {
    GroupData d = entry(Group::F4).data();
    bool found = false;
    for (auto& r : d.reductions)
        if (r.prime == 3 && r.rho == rg(11)) {
            r.c = -r.c;  // r_3(rho11): -zeta11 -> +zeta11
            found = true;
        }
    REQUIRE(found);
    CatalogEntry mutated(std::move(d));
    EntryOverrideGuard guard(Group::F4, &mutated);

    SuiteOptions opt;
    opt.sweep_cap = 20;
    CheckReport r = run_suite(mutated, opt);
    std::set<std::string> ids = mismatch_ids({r});
    CHECK(ids.count("F4/F/rho11/3") == 1);
    CHECK(ids.count("F4/F/rho23/3") == 1);  // the known finding stays
}

TEST_CASE("override guard restores the builtin entry") {
    {
        GroupData d = entry(Group::G2).data();
        CatalogEntry mutated(std::move(d));
        EntryOverrideGuard guard(Group::G2, &mutated);
        CHECK(&entry(Group::G2) == &mutated);
    }
    CheckReport r = run_suite(Group::G2);
    CHECK(mismatch_ids({r}).empty());
}
