// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria are evaluated against a full default-depth suite run plus a
// seeded mutation-robustness pass.

#include "hopfring/verifier.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hopf;

namespace {

struct Gate {
    bool pass = true;
    std::string detail;
};

std::vector<const CheckItem*> items_of(const std::vector<CheckReport>& reports,
                                       const std::string& check) {
    std::vector<const CheckItem*> out;
    for (const auto& r : reports)
        for (const auto& it : r.items)
            if (it.check == check) out.push_back(&it);
    return out;
}

Gate all_pass(const std::vector<CheckReport>& reports,
              std::initializer_list<const char*> checks) {
    Gate g;
    std::size_t n = 0;
    for (const char* c : checks) {
        for (const CheckItem* it : items_of(reports, c)) {
            ++n;
            if (!it->pass) {
                g.pass = false;
                g.detail = "mismatch at " + it->id();
                return g;
            }
        }
    }
    g.detail = std::to_string(n) + " items";
    return g;
}

Gate allow_gated(const std::vector<CheckReport>& reports, const std::string& check,
                 const std::set<std::string>& allow) {
    Gate g;
    std::size_t n = 0, allowed = 0;
    for (const CheckItem* it : items_of(reports, check)) {
        ++n;
        if (it->pass) continue;
        if (!allow.count(it->id())) {
            g.pass = false;
            g.detail = "unexpected mismatch at " + it->id();
            return g;
        }
        ++allowed;
    }
    std::ostringstream os;
    os << n << " items, " << allowed << " allow-listed finding" << (allowed == 1 ? "" : "s");
    g.detail = os.str();
    return g;
}

// The anchor case computed end to end: the degree-11 free generator of G2
// has reduced coproduct delta_2(zeta5 (x) zeta5), i.e. pure 2-torsion with
// shadow x6 (x) zeta5 + zeta5 (x) x6.
Gate anchor_g2() {
    Gate g;
    const CatalogEntry& E = entry(Group::G2);
    const Algebra& A = E.modp(2);
    IntegralTensorElement t = psi_integral(embed(Group::G2, rg(11)), true);
    Tensor want = t_add(t_outer(A, A.gen(xg(6)), A.gen(zg(5))),
                        t_outer(A, A.gen(zg(5)), A.gen(xg(6))));
    if (!t.free.is_zero() || t.shadow.at(2) != want) {
        g.pass = false;
        g.detail = "anchor coproduct wrong: " + it_str(t);
    }
    return g;
}

IntegralElement term_value(Group g, const IntSideTermS& t) {
    IntegralElement v = int_one(g);
    for (const auto& [n, pw] : t.mono)
        for (int i = 0; i < pw; ++i) v = int_multiply(v, embed(g, n));
    for (const auto& c : t.cls) v = int_multiply(v, embed(g, c));
    return v;
}

// Mismatch ids with their canonical sides. Ids alone are too coarse: a
// mutation inside a formula that is already an allow-listed finding keeps
// the same failing id but moves its stated side.
using MismatchReport = std::map<std::string, std::pair<std::string, std::string>>;

MismatchReport group_mismatches(const CheckReport& r) {
    MismatchReport m;
    for (const auto& it : r.items)
        if (!it.pass) m[it.id()] = {it.lhs, it.rhs};
    return m;
}

// Criterion 8: seeded single-coefficient mutations must each move the
// suite's mismatch report (new mismatch, a known finding resolving away or
// changing value, or the tables failing validation outright). Coefficients
// of relation terms that evaluate to zero integrally are structurally inert
// (the annihilation side of x*rho relations) and are excluded from the draw.
Gate mutation_robustness() {
    Gate out;
    std::mt19937 rng(61803);
    const int trials = 24;
    int detected = 0;
    SuiteOptions opt;
    opt.sweep_cap = 20;  // sweeps do not read the mutable tables

    std::map<Group, MismatchReport> baseline;
    for (Group g : all_groups()) baseline[g] = group_mismatches(run_suite(g, opt));

    for (int t = 0; t < trials; ++t) {
        Group g = all_groups()[rng() % all_groups().size()];
        GroupData d = entry(g).data();

        std::set<const Rat*> inert;
        for (const auto& rel : d.relations)
            for (const auto* side : {&rel.lhs, &rel.rhs})
                for (const auto& term : *side)
                    if (int_is_zero(term_value(g, term))) inert.insert(&term.c);

        std::vector<Rat*> sites;
        for (Rat* s : coefficient_sites(d))
            if (!inert.count(s)) sites.push_back(s);
        Rat* site = sites[rng() % sites.size()];
        *site = *site + Rat(1);

        bool hit = false;
        try {
            CatalogEntry mutated(std::move(d));
            EntryOverrideGuard guard(g, &mutated);
            hit = group_mismatches(run_suite(mutated, opt)) != baseline.at(g);
        } catch (const HopfError&) {
            hit = true;  // validation rejected the warped tables
        }
        if (hit) {
            ++detected;
        } else {
            out.pass = false;
            out.detail = "undetected mutation in " + std::string(group_name(g)) +
                         " (trial " + std::to_string(t) + ")";
        }
    }
    if (out.pass)
        out.detail = std::to_string(detected) + "/" + std::to_string(trials) +
                     " mutations detected";
    return out;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CheckReport> reports = run_all();
    const auto t1 = std::chrono::steady_clock::now();

    const char* allow_env = std::getenv("HOPFRING_ALLOW");
    const std::set<std::string> allow =
        allow_env ? load_allow_list(allow_env) : std::set<std::string>{};

    std::vector<std::pair<std::string, Gate>> criteria;

    criteria.emplace_back("coproduct is coassociative, counital, and respects relations",
                          all_pass(reports, {"B", "C"}));
    criteria.emplace_back("bockstein square and Leibniz rule on bases through degree 60",
                          all_pass(reports, {"D"}));

    Gate c3 = allow_gated(reports, "F", allow);
    Gate anchor = anchor_g2();
    if (!anchor.pass) c3 = anchor;
    criteria.emplace_back("stated coproducts match the pull-back construction", c3);

    criteria.emplace_back("stated primitives have psi = 0 and non-primitives do not",
                          all_pass(reports, {"G"}));
    criteria.emplace_back("integral relations hold under shadow-wise products",
                          allow_gated(reports, "E", allow));

    Gate c6 = all_pass(reports, {"I", "J"});
    if (c6.pass &&
        (entry(Group::G2).modp(2).total_dim() != 8 ||
         entry(Group::F4).modp(3).total_dim() != 48)) {
        c6.pass = false;
        c6.detail = "pinned total dimensions moved";
    }
    criteria.emplace_back("poincare series and total dimensions", c6);

    Gate c7 = all_pass(reports, {"H", "K"});
    if (c7.pass) {
        std::size_t e8p2 = 0;
        for (const CheckItem* it : items_of(reports, "H"))
            if (it->group == "E8" && it->prime == "2") ++e8p2;
        if (e8p2 != 15) {
            c7.pass = false;
            c7.detail = "expected 15 subset checks for the largest pairing set";
        }
    }
    criteria.emplace_back("torsion classes cohere on every pairing subset", c7);

    criteria.emplace_back("single-coefficient mutations are detected",
                          mutation_robustness());

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [title, gate] = criteria[i];
        all_ok = all_ok && gate.pass;
        std::cout << (gate.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << title
                  << " (" << gate.detail << ")\n";
    }

    const auto t2 = std::chrono::steady_clock::now();
    const auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::cout << "suite: " << ms(t0, t1) << " ms, acceptance total: " << ms(t0, t2)
              << " ms\n";
    return all_ok ? 0 : 1;
}
