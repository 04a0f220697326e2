#include "hopfring/json_io.hpp"

#include "json.hpp"

namespace hopf {

namespace {

using json = nlohmann::ordered_json;

// --- writers ----------------------------------------------------------------

json j_rat(Rat c) {
    if (c.is_integer()) return json(c.num());
    return json(c.str());  // "n/d", no floating point
}

json j_mono(const MonoS& m) {
    json a = json::array();
    for (const auto& [n, p] : m) a.push_back(json::array({n.str(), p}));
    return a;
}

json j_tterms(const std::vector<TensorTermS>& ts) {
    json a = json::array();
    for (const auto& t : ts)
        a.push_back({{"coeff", j_rat(t.c)},
                     {"monomial_left", j_mono(t.left)},
                     {"monomial_right", j_mono(t.right)}});
    return a;
}

json j_cref(const CRef& c) { return {{"prime", c.prime}, {"subs", c.subs}}; }

json j_side(const std::vector<IntSideTermS>& side) {
    json a = json::array();
    for (const auto& t : side) {
        json cls = json::array();
        for (const auto& c : t.cls) cls.push_back(j_cref(c));
        a.push_back({{"coeff", j_rat(t.c)}, {"monomial", j_mono(t.mono)}, {"classes", cls}});
    }
    return a;
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Exterior: return "exterior";
        case Rule::Truncated: return "truncated";
        case Rule::SquareTo: return "square_to";
    }
    return "?";
}

// --- readers ----------------------------------------------------------------

[[noreturn]] void bad(const std::string& what) {
    fail(HopfError::Kind::CorruptData, "json import: " + what);
}

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) bad("coefficient string is not n/d: " + s);
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    bad("coefficient is neither integer nor n/d string");
}

GenName gen_from(const std::string& s) {
    auto digits = s.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) bad("bad generator name: " + s);
    const std::string fam = s.substr(0, digits);
    const int sub = std::stoi(s.substr(digits));
    if (fam == "x") return xg(sub);
    if (fam == "zeta") return zg(sub);
    if (fam == "rho") return rg(sub);
    bad("unknown generator family: " + s);
}

MonoS mono_from(const json& j) {
    MonoS m;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad("monomial entry is not [name, power]");
        m.emplace_back(gen_from(e[0].get<std::string>()), e[1].get<int>());
    }
    return m;
}

std::vector<TensorTermS> tterms_from(const json& j) {
    std::vector<TensorTermS> ts;
    for (const auto& e : j)
        ts.push_back({rat_from(need(e, "coeff")), mono_from(need(e, "monomial_left")),
                      mono_from(need(e, "monomial_right"))});
    return ts;
}

CRef cref_from(const json& j) {
    return {need(j, "prime").get<int>(), need(j, "subs").get<std::vector<int>>()};
}

std::vector<IntSideTermS> side_from(const json& j) {
    std::vector<IntSideTermS> side;
    for (const auto& e : j) {
        IntSideTermS t;
        t.c = rat_from(need(e, "coeff"));
        t.mono = mono_from(need(e, "monomial"));
        for (const auto& c : need(e, "classes")) t.cls.push_back(cref_from(c));
        side.push_back(std::move(t));
    }
    return side;
}

Rule rule_from(const std::string& s) {
    if (s == "exterior") return Rule::Exterior;
    if (s == "truncated") return Rule::Truncated;
    if (s == "square_to") return Rule::SquareTo;
    bad("unknown power rule: " + s);
}

// The exported per-prime bockstein table is derived from the pairing set;
// imports must agree with their own eset or the file is lying somewhere.
json derived_bockstein(const AlgebraS& a) {
    json arr = json::array();
    for (int s : a.eset) {
        json val = json::array();
        val.push_back({{"coeff", -1}, {"monomial", j_mono({{xg(2 * s), 1}})}});
        arr.push_back({{"gen", zg(2 * s - 1).str()}, {"value", val}});
    }
    return arr;
}

std::map<int, std::vector<TensorTermS>> prime_map_from(const json& j) {
    std::map<int, std::vector<TensorTermS>> m;
    for (const auto& [key, val] : j.items()) m[std::stoi(key)] = tterms_from(val);
    return m;
}

} // namespace

std::string export_group_json(const GroupData& gd) {
    json root;
    root["schema_version"] = 1;
    root["group"] = group_name(gd.g);

    json primes = json::array();
    for (const auto& a : gd.modp) primes.push_back(a.prime);
    root["primes"] = std::move(primes);

    json specials = json::array();
    for (const auto& s : gd.specials)
        specials.push_back({{"degree", s.degree}, {"weyl", s.weyl}});
    root["specials"] = std::move(specials);

    json xcl = json::array();
    for (const auto& x : gd.xclasses)
        xcl.push_back({{"degree", x.degree}, {"torsion", x.torsion}, {"height", x.height}});
    root["x_classes"] = std::move(xcl);

    json algs = json::array();
    for (const auto& a : gd.modp) {
        json gens = json::array();
        for (const auto& g : a.gens)
            gens.push_back({{"name", g.name.str()},
                            {"degree", g.degree},
                            {"rule", rule_name(g.rule)},
                            {"bound", g.bound}});
        json squares = json::array();
        for (const auto& [g, target] : a.squares)
            squares.push_back({{"gen", g.str()}, {"square", j_mono(target)}});
        json psi = json::array();
        for (const auto& e : a.psi) {
            json entry = {{"gen", e.gen.str()},
                          {"direct", j_tterms(e.direct)},
                          {"bock", j_tterms(e.bock)}};
            if (!e.display.empty()) entry["display"] = e.display;
            psi.push_back(std::move(entry));
        }
        algs.push_back({{"prime", a.prime},
                        {"generators", std::move(gens)},
                        {"squares", std::move(squares)},
                        {"rset", a.rset},
                        {"eset", a.eset},
                        {"psi", std::move(psi)},
                        {"bockstein", derived_bockstein(a)}});
    }
    root["algebras"] = std::move(algs);

    json integral;
    json frees = json::array();
    for (int i : gd.DG) {
        const int d = 2 * i - 1;
        frees.push_back({{"name", rg(d).str()}, {"degree", d}});
    }
    integral["free_generators"] = std::move(frees);

    json reds = json::array();
    for (const auto& r : gd.reductions)
        reds.push_back({{"prime", r.prime},
                        {"rho", r.rho.str()},
                        {"coeff", j_rat(r.c)},
                        {"monomial", j_mono(r.mono)}});
    integral["reductions"] = std::move(reds);

    json tau = json::object();
    for (const auto& [p, subs] : gd.tau_rho) tau[std::to_string(p)] = subs;
    integral["tau_rho"] = std::move(tau);

    integral["delta_rhos"] = gd.delta_rhos;
    json rsq = json::array();
    for (const auto& [sub, target] : gd.rho_squares)
        rsq.push_back({{"rho", sub}, {"square", j_mono(target)}});
    integral["rho_squares"] = std::move(rsq);

    json rels = json::array();
    for (const auto& r : gd.relations) {
        json rel = {{"name", r.name}, {"lhs", j_side(r.lhs)}, {"rhs", j_side(r.rhs)}};
        if (!r.display.empty()) rel["display"] = r.display;
        rels.push_back(std::move(rel));
    }
    integral["relations"] = std::move(rels);

    json psif = json::array();
    for (const auto& f : gd.psi_int) {
        json delta = json::object(), shadow = json::object();
        for (const auto& [p, ts] : f.delta) delta[std::to_string(p)] = j_tterms(ts);
        for (const auto& [p, ts] : f.shadow_expanded) shadow[std::to_string(p)] = j_tterms(ts);
        json entry = {{"rho", f.rho.str()},
                      {"direct", j_tterms(f.direct)},
                      {"delta", std::move(delta)},
                      {"shadow_expanded", std::move(shadow)}};
        if (!f.display.empty()) entry["display"] = f.display;
        psif.push_back(std::move(entry));
    }
    integral["psi_formulas"] = std::move(psif);

    json notes = json::array();
    for (const auto& n : gd.zeta_notes)
        notes.push_back({{"prime", n.prime},
                         {"zeta", n.zeta.str()},
                         {"direct", j_tterms(n.direct)}});
    integral["zeta_notes"] = std::move(notes);

    json prim = json::array();
    for (const auto& p : gd.primitives) prim.push_back(p.str());
    integral["primitives"] = std::move(prim);

    root["integral"] = std::move(integral);
    return root.dump(2) + "\n";
}

GroupData import_group_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("parse failure: ") + e.what());
    }
    try {
        if (need(root, "schema_version").get<int>() != 1) bad("unsupported schema_version");

        GroupData gd;
        gd.g = parse_group(need(root, "group").get<std::string>());

        for (const auto& s : need(root, "specials"))
            gd.specials.push_back(
                {need(s, "degree").get<int>(), need(s, "weyl").get<std::string>()});
        for (const auto& x : need(root, "x_classes"))
            gd.xclasses.push_back({need(x, "degree").get<int>(),
                                   need(x, "torsion").get<int>(),
                                   need(x, "height").get<int>()});

        const auto primes = need(root, "primes").get<std::vector<int>>();
        const json& algs = need(root, "algebras");
        if (primes.size() != algs.size()) bad("primes list disagrees with algebras");

        for (const auto& aj : algs) {
            AlgebraS a;
            a.prime = need(aj, "prime").get<int>();
            for (const auto& gj : need(aj, "generators")) {
                GenSpecS g;
                g.name = gen_from(need(gj, "name").get<std::string>());
                g.degree = need(gj, "degree").get<int>();
                g.rule = rule_from(need(gj, "rule").get<std::string>());
                g.bound = need(gj, "bound").get<int>();
                a.gens.push_back(g);
            }
            for (const auto& sj : need(aj, "squares"))
                a.squares.emplace_back(gen_from(need(sj, "gen").get<std::string>()),
                                       mono_from(need(sj, "square")));
            a.rset = need(aj, "rset").get<std::vector<int>>();
            a.eset = need(aj, "eset").get<std::vector<int>>();
            for (const auto& pj : need(aj, "psi")) {
                PsiEntryS e;
                e.gen = gen_from(need(pj, "gen").get<std::string>());
                e.direct = tterms_from(need(pj, "direct"));
                e.bock = tterms_from(need(pj, "bock"));
                if (pj.contains("display")) e.display = pj["display"].get<std::string>();
                a.psi.push_back(std::move(e));
            }
            if (need(aj, "bockstein") != derived_bockstein(a))
                bad("bockstein table disagrees with the pairing set");
            gd.modp.push_back(std::move(a));
        }

        const json& integral = need(root, "integral");
        for (const auto& fj : need(integral, "free_generators")) {
            const int d = need(fj, "degree").get<int>();
            const GenName n = gen_from(need(fj, "name").get<std::string>());
            if (n != rg(d) || d % 2 == 0) bad("free generator must be rho of its odd degree");
            gd.DG.push_back((d + 1) / 2);
        }

        for (const auto& rj : need(integral, "reductions"))
            gd.reductions.push_back({need(rj, "prime").get<int>(),
                                     gen_from(need(rj, "rho").get<std::string>()),
                                     rat_from(need(rj, "coeff")),
                                     mono_from(need(rj, "monomial"))});

        for (const auto& [key, val] : need(integral, "tau_rho").items())
            gd.tau_rho[std::stoi(key)] = val.get<std::vector<int>>();

        gd.delta_rhos = need(integral, "delta_rhos").get<std::vector<int>>();
        for (const auto& sj : need(integral, "rho_squares"))
            gd.rho_squares.emplace_back(need(sj, "rho").get<int>(),
                                        mono_from(need(sj, "square")));

        for (const auto& rj : need(integral, "relations")) {
            RelationS r;
            r.name = need(rj, "name").get<std::string>();
            r.lhs = side_from(need(rj, "lhs"));
            r.rhs = side_from(need(rj, "rhs"));
            if (rj.contains("display")) r.display = rj["display"].get<std::string>();
            gd.relations.push_back(std::move(r));
        }

        for (const auto& fj : need(integral, "psi_formulas")) {
            IntPsiS f;
            f.rho = gen_from(need(fj, "rho").get<std::string>());
            f.direct = tterms_from(need(fj, "direct"));
            f.delta = prime_map_from(need(fj, "delta"));
            f.shadow_expanded = prime_map_from(need(fj, "shadow_expanded"));
            if (fj.contains("display")) f.display = fj["display"].get<std::string>();
            gd.psi_int.push_back(std::move(f));
        }

        for (const auto& nj : need(integral, "zeta_notes"))
            gd.zeta_notes.push_back({need(nj, "prime").get<int>(),
                                     gen_from(need(nj, "zeta").get<std::string>()),
                                     tterms_from(need(nj, "direct"))});

        for (const auto& pj : need(integral, "primitives"))
            gd.primitives.push_back(gen_from(pj.get<std::string>()));

        return gd;
    } catch (const json::exception& e) {
        bad(std::string("schema violation: ") + e.what());
    }
}

std::string report_json(const std::vector<CheckReport>& reports) {
    json root;
    json suites = json::array();
    std::size_t total = 0;
    json bad_ids = json::array();
    for (const auto& r : reports) {
        json items = json::array();
        for (const auto& it : r.items) {
            json i = {{"id", it.id()},
                      {"check", it.check},
                      {"subject", it.subject},
                      {"prime", it.prime},
                      {"pass", it.pass},
                      {"micros", it.micros}};
            if (!it.pass) {
                i["lhs"] = it.lhs;
                i["rhs"] = it.rhs;
                bad_ids.push_back(it.id());
            }
            items.push_back(std::move(i));
        }
        total += r.items.size();
        suites.push_back({{"group", group_name(r.g)},
                          {"items", std::move(items)},
                          {"notes", r.notes}});
    }
    root["suites"] = std::move(suites);
    root["total_items"] = total;
    root["mismatches"] = std::move(bad_ids);
    return root.dump(2) + "\n";
}

} // namespace hopf
