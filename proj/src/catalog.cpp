#include "hopfring/catalog.hpp"

#include <algorithm>
#include <set>

namespace hopf {

std::string CRef::str() const {
    std::string s = "C{";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subs[i]);
    }
    return s + "}";
}

namespace {

Coeff coeff_of_prime(int p) {
    switch (p) {
        case 2: return Coeff::F2;
        case 3: return Coeff::F3;
        case 5: return Coeff::F5;
    }
    fail(HopfError::Kind::UnknownPair, "no coefficient field mod " + std::to_string(p));
}

const XClassS* find_xclass(const GroupData& d, int degree) {
    for (const auto& x : d.xclasses)
        if (x.degree == degree) return &x;
    return nullptr;
}

// Generator list of A_p from the r/e sets: x_{2s} for s in e (truncated at
// the catalogued height), zeta_{2s-1} for s in r (SquareTo when a square
// target is on file).
std::vector<GenSpecS> derive_gens(const GroupData& d, const AlgebraS& a) {
    std::vector<GenSpecS> out;
    for (int s : a.eset) {
        const XClassS* x = find_xclass(d, 2 * s);
        if (!x || x->torsion != a.prime)
            fail(HopfError::Kind::CorruptData,
                 group_name(d.g) + std::string(": e-set entry ") + std::to_string(s) +
                     " has no matching x-class mod " + std::to_string(a.prime));
        out.push_back({xg(2 * s), 2 * s, Rule::Truncated, x->height - 1});
    }
    for (int s : a.rset) {
        GenName n = zg(2 * s - 1);
        bool sq = std::any_of(a.squares.begin(), a.squares.end(),
                              [&](const auto& q) { return q.first == n; });
        out.push_back({n, 2 * s - 1, sq ? Rule::SquareTo : Rule::Exterior, 1});
    }
    return out;
}

Algebra build_modp(const GroupData& d, const AlgebraS& a) {
    Algebra A(coeff_of_prime(a.prime), d.g);
    std::vector<GeneratorSpec> gs;
    gs.reserve(a.gens.size());
    for (const auto& g : a.gens) gs.push_back({g.name, g.degree, g.rule, g.bound, 0});
    A.set_gens(std::move(gs));
    for (const auto& [n, target] : a.squares) A.set_square(n, target);
    return A;
}

int rho_degree_in(const GroupData& d, GenName n) {
    if (n.fam != Family::Rho) return -1;
    for (int i : d.DG)
        if (2 * i - 1 == n.sub) return n.sub;
    return -1;
}

int x_degree_in(const GroupData& d, GenName n) {
    if (n.fam != Family::X) return -1;
    return find_xclass(d, n.sub) ? n.sub : -1;
}

} // namespace

CatalogEntry::CatalogEntry(GroupData gd) : data_(std::move(gd)) {
    try {
        // Rational presentation: exterior on rho_{2i-1}, i in D_G.
        rational_ = Algebra(Coeff::Q, data_.g);
        {
            std::vector<GeneratorSpec> gs;
            for (int i : data_.DG)
                gs.push_back({rg(2 * i - 1), 2 * i - 1, Rule::Exterior, 1, 0});
            rational_.set_gens(std::move(gs));
        }
        hopf_[0] = std::make_unique<Hopf>(rational_);

        for (auto& a : data_.modp) {
            auto derived = derive_gens(data_, a);
            if (a.gens.empty())
                a.gens = derived;
            else if (a.gens != derived)
                fail(HopfError::Kind::CorruptData,
                     "stored generator list disagrees with the r/e tables");
            auto [it, fresh] = modp_.emplace(a.prime, build_modp(data_, a));
            if (!fresh)
                fail(HopfError::Kind::CorruptData, "duplicate mod-p presentation");
            const Algebra& A = it->second;

            auto h = std::make_unique<Hopf>(A);
            // Bockstein table from the pairing set: beta(zeta_{2s-1}) = -x_{2s}, s in e.
            for (int s : a.eset)
                h->set_beta_gen(zg(2 * s - 1), A.make(Rat(-1), {{xg(2 * s), 1}}));

            std::map<GenName, Tensor> psi;
            for (const auto& e : a.psi) {
                Tensor t = eval_tensor_terms(A, e.direct);
                t = t_add(t, h->bockstein_tensor(eval_tensor_terms(A, e.bock)));
                psi[e.gen] = std::move(t);
            }
            // The coproduct of x_{2s} is determined by naturality under the
            // Bockstein pairing it with zeta_{2s-1}.
            for (int s : a.eset) {
                auto itz = psi.find(zg(2 * s - 1));
                Tensor src = itz == psi.end() ? Tensor(&A, 2) : itz->second;
                psi[xg(2 * s)] = t_scal(Rat(-1), h->bockstein_tensor(src));
            }
            for (auto& [n, t] : psi)
                if (!t.is_zero()) h->set_psi_gen(n, std::move(t));
            hopf_[a.prime] = std::move(h);
        }

        // Explicit integral presentations exist only where the torsion ring
        // is monogenic in each degree block (no C_I beyond singletons and a
        // single torsion prime per monomial suffices): G2, F4, E6.
        bool explicit_ok = data_.g == Group::G2 || data_.g == Group::F4 || data_.g == Group::E6;
        if (explicit_ok) {
            Algebra Z(Coeff::Z, data_.g);
            std::vector<GeneratorSpec> gs;
            std::set<int> squared(data_.delta_rhos.begin(), data_.delta_rhos.end());
            for (int i : data_.DG) {
                int sub = 2 * i - 1;
                gs.push_back({rg(sub), sub,
                              squared.count(sub) ? Rule::SquareTo : Rule::Exterior, 1, 0});
            }
            for (const auto& x : data_.xclasses)
                gs.push_back({xg(x.degree), x.degree, Rule::Truncated, x.height - 1,
                              x.torsion});
            Z.set_gens(std::move(gs));
            for (const auto& [sub, target] : data_.rho_squares) Z.set_square(rg(sub), target);
            for (const auto& [p, subs] : data_.tau_rho)
                Z.set_rho_allowed(p, std::set<int>(subs.begin(), subs.end()));
            zmodel_ = std::move(Z);
        }

        validate();
    } catch (const HopfError& e) {
        if (e.kind() == HopfError::Kind::CorruptData) throw;
        fail(HopfError::Kind::CorruptData,
             std::string(group_name(data_.g)) + ": " + e.what());
    }
}

std::vector<int> CatalogEntry::primes() const {
    std::vector<int> out;
    for (const auto& [p, _] : modp_) out.push_back(p);
    return out;
}

bool CatalogEntry::has_prime(int p) const { return modp_.count(p) != 0; }

const Algebra& CatalogEntry::modp(int p) const {
    auto it = modp_.find(p);
    if (it == modp_.end())
        fail(HopfError::Kind::UnknownPair,
             std::string(group_name(data_.g)) + " has no " + std::to_string(p) +
                 "-torsion");
    return it->second;
}

const Hopf& CatalogEntry::hopf(int p) const {
    auto it = hopf_.find(p);
    if (it == hopf_.end())
        fail(HopfError::Kind::UnknownPair,
             std::string(group_name(data_.g)) + " has no " + std::to_string(p) +
                 "-torsion");
    return *it->second;
}

Element CatalogEntry::reduction_image(int p, GenName n) const {
    const Algebra& A = modp(p);
    if (n.fam == Family::Rho) {
        for (const auto& r : data_.reductions)
            if (r.prime == p && r.rho == n) return eval_mono(A, r.mono, r.c);
        fail(HopfError::Kind::UnknownGenerator,
             n.str() + " has no reduction row mod " + std::to_string(p));
    }
    if (n.fam == Family::X) {
        if (x_degree_in(data_, n) < 0)
            fail(HopfError::Kind::UnknownGenerator,
                 n.str() + " is not a torsion class of " + group_name(data_.g));
        return A.has(n) ? A.gen(n) : A.zero();
    }
    fail(HopfError::Kind::UnknownGenerator, n.str() + " is not an integral generator");
}

Element CatalogEntry::reduction_image(const CRef& c) const { return class_CI(c).rp_image; }

CatalogEntry::CIDescriptor CatalogEntry::class_CI(const CRef& c) const {
    const AlgebraS* as = nullptr;
    for (const auto& a : data_.modp)
        if (a.prime == c.prime) as = &a;
    if (!as)
        fail(HopfError::Kind::UnknownPair,
             std::string(group_name(data_.g)) + " has no " + std::to_string(c.prime) +
                 "-torsion");
    if (c.subs.empty()) fail(HopfError::Kind::NotInE, "empty subscript set");
    std::set<int> eset(as->eset.begin(), as->eset.end());
    for (int s : c.subs)
        if (!eset.count(s))
            fail(HopfError::Kind::NotInE,
                 c.str() + ": subscript " + std::to_string(s) + " not in e(" +
                     group_name(data_.g) + "," + std::to_string(c.prime) + ")");
    std::set<int> uniq(c.subs.begin(), c.subs.end());
    if (uniq.size() != c.subs.size())
        fail(HopfError::Kind::NotInE, c.str() + ": repeated subscript");

    const Algebra& A = modp(c.prime);
    CIDescriptor out;
    out.zeta_I = A.one();
    int sum = 0;
    for (int s : uniq) {
        out.zeta_I = A.mul(out.zeta_I, A.gen(zg(2 * s - 1)));
        sum += s;
    }
    out.degree = 2 * sum - static_cast<int>(uniq.size()) + 1;
    out.rp_image = hopf(c.prime).bockstein(out.zeta_I);
    return out;
}

Element CatalogEntry::eval_mono(const Algebra& A, const MonoS& m, Rat c) const {
    return A.make(c, m);
}

Tensor CatalogEntry::eval_tensor_terms(const Algebra& A,
                                       const std::vector<TensorTermS>& ts) const {
    Tensor out(&A, 2);
    for (const auto& t : ts)
        out = t_add(out, t_scal(t.c, t_outer(A, A.make(Rat(1), t.left),
                                             A.make(Rat(1), t.right))));
    return out;
}

void CatalogEntry::validate() const {
    const GroupData& d = data_;
    auto bad = [&](const std::string& msg) {
        fail(HopfError::Kind::CorruptData, std::string(group_name(d.g)) + ": " + msg);
    };

    if (d.DG.empty() || !std::is_sorted(d.DG.begin(), d.DG.end())) bad("D_G not sorted");

    // Special classes pair off with torsion x-classes degree for degree.
    if (d.specials.size() != d.xclasses.size()) bad("specials/x-classes count mismatch");
    for (std::size_t i = 0; i < d.specials.size(); ++i)
        if (d.specials[i].degree != d.xclasses[i].degree)
            bad("special class degree disagrees with x-class table");
    for (const auto& x : d.xclasses) {
        if (x.degree % 2 || x.height < 2) bad("malformed x-class row");
        if (x.torsion != 2 && x.torsion != 3 && x.torsion != 5) bad("x-class torsion prime");
    }

    std::set<int> primes;
    for (const auto& a : d.modp) {
        if (!primes.insert(a.prime).second) bad("duplicate prime");
        std::set<int> rset(a.rset.begin(), a.rset.end());
        for (int s : a.eset)
            if (!rset.count(s)) bad("e(G,p) not contained in r(G,p)");
        // x-classes at this prime correspond one to one with the e-set.
        std::set<int> xdeg;
        for (const auto& x : d.xclasses)
            if (x.torsion == a.prime) xdeg.insert(x.degree);
        std::set<int> edeg;
        for (int s : a.eset) edeg.insert(2 * s);
        if (xdeg != edeg) bad("e-set and x-class table disagree");

        const Algebra& A = modp(a.prime);
        for (const auto& [n, target] : a.squares) {
            if (a.prime != 2) bad("square rule outside characteristic 2");
            Element t = A.make(Rat(1), target);
            if (t.is_zero() || A.degree(t) != 2 * A.gens()[A.index_of(n)].degree)
                bad("square target of " + n.str() + " has wrong degree");
        }
        std::set<GenName> seen;
        for (const auto& e : a.psi) {
            if (!A.has(e.gen)) bad("coproduct entry for unknown " + e.gen.str());
            if (!seen.insert(e.gen).second) bad("duplicate coproduct entry");
            int deg = A.gens()[A.index_of(e.gen)].degree;
            for (const auto& t : e.direct) {
                Element l = A.make(Rat(1), t.left), r = A.make(Rat(1), t.right);
                if (l.is_zero() || r.is_zero() || A.degree(l) <= 0 || A.degree(r) <= 0 ||
                    A.degree(l) + A.degree(r) != deg)
                    bad("inhomogeneous coproduct term for " + e.gen.str());
            }
            for (const auto& t : e.bock) {
                Element l = A.make(Rat(1), t.left), r = A.make(Rat(1), t.right);
                if (l.is_zero() || r.is_zero() || A.degree(l) + A.degree(r) != deg - 1)
                    bad("inhomogeneous Bockstein argument for " + e.gen.str());
            }
        }
    }

    // Reduction rows: one per (rho, torsion prime), correct degree.
    for (const auto& r : d.reductions) {
        if (!primes.count(r.prime)) bad("reduction row at a torsion-free prime");
        int deg = rho_degree_in(d, r.rho);
        if (deg < 0) bad("reduction row for unknown " + r.rho.str());
        const Algebra& A = modp(r.prime);
        Element v = A.make(r.c, r.mono);
        if (v.is_zero() || A.degree(v) != deg)
            bad("reduction image of " + r.rho.str() + " has wrong degree");
    }
    for (int p : primes)
        for (int i : d.DG) {
            int n = 0;
            for (const auto& r : d.reductions)
                if (r.prime == p && r.rho == rg(2 * i - 1)) ++n;
            if (n != 1) bad("rho" + std::to_string(2 * i - 1) + " needs exactly one row mod " +
                            std::to_string(p));
        }

    for (const auto& [p, subs] : d.tau_rho) {
        if (!primes.count(p)) bad("tau list at a torsion-free prime");
        for (int sub : subs)
            if (rho_degree_in(d, rg(sub)) < 0) bad("tau list names unknown rho");
    }
    std::set<int> squared(d.delta_rhos.begin(), d.delta_rhos.end());
    if (squared.size() != d.rho_squares.size()) bad("delta-rho/square table mismatch");
    for (const auto& [sub, target] : d.rho_squares) {
        if (!squared.count(sub)) bad("square target for non-delta rho");
        int deg = 0;
        for (const auto& [n, e] : target) {
            int xd = x_degree_in(d, n);
            if (xd < 0) bad("rho square target names a non-torsion class");
            deg += xd * e;
        }
        if (deg != 2 * sub) bad("rho square target degree");
    }

    auto term_degree = [&](const IntSideTermS& t) {
        int deg = 0;
        for (const auto& [n, e] : t.mono) {
            int xd = x_degree_in(d, n), rd = rho_degree_in(d, n);
            if (xd < 0 && rd < 0) bad("relation term names unknown generator");
            deg += (xd > 0 ? xd : rd) * e;
        }
        for (const auto& c : t.cls) {
            class_CI(c);  // validates membership in e(G,p)
            int sum = 0;
            for (int s : c.subs) sum += s;
            deg += 2 * sum - static_cast<int>(c.subs.size()) + 1;
        }
        return deg;
    };
    std::set<std::string> rel_names;
    for (const auto& rel : d.relations) {
        if (!rel_names.insert(rel.name).second) bad("duplicate relation name");
        if (rel.lhs.empty()) bad("relation without left side");
        int deg = term_degree(rel.lhs.front());
        for (const auto& t : rel.lhs)
            if (term_degree(t) != deg) bad("inhomogeneous relation " + rel.name);
        for (const auto& t : rel.rhs)
            if (term_degree(t) != deg) bad("inhomogeneous relation " + rel.name);
    }

    auto leg_degree = [&](const MonoS& m) {
        int deg = 0;
        for (const auto& [n, e] : m) {
            int xd = x_degree_in(d, n), rd = rho_degree_in(d, n);
            if (xd < 0 && rd < 0) bad("stated coproduct names unknown generator");
            deg += (xd > 0 ? xd : rd) * e;
        }
        return deg;
    };
    // Stated-formula torsion bookkeeping requires each direct term to sit at
    // exactly one torsion prime, read off its x-generator factors.
    auto term_primes = [&](const TensorTermS& t) {
        std::set<int> ps;
        for (const auto* leg : {&t.left, &t.right})
            for (const auto& [n, e] : *leg)
                if (n.fam == Family::X)
                    for (const auto& x : d.xclasses)
                        if (x.degree == n.sub) ps.insert(x.torsion);
        return ps;
    };
    std::set<GenName> rho_seen;
    for (const auto& f : d.psi_int) {
        int deg = rho_degree_in(d, f.rho);
        if (deg < 0) bad("stated coproduct for unknown " + f.rho.str());
        if (!rho_seen.insert(f.rho).second) bad("duplicate stated coproduct");
        for (const auto& t : f.direct) {
            if (leg_degree(t.left) + leg_degree(t.right) != deg)
                bad("inhomogeneous stated term for " + f.rho.str());
            if (term_primes(t).size() != 1)
                bad("stated term of " + f.rho.str() + " has no single torsion prime");
        }
        for (const auto& [p, ts] : f.delta) {
            if (!primes.count(p)) bad("stated delta part at a torsion-free prime");
            const Algebra& A = modp(p);
            for (const auto& t : ts) {
                Element l = A.make(Rat(1), t.left), r = A.make(Rat(1), t.right);
                if (l.is_zero() || r.is_zero() || A.degree(l) + A.degree(r) != deg - 1)
                    bad("inhomogeneous delta argument for " + f.rho.str());
            }
        }
        for (const auto& [p, ts] : f.shadow_expanded) {
            if (!primes.count(p)) bad("stated shadow at a torsion-free prime");
            const Algebra& A = modp(p);
            for (const auto& t : ts) {
                Element l = A.make(Rat(1), t.left), r = A.make(Rat(1), t.right);
                if (l.is_zero() || r.is_zero() || A.degree(l) + A.degree(r) != deg)
                    bad("inhomogeneous stated shadow for " + f.rho.str());
            }
        }
    }

    for (const auto& n : d.zeta_notes) {
        if (!primes.count(n.prime)) bad("zeta note at a torsion-free prime");
        const Algebra& A = modp(n.prime);
        if (!A.has(n.zeta)) bad("zeta note for unknown generator");
        int deg = A.gens()[A.index_of(n.zeta)].degree;
        for (const auto& t : n.direct) {
            Element l = A.make(Rat(1), t.left), r = A.make(Rat(1), t.right);
            if (l.is_zero() || r.is_zero() || A.degree(l) <= 0 || A.degree(r) <= 0 ||
                A.degree(l) + A.degree(r) != deg)
                bad("inhomogeneous zeta note");
        }
    }

    for (const auto& n : d.primitives)
        if (rho_degree_in(d, n) < 0 && x_degree_in(d, n) < 0)
            bad("primitive list names unknown generator");
}

namespace detail {
// Single-slot reroute for mutation tests; see EntryOverrideGuard.
const CatalogEntry*& entry_override(Group g) {
    static std::map<Group, const CatalogEntry*> slots;
    return slots[g];
}
} // namespace detail

const CatalogEntry& entry(Group g) {
    if (const CatalogEntry* o = detail::entry_override(g)) return *o;
    static const std::map<Group, CatalogEntry>& entries = *[] {
        auto* m = new std::map<Group, CatalogEntry>;
        for (const auto& gd : builtin_catalog_data().groups) m->try_emplace(gd.g, gd);
        return m;
    }();
    return entries.at(g);
}

Algebra make_algebra(Group g, Coeff coeff, bool allow_exterior_model) {
    const CatalogEntry& e = entry(g);
    if (coeff == Coeff::Q) return e.rational();
    if (coeff == Coeff::Z) {
        if (const Algebra* z = e.zmodel()) return *z;
        fail(HopfError::Kind::UnknownPair,
             std::string(group_name(g)) +
                 " has no explicit integral presentation; use the shadow model");
    }
    int p = coeff_char(coeff);
    if (e.has_prime(p)) return e.modp(p);
    if (!allow_exterior_model)
        fail(HopfError::Kind::UnknownPair,
             std::string(group_name(g)) + " has no " + std::to_string(p) +
                 "-torsion; pass allow_exterior_model for the exterior algebra");
    // Torsion-free primes: the exterior algebra on the rational degrees.
    Algebra A(coeff, g);
    std::vector<GeneratorSpec> gs;
    for (int i : e.data().DG)
        gs.push_back({zg(2 * i - 1), 2 * i - 1, Rule::Exterior, 1, 0});
    A.set_gens(std::move(gs));
    return A;
}

Group parse_group(const std::string& s) {
    for (Group g : all_groups())
        if (s == group_name(g)) return g;
    fail(HopfError::Kind::UnknownPair, "unknown group '" + s + "'");
}

} // namespace hopf
