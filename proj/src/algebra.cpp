#include "hopfring/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace hopf {

void Algebra::set_gens(std::vector<GeneratorSpec> gens) {
    if (!gens_.empty()) fail(HopfError::Kind::CorruptData, "generators already set");
    if (gens.size() > kMaxGens)
        fail(HopfError::Kind::CorruptData, "too many generators");
    std::sort(gens.begin(), gens.end(), [](const GeneratorSpec& a, const GeneratorSpec& b) {
        int fa = a.name.fam == Family::X ? 0 : 1;
        int fb = b.name.fam == Family::X ? 0 : 1;
        if (fa != fb) return fa < fb;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.name < b.name;
    });
    for (const auto& g : gens) {
        bool even = g.degree % 2 == 0;
        bool even_rule = g.rule == Rule::Truncated;
        if (even != even_rule)
            fail(HopfError::Kind::CorruptData,
                 "generator " + g.name.str() + ": rule does not match parity");
        if (!even && g.bound != 1)
            fail(HopfError::Kind::CorruptData,
                 "odd generator " + g.name.str() + " must have bound 1");
        if (g.bound < 1 || g.bound > 255)
            fail(HopfError::Kind::CorruptData, "bad bound for " + g.name.str());
    }
    gens_ = std::move(gens);
}

void Algebra::set_square(GenName g, const NamePowers& target) {
    int gi = index_of(g);
    if (gens_[gi].rule != Rule::SquareTo)
        fail(HopfError::Kind::CorruptData, g.str() + " is not a SquareTo generator");
    Monomial m;
    for (const auto& [name, e] : target) {
        int i = index_of(name);
        if (gens_[i].degree % 2 != 0 || e < 0 || e > gens_[i].bound)
            fail(HopfError::Kind::CorruptData, "bad square target for " + g.str());
        m.e[i] = static_cast<std::uint8_t>(m.e[i] + e);
    }
    if (mono_degree(m) != 2 * gens_[gi].degree)
        fail(HopfError::Kind::CorruptData, "square target degree mismatch for " + g.str());
    squares_[gi] = m;
}

void Algebra::set_rho_allowed(int prime, std::set<int> subs) {
    if (mode_ != Coeff::Z)
        fail(HopfError::Kind::CorruptData, "rho_allowed only applies in Z mode");
    rho_allowed_[prime] = std::move(subs);
}

int Algebra::find(GenName n) const {
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        if (gens_[i].name == n) return i;
    return -1;
}

int Algebra::index_of(GenName n) const {
    int i = find(n);
    if (i < 0)
        fail(HopfError::Kind::UnknownGenerator,
             "no generator " + n.str() + " in " + std::string(group_name(group_)) +
                 " over " + coeff_name(mode_));
    return i;
}

int Algebra::mono_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) d += m.e[i] * gens_[i].degree;
    return d;
}

int Algebra::mono_parity(const Monomial& m) const {
    int s = 0;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        s += m.e[i] * (gens_[i].degree % 2);
    return s % 2;
}

int Algebra::mono_modulus(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        if (m.e[i] && gens_[i].torsion) d = std::gcd(d, gens_[i].torsion);
    return d;
}

Element Algebra::one() const {
    Element e;
    e.terms[Monomial{}] = Rat(1);
    return e;
}

Element Algebra::gen(GenName n) const {
    int i = index_of(n);
    Monomial m;
    m.e[i] = 1;
    Element e;
    add_term(e, m, Rat(1));
    return e;
}

Element Algebra::make(Rat c, const NamePowers& pows) const {
    Element acc;
    add_term(acc, Monomial{}, c);
    for (const auto& [name, e] : pows)
        for (int k = 0; k < e; ++k) acc = mul(acc, gen(name));
    return acc;
}

Rat Algebra::norm_scalar(Rat c) const {
    int q = p();
    if (q == 0) return c;
    return Rat(c.mod(q));
}

void Algebra::add_term(Element& e, const Monomial& m, Rat c) const {
    if (mode_ == Coeff::Z) {
        if (!c.is_integer())
            fail(HopfError::Kind::CorruptData, "non-integer coefficient in Z mode");
        int d = mono_modulus(m);
        if (d == 1) return;
        if (d > 1) {
            // torsion summand: gcd of the x-class orders present is a single
            // prime here, and only the declared rho factors survive
            for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
                if (!m.e[i] || gens_[i].name.fam != Family::Rho) continue;
                auto it = rho_allowed_.find(d);
                if (it == rho_allowed_.end() || !it->second.count(gens_[i].name.sub)) return;
            }
            std::int64_t r = c.num() % d;
            if (r < 0) r += d;
            c = Rat(r);
        }
    } else {
        c = norm_scalar(c);
    }
    if (c.is_zero()) return;
    auto [it, fresh] = e.terms.try_emplace(m, c);
    if (!fresh) {
        Rat s = it->second + c;
        if (mode_ != Coeff::Q) {
            int d = mode_ == Coeff::Z ? mono_modulus(m) : p();
            if (d > 0) {
                std::int64_t r = s.num() % d;
                if (r < 0) r += d;
                s = Rat(r);
            }
        }
        if (s.is_zero())
            e.terms.erase(it);
        else
            it->second = s;
    }
}

Element Algebra::add(const Element& a, const Element& b) const {
    Element r = a;
    for (const auto& [m, c] : b.terms) add_term(r, m, c);
    return r;
}

Element Algebra::sub(const Element& a, const Element& b) const {
    Element r = a;
    for (const auto& [m, c] : b.terms) add_term(r, m, -c);
    return r;
}

Element Algebra::scal(Rat c, const Element& a) const {
    Element r;
    for (const auto& [m, cm] : a.terms) add_term(r, m, c * cm);
    return r;
}

Element Algebra::reduce_raw(std::array<int, kMaxGens> raw, Rat c) const {
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        if (raw[i] <= gens_[i].bound) continue;
        switch (gens_[i].rule) {
            case Rule::Exterior:
            case Rule::Truncated:
                return {};
            case Rule::SquareTo: {
                raw[i] -= 2;
                const Monomial& sq = squares_.at(i);
                for (int j = 0; j < static_cast<int>(gens_.size()); ++j) raw[j] += sq.e[j];
                return reduce_raw(raw, c);
            }
        }
    }
    Monomial m;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        m.e[i] = static_cast<std::uint8_t>(raw[i]);
    Element e;
    add_term(e, m, c);
    return e;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element r;
    const int n = static_cast<int>(gens_.size());
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            // Koszul sign for merging mb's factors leftward past ma's:
            // each odd-odd pair (i from b, j>i from a) contributes -1.
            int swaps = 0;
            for (int i = 0; i < n; ++i) {
                if (!mb.e[i] || gens_[i].degree % 2 == 0) continue;
                for (int j = i + 1; j < n; ++j)
                    if (ma.e[j] && gens_[j].degree % 2 != 0) swaps += mb.e[i] * ma.e[j];
            }
            std::array<int, kMaxGens> raw{};
            for (int i = 0; i < n; ++i) raw[i] = ma.e[i] + mb.e[i];
            Rat c = ca * cb;
            if (swaps % 2) c = -c;
            Element part = reduce_raw(raw, c);
            for (const auto& [m, cm] : part.terms) add_term(r, m, cm);
        }
    }
    return r;
}

Element Algebra::pow(const Element& a, int n) const {
    Element r = one();
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

int Algebra::degree(const Element& e) const {
    if (e.is_zero()) return -1;
    int d = mono_degree(e.terms.begin()->first);
    for (const auto& [m, c] : e.terms)
        if (mono_degree(m) != d)
            fail(HopfError::Kind::NonHomogeneous,
                 "element is not homogeneous: " + str(e));
    return d;
}

std::vector<Monomial> Algebra::basis(int deg) const {
    std::vector<Monomial> out;
    Monomial cur;
    const int n = static_cast<int>(gens_.size());
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (rem == 0 && i == n) {
            out.push_back(cur);
            return;
        }
        if (i == n) return;
        int d = gens_[i].degree;
        for (int e = 0; e <= gens_[i].bound && e * d <= rem; ++e) {
            cur.e[i] = static_cast<std::uint8_t>(e);
            self(self, i + 1, rem - e * d);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> Algebra::dims(int maxdeg) const {
    std::vector<long> out(maxdeg + 1, 0);
    Monomial cur;
    const int n = static_cast<int>(gens_.size());
    auto rec = [&](auto&& self, int i, int d) -> void {
        if (i == n) {
            ++out[d];
            return;
        }
        int gd = gens_[i].degree;
        for (int e = 0; e <= gens_[i].bound && d + e * gd <= maxdeg; ++e)
            self(self, i + 1, d + e * gd);
    };
    rec(rec, 0, 0);
    return out;
}

long Algebra::total_dim() const {
    long t = 1;
    for (const auto& g : gens_) t *= g.bound + 1;
    return t;
}

int Algebra::top_degree() const {
    int d = 0;
    for (const auto& g : gens_) d += g.bound * g.degree;
    return d;
}

std::string Algebra::mono_str(const Monomial& m) const {
    if (m.is_unit()) return "1";
    std::string s;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += ' ';
        s += gens_[i].name.str();
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s;
}

std::string Algebra::str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rat>> ts(e.terms.begin(), e.terms.end());
    std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return mono_degree(a.first) < mono_degree(b.first);
    });
    std::string s;
    for (const auto& [m, c] : ts) {
        Rat cc = c;
        if (s.empty()) {
            if (cc < Rat(0)) {
                s += '-';
                cc = -cc;
            }
        } else {
            s += cc < Rat(0) ? " - " : " + ";
            if (cc < Rat(0)) cc = -cc;
        }
        bool unit_mono = m.is_unit();
        if (!(cc == Rat(1)) || unit_mono) {
            s += cc.str();
            if (!unit_mono) s += ' ';
        }
        if (!unit_mono) s += mono_str(m);
    }
    return s;
}

} // namespace hopf
