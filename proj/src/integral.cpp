#include "hopfring/integral.hpp"

#include "hopfring/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace hopf {

namespace {

void need_same_group(Group a, Group b) {
    if (a != b)
        fail(HopfError::Kind::UnknownPair, "integral arithmetic across different groups");
}

// ---------------------------------------------------------------------------
// Per-(group, prime, degree) Bockstein homology data. Membership in the
// Bockstein image of A_p (x) A_p reduces to two cheap facts: the target is a
// beta-cycle, and its Kunneth class in H(A,beta) (x) H(A,beta) vanishes. The
// class is read off with a per-leg projection along im(beta) + (complement
// of ker), which this block computes once per degree with small dense
// elimination.
// ---------------------------------------------------------------------------

struct Elim {
    int p = 2;
    std::size_t n = 0;
    std::vector<std::vector<int>> rows;  // echelon, each with a leading 1
    std::vector<std::size_t> lead;

    explicit Elim(int p_, std::size_t n_) : p(p_), n(n_) {}

    static int inv_mod(int a, int p) {
        int r = 1;
        for (int i = 0; i < p - 2; ++i) r = r * a % p;
        return r;
    }

    void reduce(std::vector<int>& v) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            int f = v[lead[k]];
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = ((v[j] - f * rows[k][j]) % p + p) % p;
        }
    }

    // Adds v to the span; true if it enlarged it.
    bool add(std::vector<int> v) {
        reduce(v);
        std::size_t l = 0;
        while (l < n && v[l] == 0) ++l;
        if (l == n) return false;
        int f = inv_mod(v[l], p);
        for (auto& x : v) x = x * f % p;
        rows.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }
};

// Kernel basis of the m x n matrix M over F_p.
std::vector<std::vector<int>> nullspace(std::vector<std::vector<int>> M,
                                        std::size_t n, int p) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < M.size(); ++c) {
        std::size_t piv = r;
        while (piv < M.size() && M[piv][c] % p == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        int f = Elim::inv_mod(((M[r][c] % p) + p) % p, p);
        for (auto& x : M[r]) x = ((x * f) % p + p) % p;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r) continue;
            int g = ((M[i][c] % p) + p) % p;
            if (!g) continue;
            for (std::size_t j = 0; j < n; ++j)
                M[i][j] = ((M[i][j] - g * M[r][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(n, 0);
        v[c] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = ((-M[k][c]) % p + p) % p;
        out.push_back(std::move(v));
    }
    return out;
}

// Gauss-Jordan inverse of a square matrix; the columns are independent by
// construction wherever this is called.
std::vector<std::vector<int>> invert(std::vector<std::vector<int>> M, int p) {
    std::size_t n = M.size();
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n)
            fail(HopfError::Kind::CorruptData, "projection basis is singular");
        std::swap(M[c], M[piv]);
        std::swap(inv[c], inv[piv]);
        int f = Elim::inv_mod(M[c][c], p);
        for (std::size_t j = 0; j < n; ++j) {
            M[c][j] = M[c][j] * f % p;
            inv[c][j] = inv[c][j] * f % p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            int g = M[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                M[i][j] = ((M[i][j] - g * M[c][j]) % p + p) % p;
                inv[i][j] = ((inv[i][j] - g * inv[c][j]) % p + p) % p;
            }
        }
    }
    return inv;
}

struct ProjData {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> idx;
    std::vector<std::vector<int>> proj;  // n x n projection onto homology reps
};

std::vector<int> coords(const Element& e, const std::map<Monomial, std::size_t>& idx,
                        std::size_t n, int p) {
    std::vector<int> v(n, 0);
    for (const auto& [m, c] : e.terms) v[idx.at(m)] = static_cast<int>(c.mod(p));
    return v;
}

const ProjData& proj_data(Group g, int p, int deg) {
    static std::map<std::tuple<Group, int, int>, ProjData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(g, p, deg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const CatalogEntry& E = entry(g);
    const Algebra& A = E.modp(p);
    const Hopf& H = E.hopf(p);

    ProjData d;
    d.basis = A.basis(deg);
    std::size_t n = d.basis.size();
    for (std::size_t i = 0; i < n; ++i) d.idx[d.basis[i]] = i;

    auto up = A.basis(deg + 1);
    std::map<Monomial, std::size_t> up_idx;
    for (std::size_t i = 0; i < up.size(); ++i) up_idx[up[i]] = i;

    // beta on this degree, rows indexed by the degree+1 basis.
    std::vector<std::vector<int>> beta_rows(up.size(), std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        Element b = H.bockstein_mono(d.basis[j]);
        for (const auto& [m, c] : b.terms)
            beta_rows[up_idx.at(m)][j] = static_cast<int>(c.mod(p));
    }

    // Image of beta from below.
    Elim span(p, n);
    std::vector<std::vector<int>> icols;
    if (deg > 0) {
        for (const auto& m : A.basis(deg - 1)) {
            Element b = H.bockstein_mono(m);
            auto v = coords(b, d.idx, n, p);
            if (span.add(v)) icols.push_back(std::move(v));
        }
    }
    std::vector<std::vector<int>> hcols;
    for (auto& v : nullspace(beta_rows, n, p)) {
        if (span.add(v)) hcols.push_back(std::move(v));
    }
    std::vector<std::vector<int>> ccols;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        if (span.add(v)) ccols.push_back(std::move(v));
    }

    // proj = B . select(homology block) . B^{-1} with B = [im | H | compl].
    std::vector<std::vector<int>> B(n, std::vector<int>(n, 0));
    std::size_t col = 0;
    auto put = [&](const std::vector<std::vector<int>>& cols) {
        for (const auto& v : cols) {
            for (std::size_t r = 0; r < n; ++r) B[r][col] = v[r];
            ++col;
        }
    };
    put(icols);
    std::size_t h_lo = col;
    put(hcols);
    std::size_t h_hi = col;
    put(ccols);

    d.proj.assign(n, std::vector<int>(n, 0));
    if (n) {
        auto Binv = invert(B, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long s = 0;
                for (std::size_t k = h_lo; k < h_hi; ++k)
                    s += B[i][k] * Binv[k][j];
                d.proj[i][j] = static_cast<int>(s % p);
            }
    }
    return cache.emplace(key, std::move(d)).first->second;
}

// Exact membership of t in beta_p(A_p (x) A_p): beta-cycle with vanishing
// Kunneth class. Justified by exponent p: every torsion class of G and of
// G x G has additive order p, so the Bockstein exact sequence makes
// r_p(tau_p(G x G)) precisely the image of beta_p on the tensor square.
bool in_torsion_image(Group g, int p, const Tensor& t, std::string* why) {
    if (t.is_zero()) return true;
    const Hopf& H = entry(g).hopf(p);
    if (!H.bockstein_tensor(t).is_zero()) {
        if (why) *why = "not a Bockstein cycle";
        return false;
    }
    const Algebra& A = entry(g).modp(p);
    // Group terms by left-leg degree, then test (proj (x) proj) = 0.
    std::map<int, std::map<std::pair<std::size_t, std::size_t>, int>> blocks;
    for (const auto& [k, c] : t.terms) {
        int a = A.mono_degree(k.leg[0]);
        int b = A.mono_degree(k.leg[1]);
        const ProjData& pl = proj_data(g, p, a);
        const ProjData& pr = proj_data(g, p, b);
        blocks[a][{pl.idx.at(k.leg[0]), pr.idx.at(k.leg[1])}] =
            static_cast<int>(c.mod(p));
    }
    int d = t_degree(t);
    for (auto& [a, terms] : blocks) {
        const ProjData& pl = proj_data(g, p, a);
        const ProjData& pr = proj_data(g, p, d - a);
        std::size_t nl = pl.basis.size(), nr = pr.basis.size();
        std::vector<std::vector<long>> T(nl, std::vector<long>(nr, 0));
        for (auto& [ij, c] : terms) T[ij.first][ij.second] = c;
        // proj_l . T . proj_r^T in two small multiplications.
        std::vector<std::vector<long>> U(nl, std::vector<long>(nr, 0));
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t l = 0; l < nl; ++l) {
                if (!pl.proj[i][l]) continue;
                for (std::size_t r = 0; r < nr; ++r)
                    U[i][r] = (U[i][r] + pl.proj[i][l] * T[l][r]) % p;
            }
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j) {
                long s = 0;
                for (std::size_t r = 0; r < nr; ++r)
                    s += U[i][r] * pr.proj[j][r];
                if (s % p != 0) {
                    if (why) *why = "nonzero Kunneth homology class";
                    return false;
                }
            }
    }
    return true;
}

void certify_torsion_image(Group g, int p, const Tensor& t) {
    std::string why;
    if (!in_torsion_image(g, p, t, &why))
        fail(HopfError::Kind::NotInTorsionImage,
             std::string(group_name(g)) + " p=" + std::to_string(p) +
                 ": tensor is not the shadow of a torsion class (" + why + ")");
}

// ---------------------------------------------------------------------------
// Named integral monomials and their single-monomial reductions, for
// re-expressing lifted shadows in source notation.
// ---------------------------------------------------------------------------

bool has_p_torsion_factor(const GroupData& gd, int p, const MonoS& m) {
    for (const auto& [n, e] : m) {
        if (n.fam != Family::X || e == 0) continue;
        for (const auto& xc : gd.xclasses)
            if (xc.degree == n.sub && xc.torsion == p) return true;
    }
    return false;
}

// All monomials in the x- and rho-classes of exact degree D, x part within
// height bounds, rho part square-free.
void named_monomials_rec(const GroupData& gd, std::size_t xi, std::size_t ri,
                         int left, MonoS& cur, std::vector<MonoS>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    if (xi < gd.xclasses.size()) {
        const auto& xc = gd.xclasses[xi];
        named_monomials_rec(gd, xi + 1, ri, left, cur, out);
        for (int e = 1; e <= xc.height - 1 && e * xc.degree <= left; ++e) {
            cur.emplace_back(xg(xc.degree), e);
            named_monomials_rec(gd, xi + 1, ri, left - e * xc.degree, cur, out);
            cur.pop_back();
        }
        return;
    }
    if (ri < gd.DG.size()) {
        int deg = 2 * gd.DG[ri] - 1;
        named_monomials_rec(gd, xi, ri + 1, left, cur, out);
        if (deg <= left) {
            cur.emplace_back(rg(deg), 1);
            named_monomials_rec(gd, xi, ri + 1, left - deg, cur, out);
            cur.pop_back();
        }
    }
}

Element rp_of_named(const CatalogEntry& E, int p, const MonoS& m) {
    const Algebra& A = E.modp(p);
    Element acc = A.one();
    for (const auto& [n, e] : m) {
        Element f = E.reduction_image(p, n);
        for (int i = 0; i < e && !acc.is_zero(); ++i) acc = A.mul(acc, f);
    }
    return acc;
}

struct Preimage {
    MonoS named;
    Rat img_coeff;
    bool torsion = false;
};

// monomial of A_p in degree D -> first named integral monomial reducing to
// a multiple of it.
const std::map<Monomial, Preimage>& preimages(Group g, int p, int D) {
    static std::map<std::tuple<Group, int, int>, std::map<Monomial, Preimage>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(g, p, D);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const CatalogEntry& E = entry(g);
    std::map<Monomial, Preimage> out;
    std::vector<MonoS> named;
    MonoS cur;
    named_monomials_rec(E.data(), 0, 0, D, cur, named);
    for (const auto& m : named) {
        Element img = rp_of_named(E, p, m);
        if (img.is_zero()) continue;
        const auto& [mono, c] = *img.terms.begin();
        if (!out.count(mono))
            out[mono] = {m, c, has_p_torsion_factor(E.data(), p, m)};
    }
    return cache.emplace(key, std::move(out)).first->second;
}

std::map<int, Element> zero_shadows(const CatalogEntry& E) {
    std::map<int, Element> s;
    for (int p : E.primes()) s[p] = {};
    return s;
}

}  // namespace

IntegralElement int_zero(Group g) {
    return {g, {}, zero_shadows(entry(g))};
}

IntegralElement int_one(Group g) {
    const CatalogEntry& E = entry(g);
    IntegralElement z{g, E.rational().one(), {}};
    for (int p : E.primes()) z.shadow[p] = E.modp(p).one();
    return z;
}

IntegralElement embed(Group g, GenName n) {
    const CatalogEntry& E = entry(g);
    if (n.fam == Family::Zeta)
        fail(HopfError::Kind::UnknownGenerator,
             n.str() + " is a mod-p symbol, not an integral class");
    IntegralElement z = int_zero(g);
    if (n.fam == Family::Rho) z.free = E.rational().gen(n);
    for (int p : E.primes()) z.shadow[p] = E.reduction_image(p, n);
    return z;
}

IntegralElement embed(Group g, const CRef& c) {
    const CatalogEntry& E = entry(g);
    auto desc = E.class_CI(c);
    IntegralElement z = int_zero(g);
    z.shadow[c.prime] = desc.rp_image;
    return z;
}

IntegralElement embed_free(Group g, const Element& rational) {
    const CatalogEntry& E = entry(g);
    const Algebra& Q = E.rational();
    IntegralElement z = int_zero(g);
    z.free = rational;
    for (int p : E.primes()) {
        const Algebra& A = E.modp(p);
        Element s;
        for (const auto& [mono, c] : rational.terms) {
            Element term = A.make(c, {});
            for (std::size_t i = 0; i < Q.gens().size() && !term.is_zero(); ++i)
                for (int e = 0; e < mono.e[i]; ++e)
                    term = A.mul(term, E.reduction_image(p, Q.gens()[i].name));
            s = A.add(s, term);
        }
        z.shadow[p] = s;
    }
    return z;
}

IntegralElement int_add(const IntegralElement& a, const IntegralElement& b) {
    need_same_group(a.g, b.g);
    const CatalogEntry& E = entry(a.g);
    IntegralElement z{a.g, E.rational().add(a.free, b.free), {}};
    for (int p : E.primes())
        z.shadow[p] = E.modp(p).add(a.shadow.at(p), b.shadow.at(p));
    return z;
}

IntegralElement int_sub(const IntegralElement& a, const IntegralElement& b) {
    return int_add(a, int_scal(Rat(-1), b));
}

IntegralElement int_scal(Rat c, const IntegralElement& a) {
    const CatalogEntry& E = entry(a.g);
    IntegralElement z{a.g, E.rational().scal(c, a.free), {}};
    for (int p : E.primes()) z.shadow[p] = E.modp(p).scal(c, a.shadow.at(p));
    return z;
}

IntegralElement int_multiply(const IntegralElement& a, const IntegralElement& b) {
    need_same_group(a.g, b.g);
    const CatalogEntry& E = entry(a.g);
    IntegralElement z{a.g, E.rational().mul(a.free, b.free), {}};
    for (int p : E.primes())
        z.shadow[p] = E.modp(p).mul(a.shadow.at(p), b.shadow.at(p));
    return z;
}

bool int_is_zero(const IntegralElement& z) {
    if (!z.free.is_zero()) return false;
    for (const auto& [p, s] : z.shadow)
        if (!s.is_zero()) return false;
    return true;
}

int int_degree(const IntegralElement& z) {
    const CatalogEntry& E = entry(z.g);
    int d = -1;
    auto meet = [&](int dd) {
        if (dd < 0) return;
        if (d >= 0 && d != dd)
            fail(HopfError::Kind::NonHomogeneous,
                 "integral element mixes degrees " + std::to_string(d) + " and " +
                     std::to_string(dd));
        d = dd;
    };
    meet(E.rational().degree(z.free));
    for (const auto& [p, s] : z.shadow) meet(E.modp(p).degree(s));
    return d;
}

std::string int_str(const IntegralElement& z) {
    const CatalogEntry& E = entry(z.g);
    std::vector<std::string> parts;
    if (!z.free.is_zero()) parts.push_back(E.rational().str(z.free));
    for (const auto& [p, s] : z.shadow)
        if (!s.is_zero())
            parts.push_back(E.modp(p).str(s) + " [mod " + std::to_string(p) + "]");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "; " + parts[i];
    return out;
}

IntegralTensorElement it_zero(Group g) {
    const CatalogEntry& E = entry(g);
    IntegralTensorElement t{g, Tensor(&E.rational(), 2), {}};
    for (int p : E.primes()) t.shadow[p] = Tensor(&E.modp(p), 2);
    return t;
}

IntegralTensorElement it_add(const IntegralTensorElement& a, const IntegralTensorElement& b) {
    need_same_group(a.g, b.g);
    IntegralTensorElement t{a.g, t_add(a.free, b.free), {}};
    for (const auto& [p, s] : a.shadow) t.shadow[p] = t_add(s, b.shadow.at(p));
    return t;
}

IntegralTensorElement it_sub(const IntegralTensorElement& a, const IntegralTensorElement& b) {
    return it_add(a, it_scal(Rat(-1), b));
}

IntegralTensorElement it_scal(Rat c, const IntegralTensorElement& a) {
    IntegralTensorElement t{a.g, t_scal(c, a.free), {}};
    for (const auto& [p, s] : a.shadow) t.shadow[p] = t_scal(c, s);
    return t;
}

IntegralTensorElement it_outer(const IntegralElement& a, const IntegralElement& b) {
    need_same_group(a.g, b.g);
    const CatalogEntry& E = entry(a.g);
    IntegralTensorElement t{a.g, t_outer(E.rational(), a.free, b.free), {}};
    for (int p : E.primes())
        t.shadow[p] = t_outer(E.modp(p), a.shadow.at(p), b.shadow.at(p));
    return t;
}

IntegralTensorElement it_multiply(const IntegralTensorElement& a,
                                  const IntegralTensorElement& b) {
    need_same_group(a.g, b.g);
    IntegralTensorElement t{a.g, t_mul(a.free, b.free), {}};
    for (const auto& [p, s] : a.shadow) t.shadow[p] = t_mul(s, b.shadow.at(p));
    return t;
}

bool it_is_zero(const IntegralTensorElement& t) {
    if (!t.free.is_zero()) return false;
    for (const auto& [p, s] : t.shadow)
        if (!s.is_zero()) return false;
    return true;
}

std::string it_str(const IntegralTensorElement& t) {
    std::vector<std::string> parts;
    if (!t.free.is_zero()) parts.push_back(t_str(t.free));
    for (const auto& [p, s] : t.shadow)
        if (!s.is_zero()) parts.push_back(t_str(s) + " [mod " + std::to_string(p) + "]");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "; " + parts[i];
    return out;
}

IntegralTensorElement delta_element(Group g, int p, const Tensor& u) {
    const CatalogEntry& E = entry(g);
    IntegralTensorElement t = it_zero(g);
    t.shadow[p] = E.hopf(p).bockstein_tensor(u);
    return t;
}

IntegralTensorElement delta_lift(Group g, int p, const Tensor& t) {
    entry(g).modp(p);  // validates the pair
    certify_torsion_image(g, p, t);
    IntegralTensorElement out = it_zero(g);
    out.shadow[p] = t;
    return out;
}

LiftDisplay lift_display(Group g, int p, const Tensor& t) {
    const CatalogEntry& E = entry(g);
    const Algebra& A = E.modp(p);
    const Hopf& H = E.hopf(p);
    LiftDisplay out;
    out.bock_arg = Tensor(&A, 2);
    out.raw = Tensor(&A, 2);
    if (t.is_zero()) return out;
    certify_torsion_image(g, p, t);

    // Pass 1: peel terms that are shadows of named pairs with a torsion
    // side. Each such pair reduces to a single monomial tensor, so peeling
    // is one subtraction per term and leaves the residual liftable.
    Tensor resid = t;
    std::vector<TensorKey> keys;
    for (const auto& [k, c] : t.terms) keys.push_back(k);
    for (const auto& k : keys) {
        auto cur = resid.terms.find(k);
        if (cur == resid.terms.end()) continue;
        int dl = A.mono_degree(k.leg[0]);
        int dr = A.mono_degree(k.leg[1]);
        if (dl == 0 || dr == 0) continue;
        const auto& pl = preimages(g, p, dl);
        const auto& pr = preimages(g, p, dr);
        auto il = pl.find(k.leg[0]);
        auto ir = pr.find(k.leg[1]);
        if (il == pl.end() || ir == pr.end()) continue;
        if (!il->second.torsion && !ir->second.torsion) continue;
        Rat f = cur->second / (il->second.img_coeff * ir->second.img_coeff);
        f = Rat(f.mod(p));
        if (f.is_zero()) continue;
        out.named.push_back({f, il->second.named, ir->second.named});
        Tensor img = t_outer(A, rp_of_named(E, p, il->second.named),
                             rp_of_named(E, p, ir->second.named));
        resid = t_sub(resid, t_scal(f, img));
    }
    if (resid.is_zero()) return out;

    // Pass 2: express the residual as beta_p of a tensor, preferring
    // odd (x) odd arguments (the shape the source formulas use).
    int d = t_degree(resid);
    std::vector<TensorKey> cols_keys;
    auto push_cols = [&](bool odd_pass) {
        for (int a = 0; a <= d - 1; ++a) {
            bool odd = (a % 2 == 1) && ((d - 1 - a) % 2 == 1);
            if (odd != odd_pass) continue;
            for (const auto& m1 : A.basis(a))
                for (const auto& m2 : A.basis(d - 1 - a))
                    cols_keys.push_back({{m1, m2, Monomial{}}});
        }
    };
    push_cols(true);
    push_cols(false);

    constexpr std::size_t kSolveCap = 20000;
    if (cols_keys.size() > kSolveCap) {
        // Certified liftable but too large to re-express; hand back the
        // residual shadow unchanged.
        out.raw = resid;
        return out;
    }

    std::map<TensorKey, std::size_t> row_of;
    auto row = [&](const TensorKey& k) {
        return row_of.try_emplace(k, row_of.size()).first->second;
    };
    std::vector<std::vector<std::pair<std::size_t, int>>> cols;
    cols.reserve(cols_keys.size());
    for (const auto& ck : cols_keys) {
        Tensor u(&A, 2);
        t_add_term(u, ck, Rat(1));
        Tensor img = H.bockstein_tensor(u);
        std::vector<std::pair<std::size_t, int>> col;
        for (const auto& [k, c] : img.terms)
            col.emplace_back(row(k), static_cast<int>(c.mod(p)));
        cols.push_back(std::move(col));
    }
    std::vector<std::pair<std::size_t, int>> target;
    for (const auto& [k, c] : resid.terms)
        target.emplace_back(row(k), static_cast<int>(c.mod(p)));

    auto sol = solve_mod_p(p, row_of.size(), cols, target);
    if (!sol)
        fail(HopfError::Kind::NotInTorsionImage,
             "certified torsion shadow failed to solve against the Bockstein "
             "image basis; catalog data is inconsistent");
    for (std::size_t j = 0; j < cols_keys.size(); ++j)
        if ((*sol)[j]) t_add_term(out.bock_arg, cols_keys[j], Rat((*sol)[j]));
    return out;
}

IntegralTensorElement psi_integral(const IntegralElement& z, bool generator_mode) {
    const CatalogEntry& E = entry(z.g);
    IntegralTensorElement out = it_zero(z.g);
    if (!z.free.is_zero()) out.free = E.hopf(0).reduced_coproduct(z.free);
    for (int p : E.primes()) {
        const Element& s = z.shadow.at(p);
        if (!s.is_zero()) out.shadow[p] = E.hopf(p).reduced_coproduct(s);
    }
    if (generator_mode) {
        if (!out.free.is_zero())
            fail(HopfError::Kind::NotInTorsionImage,
                 "reduced coproduct has a nonzero free part; not a torsion class");
        for (int p : E.primes()) certify_torsion_image(z.g, p, out.shadow.at(p));
    }
    return out;
}

bool is_primitive_integral(const IntegralElement& z) {
    return it_is_zero(psi_integral(z, false));
}

}  // namespace hopf
