#include "polyrep.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qcover {

namespace {

std::vector<int> comp_parities(const RootDatum& rd, const Word& comp) {
    std::vector<int> p(comp.size());
    for (size_t k = 0; k < comp.size(); ++k) p[k] = rd.parity[comp[k]];
    return p;
}

// Normal-ordered product y^a * y^b: moving each variable of b left past the
// higher-index variables of a picks up a sign per odd-odd pass.
std::pair<int, ExpVec> mono_mul(const std::vector<int>& par, const ExpVec& a,
                                const ExpVec& b) {
    long signexp = 0;
    for (size_t s = 0; s < b.size(); ++s) {
        if (b[s] == 0 || par[s] == 0) continue;
        for (size_t t = s + 1; t < a.size(); ++t)
            if (a[t] != 0 && par[t] != 0) signexp += long(b[s]) * a[t];
    }
    ExpVec r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return {signexp % 2 != 0 ? -1 : 1, r};
}

MonoPoly poly_mul(const std::vector<int>& par, const MonoPoly& a, const MonoPoly& b) {
    MonoPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto [sgn, e] = mono_mul(par, ea, eb);
            Rat c = ca * cb;
            if (sgn < 0) c = -c;
            auto it = out.find(e);
            if (it == out.end()) {
                if (c != 0) out.emplace(std::move(e), c);
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

// Divided difference of a two-variable block u^a v^b where u, v are adjacent
// odd variables (uv = -vu): defined by d(u) = d(v) = 1 and the twisted
// Leibniz rule d(fg) = d(f) g + swap(f) d(g) with swap(u) = -v, swap(v) = -u.
const std::map<std::pair<int, int>, Rat>& block_del(int a, int b) {
    static std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rat>> memo;
    auto key = std::make_pair(a, b);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    std::map<std::pair<int, int>, Rat> out;
    auto acc = [&out](int u, int v, const Rat& c) {
        if (c == 0) return;
        auto it = out.find({u, v});
        if (it == out.end()) {
            out.emplace(std::make_pair(u, v), c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    if (a > 0) {
        // d(u * u^{a-1} v^b) = u^{a-1} v^b + (-v) d(u^{a-1} v^b)
        acc(a - 1, b, 1);
        for (const auto& [e, c] : block_del(a - 1, b)) {
            Rat cc = -c;
            if (e.first % 2 != 0) cc = -cc; // v passes u^{e.first}
            acc(e.first, e.second + 1, cc);
        }
    } else if (b > 0) {
        // d(v * v^{b-1}) = v^{b-1} + (-u) d(v^{b-1})
        acc(0, b - 1, 1);
        for (const auto& [e, c] : block_del(0, b - 1)) acc(e.first + 1, e.second, -c);
    }
    auto [it, unused] = memo.emplace(key, std::move(out));
    (void)unused;
    return it->second;
}

} // namespace

PolyVector PolyVector::unit(const Word& comp, const ExpVec& exps) {
    PolyVector v;
    v.add(comp, exps, Rat(1));
    return v;
}

void PolyVector::add(const Word& comp, const ExpVec& exps, const Rat& c) {
    if (c == 0) return;
    PolyKey key{comp, exps};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyVector PolyVector::operator+(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

PolyVector PolyVector::operator-(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
    return r;
}

PolyVector PolyVector::scaled(const Rat& c) const {
    PolyVector r;
    if (c == 0) return r;
    for (const auto& [k, cc] : terms_) r.terms_.emplace(k, cc * c);
    return r;
}

std::string PolyVector::str(const RootDatum& rd) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c) << "*y^(";
        for (size_t j = 0; j < k.second.size(); ++j) {
            if (j) os << ",";
            os << k.second[j];
        }
        os << ")" << word_str(rd, k.first);
    }
    return os.str();
}

PolySpace::PolySpace(const RootDatum& rd, const Weight& w) : rd_(rd), w_(w) {
    if (int(w.mult.size()) != rd.rank)
        throw WeightMismatch("weight size does not match datum rank");
    n_ = int(w.height());
    comps_ = enumerate_sequences(w);
    compset_.insert(comps_.begin(), comps_.end());
}

long PolySpace::mono_degree(const Word& comp, const ExpVec& exps) const {
    long d = 0;
    for (size_t k = 0; k < exps.size(); ++k)
        d += long(exps[k]) * 2 * rd_.sym[comp[k]];
    return d;
}

int PolySpace::mono_parity(const Word& comp, const ExpVec& exps) const {
    long p = 0;
    for (size_t k = 0; k < exps.size(); ++k)
        p += long(exps[k]) * rd_.parity[comp[k]];
    return int(p % 2);
}

std::vector<ExpVec> PolySpace::exps_up_to(const Word& comp, long degree_cap) const {
    std::vector<ExpVec> out;
    ExpVec cur(comp.size(), 0);
    // depth-first over positions with a degree budget
    std::function<void(size_t, long)> rec = [&](size_t pos, long left) {
        if (pos == comp.size()) {
            out.push_back(cur);
            return;
        }
        long step = 2 * rd_.sym[comp[pos]];
        for (long e = 0; e * step <= left; ++e) {
            cur[pos] = int(e);
            rec(pos + 1, left - e * step);
        }
        cur[pos] = 0;
    };
    if (degree_cap >= 0) rec(0, degree_cap);
    return out;
}

PolyVector apply_e(const PolySpace& sp, const Word& ui, const PolyVector& v) {
    PolyVector out;
    for (const auto& [k, c] : v.terms())
        if (k.first == ui) out.add(k.first, k.second, c);
    return out;
}

PolyVector apply_y(const PolySpace& sp, int r, const PolyVector& v) {
    const RootDatum& rd = sp.datum();
    PolyVector out;
    for (const auto& [k, c] : v.terms()) {
        const Word& comp = k.first;
        long signexp = 0;
        if (rd.parity[comp[r - 1]] != 0)
            for (int s = 0; s < r - 1; ++s)
                if (rd.parity[comp[s]] != 0) signexp += k.second[s];
        ExpVec e = k.second;
        ++e[r - 1];
        out.add(comp, e, signexp % 2 != 0 ? Rat(-c) : c);
    }
    return out;
}

PolyVector apply_sym(const PolySpace& sp, int kpos, const PolyVector& v) {
    const RootDatum& rd = sp.datum();
    PolyVector out;
    for (const auto& [key, c] : v.terms()) {
        const Word& comp = key.first;
        const ExpVec& a = key.second;
        int pk = rd.parity[comp[kpos - 1]];
        int pk1 = rd.parity[comp[kpos]];
        long signexp = 0;
        if (pk != 0 && pk1 != 0) {
            for (size_t r = 0; r < a.size(); ++r)
                if (rd.parity[comp[r]] != 0) signexp += a[r];
            signexp += long(a[kpos - 1]) * a[kpos];
        }
        Word tc = comp;
        std::swap(tc[kpos - 1], tc[kpos]);
        ExpVec e = a;
        std::swap(e[kpos - 1], e[kpos]);
        out.add(tc, e, signexp % 2 != 0 ? Rat(-c) : c);
    }
    return out;
}

MonoPoly subst_bivar(const PolySpace& sp, const Word& comp, const SkewBivar& q,
                     int upos, int vpos) {
    if (upos == vpos) throw BadInput("bivariate substitution needs two positions");
    const RootDatum& rd = sp.datum();
    const int n = int(comp.size());
    MonoPoly out;
    int pu = rd.parity[comp[upos - 1]];
    int pv = rd.parity[comp[vpos - 1]];
    for (const auto& [e, c] : q.terms()) {
        ExpVec exps(n, 0);
        exps[upos - 1] = e.first;
        exps[vpos - 1] = e.second;
        Rat cc = c;
        if (upos > vpos && pu != 0 && pv != 0 &&
            (long(e.first) * e.second) % 2 != 0)
            cc = -cc;
        out[exps] += cc;
        if (out[exps] == 0) out.erase(exps);
    }
    return out;
}

PolyVector poly_mul_vector(const PolySpace& sp, const MonoPoly& p,
                           const PolyVector& v) {
    const RootDatum& rd = sp.datum();
    PolyVector out;
    Word last_comp;
    std::vector<int> par;
    for (const auto& [k, c] : v.terms()) {
        if (k.first != last_comp || par.empty()) {
            last_comp = k.first;
            par = comp_parities(rd, k.first);
        }
        for (const auto& [pe, pc] : p) {
            auto [sgn, e] = mono_mul(par, pe, k.second);
            Rat cc = pc * c;
            if (sgn < 0) cc = -cc;
            out.add(k.first, e, cc);
        }
    }
    return out;
}

PolyVector apply_tau(const PolySpace& sp, int r, const PolyVector& v) {
    const RootDatum& rd = sp.datum();
    PolyVector out;
    Word cached_comp;
    MonoPoly cached_p;
    std::vector<int> cached_par;
    for (const auto& [key, c] : v.terms()) {
        const Word& comp = key.first;
        const ExpVec& a = key.second;
        int i = comp[r - 1];
        int j = comp[r];
        if (i == j && rd.parity[i] == 0) {
            // even divided difference: acts on the (r, r+1) exponent block
            int ar = a[r - 1], br = a[r];
            if (ar == br) continue;
            ExpVec e = a;
            if (br > ar) {
                for (int k2 = 0; k2 < br - ar; ++k2) {
                    e[r - 1] = ar + k2;
                    e[r] = br - 1 - k2;
                    out.add(comp, e, c);
                }
            } else {
                for (int k2 = 0; k2 < ar - br; ++k2) {
                    e[r - 1] = br + k2;
                    e[r] = ar - 1 - k2;
                    out.add(comp, e, -c);
                }
            }
        } else if (i == j) {
            // odd divided difference: twisted Leibniz through the prefix
            long signexp = 0;
            for (int s = 0; s < r - 1; ++s)
                if (rd.parity[comp[s]] != 0) signexp += a[s];
            Rat base = signexp % 2 != 0 ? Rat(-c) : c;
            for (const auto& [blk, bc] : block_del(a[r - 1], a[r])) {
                ExpVec e = a;
                e[r - 1] = blk.first;
                e[r] = blk.second;
                out.add(comp, e, base * bc);
            }
        } else {
            // swap the strand pair, then multiply by the defining polynomial
            PolyVector piece;
            piece.add(comp, a, c);
            PolyVector moved = apply_sym(sp, r, piece);
            const Word& tc = moved.terms().begin()->first.first;
            if (tc != cached_comp || cached_par.empty()) {
                cached_comp = tc;
                cached_par = comp_parities(rd, tc);
                cached_p = subst_bivar(sp, tc, rd.p_poly(i, j), r + 1, r);
            }
            for (const auto& [mk, mc] : moved.terms()) {
                for (const auto& [pe, pc] : cached_p) {
                    auto [sgn, e] = mono_mul(cached_par, pe, mk.second);
                    Rat cc = pc * mc;
                    if (sgn < 0) cc = -cc;
                    out.add(mk.first, e, cc);
                }
            }
        }
    }
    return out;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

long perm_length(const std::vector<int>& w) {
    long inv = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (size_t k = 0; k < b.size(); ++k) r[k] = a[b[k]];
    return r;
}

std::vector<int> perm_inverse(const std::vector<int>& w) {
    std::vector<int> r(w.size());
    for (size_t k = 0; k < w.size(); ++k) r[w[k]] = int(k);
    return r;
}

std::vector<int> longest_perm(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = n - 1 - k;
    return w;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> w = identity_perm(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Word act_word(const std::vector<int>& w, const Word& x) {
    Word out(x.size());
    for (size_t k = 0; k < x.size(); ++k) out[w[k]] = x[k];
    return out;
}

std::vector<int> canonical_reduced_word(std::vector<int> w) {
    std::vector<int> word;
    const int n = int(w.size());
    while (true) {
        std::vector<int> inv = perm_inverse(w);
        int k = -1;
        for (int c = 0; c + 1 < n; ++c) {
            if (inv[c] > inv[c + 1]) {
                k = c;
                break;
            }
        }
        if (k < 0) break;
        word.push_back(k + 1);
        // w <- s_k w  (swap the values k, k+1 in the image)
        for (int m = 0; m < n; ++m) {
            if (w[m] == k)
                w[m] = k + 1;
            else if (w[m] == k + 1)
                w[m] = k;
        }
    }
    return word;
}

bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w) {
    if (u.size() != w.size()) throw BadInput("permutation sizes differ");
    const int n = int(u.size());
    std::vector<int> red = canonical_reduced_word(w);
    const size_t L = red.size();
    if (perm_length(u) > long(L)) return false;
    for (size_t mask = 0; mask < (size_t(1) << L); ++mask) {
        std::vector<int> p = identity_perm(n);
        for (size_t t = 0; t < L; ++t) {
            if (!(mask & (size_t(1) << t))) continue;
            int r = red[t] - 1;
            // multiply on the right by s_r: p <- p s_r (swap positions r, r+1)
            std::swap(p[r], p[r + 1]);
        }
        if (p == u) return true;
    }
    return false;
}

PolyVector apply_tau_word(const PolySpace& sp, const std::vector<int>& rword,
                          const PolyVector& v) {
    PolyVector cur = v;
    for (auto it = rword.rbegin(); it != rword.rend(); ++it)
        cur = apply_tau(sp, *it, cur);
    return cur;
}

PolyVector apply_monomial(const PolySpace& sp, const ExpVec& exps,
                          const PolyVector& v) {
    MonoPoly p;
    p[exps] = 1;
    return poly_mul_vector(sp, p, v);
}

TauWalk tau_word_walk(const RootDatum& rd, const Word& source,
                      const std::vector<int>& rword) {
    TauWalk walk;
    walk.target = source;
    for (auto it = rword.rbegin(); it != rword.rend(); ++it) {
        int r = *it;
        int i = walk.target[r - 1];
        int j = walk.target[r];
        walk.degree += -rd.pairing[i][j];
        walk.parity ^= rd.parity[i] & rd.parity[j];
        std::swap(walk.target[r - 1], walk.target[r]);
    }
    return walk;
}

namespace {

// Right-hand side of the braid rule at position r within a component:
// the quotient of the difference of defining polynomials, with the extra
// linear factor in the odd case; empty when the outer strands differ.
MonoPoly braid_rhs(const PolySpace& sp, const Word& ui, int r) {
    const RootDatum& rd = sp.datum();
    const int n = int(ui.size());
    MonoPoly out;
    int i = ui[r - 1];
    int mid = ui[r];
    if (ui[r + 1] != i) return out;
    SkewBivar q = rd.q_poly(i, mid);
    if (rd.parity[i] == 0) {
        for (const auto& [e, c] : q.terms()) {
            for (int k = 0; k < e.first; ++k) {
                ExpVec x(n, 0);
                x[r - 1] = k;
                x[r] = e.second;
                x[r + 1] = e.first - 1 - k;
                out[x] += c;
                if (out[x] == 0) out.erase(x);
            }
        }
    } else {
        MonoPoly quot;
        for (const auto& [e, c] : q.terms()) {
            if (e.first % 2 != 0)
                throw Error("InternalCheck",
                            "odd-node polynomial entry with odd first exponent");
            int a2 = e.first / 2;
            for (int k = 0; k < a2; ++k) {
                ExpVec x(n, 0);
                x[r - 1] = 2 * k;
                x[r] = e.second;
                x[r + 1] = 2 * (a2 - 1 - k);
                quot[x] += c;
                if (quot[x] == 0) quot.erase(x);
            }
        }
        MonoPoly lin;
        {
            ExpVec x(n, 0);
            x[r + 1] = 1;
            lin[x] = 1;
            ExpVec y(n, 0);
            y[r - 1] = 1;
            lin[y] = -1;
        }
        std::vector<int> par = comp_parities(rd, ui);
        out = poly_mul(par, lin, quot);
        if (rd.parity[mid] != 0)
            for (auto& [e, c] : out) c = -c;
    }
    return out;
}

struct Checker {
    RelationReport rep;
    const RootDatum& rd;
    void expect(const PolyVector& a, const PolyVector& b, const std::string& what) {
        ++rep.checks;
        if (a != b) {
            rep.ok = false;
            if (rep.failures.size() < 25)
                rep.failures.push_back(what + ": got " + a.str(rd) +
                                       " expected " + b.str(rd));
        }
    }
};

} // namespace

RelationReport verify_relations(const PolySpace& sp, long degree_cap) {
    const RootDatum& rd = sp.datum();
    const int n = sp.size();
    Checker ck{RelationReport{}, rd};

    // projector orthogonality on the constant of each component
    for (const Word& ui : sp.components()) {
        PolyVector one = PolyVector::unit(ui, ExpVec(n, 0));
        for (const Word& uj : sp.components()) {
            PolyVector lhs = apply_e(sp, uj, apply_e(sp, ui, one));
            PolyVector rhs = (ui == uj) ? apply_e(sp, ui, one) : PolyVector{};
            ck.expect(lhs, rhs, rd.name + ": projector product");
        }
    }

    for (const Word& ui : sp.components()) {
        std::vector<int> p = comp_parities(rd, ui);
        for (const ExpVec& a : sp.exps_up_to(ui, degree_cap)) {
            PolyVector m = PolyVector::unit(ui, a);

            // resolution of identity
            PolyVector s;
            for (const Word& uj : sp.components()) s = s + apply_e(sp, uj, m);
            ck.expect(s, m, rd.name + ": projector sum");

            // multiplication commutes with projectors
            for (int r = 1; r <= n; ++r)
                ck.expect(apply_e(sp, ui, apply_y(sp, r, m)), apply_y(sp, r, m),
                          rd.name + ": projector/multiplication");

            // y_r y_s = (-1)^{p_r p_s} y_s y_r
            for (int r = 1; r <= n; ++r)
                for (int s2 = r + 1; s2 <= n; ++s2) {
                    PolyVector lhs = apply_y(sp, r, apply_y(sp, s2, m));
                    PolyVector rhs = apply_y(sp, s2, apply_y(sp, r, m));
                    if ((p[r - 1] & p[s2 - 1]) != 0) rhs = rhs.scaled(Rat(-1));
                    ck.expect(lhs, rhs, rd.name + ": variable exchange");
                }

            for (int r = 1; r < n; ++r) {
                int i = ui[r - 1];
                int j = ui[r];
                Word tgt = ui;
                std::swap(tgt[r - 1], tgt[r]);

                // crossing intertwines projectors
                ck.expect(apply_tau(sp, r, m), apply_e(sp, tgt, apply_tau(sp, r, m)),
                          rd.name + ": crossing target projector");

                // crossing past a distant variable
                for (int s2 = 1; s2 <= n; ++s2) {
                    if (s2 == r || s2 == r + 1) continue;
                    PolyVector lhs = apply_tau(sp, r, apply_y(sp, s2, m));
                    PolyVector rhs = apply_y(sp, s2, apply_tau(sp, r, m));
                    if ((p[r - 1] & p[r] & p[s2 - 1]) != 0) rhs = rhs.scaled(Rat(-1));
                    ck.expect(lhs, rhs, rd.name + ": crossing past variable");
                }

                // distant crossings commute up to sign
                for (int s2 = r + 2; s2 < n; ++s2) {
                    PolyVector lhs = apply_tau(sp, r, apply_tau(sp, s2, m));
                    PolyVector rhs = apply_tau(sp, s2, apply_tau(sp, r, m));
                    if ((p[r - 1] & p[r] & p[s2 - 1] & p[s2]) != 0)
                        rhs = rhs.scaled(Rat(-1));
                    ck.expect(lhs, rhs, rd.name + ": distant crossings");
                }

                // crossing versus the two adjacent variables
                {
                    int sgn = (p[r - 1] & p[r]) != 0 ? -1 : 1;
                    PolyVector lhs = apply_tau(sp, r, apply_y(sp, r + 1, m));
                    PolyVector rhs = apply_y(sp, r, apply_tau(sp, r, m)).scaled(sgn);
                    if (i == j) rhs = rhs + m;
                    ck.expect(lhs, rhs, rd.name + ": crossing against next variable");

                    PolyVector lhs2 = apply_y(sp, r + 1, apply_tau(sp, r, m));
                    PolyVector rhs2 = apply_tau(sp, r, apply_y(sp, r, m)).scaled(sgn);
                    if (i == j) rhs2 = rhs2 + m;
                    ck.expect(lhs2, rhs2, rd.name + ": next variable against crossing");
                }

                // square of a crossing
                {
                    PolyVector lhs = apply_tau(sp, r, apply_tau(sp, r, m));
                    PolyVector rhs;
                    if (i != j) {
                        MonoPoly q = subst_bivar(sp, ui, rd.q_poly(i, j), r, r + 1);
                        rhs = poly_mul_vector(sp, q, m);
                    }
                    ck.expect(lhs, rhs, rd.name + ": crossing squared");
                }
            }

            // braid rule, oriented so that the polynomial action satisfies it
            // (the quadratic rule fixes all rescaling freedom, which makes
            // the orientation an invariant of the representation)
            for (int r = 1; r + 1 < n; ++r) {
                PolyVector lhs =
                    apply_tau(sp, r + 1, apply_tau(sp, r, apply_tau(sp, r + 1, m))) -
                    apply_tau(sp, r, apply_tau(sp, r + 1, apply_tau(sp, r, m)));
                PolyVector rhs;
                MonoPoly f = braid_rhs(sp, ui, r);
                if (!f.empty()) rhs = poly_mul_vector(sp, f, m);
                ck.expect(lhs, rhs, rd.name + ": braid rule");
            }
        }
    }
    return ck.rep;
}

namespace {

// Images of the generators under the flip substitution.
struct FlipGens {
    const PolySpace& sp;

    Word rev(const Word& ui) const { return Word(ui.rbegin(), ui.rend()); }

    PolyVector e(const Word& ui, const PolyVector& v) const {
        return apply_e(sp, rev(ui), v);
    }
    PolyVector y(int r, const PolyVector& v) const {
        return apply_y(sp, sp.size() - r + 1, v);
    }
    PolyVector tau(int r, const PolyVector& v) const {
        const RootDatum& rd = sp.datum();
        const int n = sp.size();
        PolyVector out;
        for (const auto& [k, c] : v.terms()) {
            // letters of the unreversed word at positions r, r+1
            int ir = k.first[n - r];
            int ir1 = k.first[n - r - 1];
            int sgn = (rd.parity[ir] & rd.parity[ir1]) != 0 ? 1 : -1;
            PolyVector piece;
            piece.add(k.first, k.second, sgn > 0 ? c : Rat(-c));
            out = out + apply_tau(sp, n - r, piece);
        }
        return out;
    }

    // image of multiplication by a normal-form polynomial on a component:
    // variable positions reflect, products reorder
    MonoPoly poly(const Word& target_comp, const MonoPoly& src) const {
        const RootDatum& rd = sp.datum();
        const int n = sp.size();
        std::vector<int> par = comp_parities(rd, target_comp);
        MonoPoly out;
        for (const auto& [e, c] : src) {
            MonoPoly prod;
            prod[ExpVec(n, 0)] = c;
            // multiply the reflected variables in original order; mono_mul
            // performs the reordering with signs
            for (int k = 1; k <= n; ++k) {
                if (e[k - 1] == 0) continue;
                ExpVec f(n, 0);
                f[n - k] = e[k - 1];
                MonoPoly factor;
                factor[f] = 1;
                prod = poly_mul(par, prod, factor);
            }
            for (const auto& [fe, fc] : prod) {
                out[fe] += fc;
                if (out[fe] == 0) out.erase(fe);
            }
        }
        return out;
    }
};

} // namespace

RelationReport verify_phi(const PolySpace& sp, long degree_cap) {
    const RootDatum& rd = sp.datum();
    const int n = sp.size();
    Checker ck{RelationReport{}, rd};
    FlipGens g{sp};

    // the substitution is an involution on generators: the crossing sign
    // picked up on a component equals the sign picked up on its reverse at
    // the reflected position, so the two applications cancel
    for (const Word& ui : sp.components()) {
        Word rui = g.rev(ui);
        for (int r = 1; r < n; ++r) {
            int s1 = (rd.parity[ui[r - 1]] & rd.parity[ui[r]]) != 0 ? 1 : -1;
            int s2 = (rd.parity[rui[n - r - 1]] & rd.parity[rui[n - r]]) != 0 ? 1 : -1;
            ++ck.rep.checks;
            if (s1 * s2 != 1) {
                ck.rep.ok = false;
                ck.rep.failures.push_back(rd.name + ": flip involution sign");
            }
        }
    }

    for (const Word& ui : sp.components()) {
        std::vector<int> p = comp_parities(rd, ui);
        Word rev_ui = g.rev(ui);
        for (const ExpVec& a0 : sp.exps_up_to(rev_ui, degree_cap)) {
            // test monomials live in the image component e(rev ui)
            PolyVector m = PolyVector::unit(rev_ui, a0);

            for (int r = 1; r < n; ++r) {
                int i = ui[r - 1];
                int j = ui[r];
                Word tgt = ui;
                std::swap(tgt[r - 1], tgt[r]);

                // image of: tau_r e(ui) = e(s_r ui) tau_r
                ck.expect(g.tau(r, g.e(ui, m)), g.e(tgt, g.tau(r, m)),
                          rd.name + ": flip crossing/projector");

                // image of the adjacent-variable rules
                int sgn = (p[r - 1] & p[r]) != 0 ? -1 : 1;
                PolyVector em = g.e(ui, m);
                PolyVector lhs = g.tau(r, g.y(r + 1, em));
                PolyVector rhs = g.y(r, g.tau(r, em)).scaled(sgn);
                if (i == j) rhs = rhs + em;
                ck.expect(lhs, rhs, rd.name + ": flip next-variable rule");

                PolyVector lhs2 = g.y(r + 1, g.tau(r, em));
                PolyVector rhs2 = g.tau(r, g.y(r, em)).scaled(sgn);
                if (i == j) rhs2 = rhs2 + em;
                ck.expect(lhs2, rhs2, rd.name + ": flip variable-next rule");

                // image of the square rule
                PolyVector lhsq = g.tau(r, g.tau(r, em));
                PolyVector rhsq;
                if (i != j) {
                    MonoPoly q0 = subst_bivar(sp, ui, rd.q_poly(i, j), r, r + 1);
                    rhsq = poly_mul_vector(sp, g.poly(rev_ui, q0), em);
                }
                ck.expect(lhsq, rhsq, rd.name + ": flip crossing squared");
            }

            for (int r = 1; r + 1 < n; ++r) {
                PolyVector em = g.e(ui, m);
                PolyVector lhs = g.tau(r + 1, g.tau(r, g.tau(r + 1, em))) -
                                 g.tau(r, g.tau(r + 1, g.tau(r, em)));
                PolyVector rhs;
                MonoPoly f = braid_rhs(sp, ui, r);
                if (!f.empty()) rhs = poly_mul_vector(sp, g.poly(rev_ui, f), em);
                ck.expect(lhs, rhs, rd.name + ": flip braid rule");
            }
        }
    }
    return ck.rep;
}

namespace {

// Reverse of a normal-form polynomial: each monomial rewritten with its
// letters in the opposite order, then normal-ordered again.
MonoPoly reverse_poly(const std::vector<int>& par, const MonoPoly& src) {
    MonoPoly out;
    for (const auto& [e, c] : src) {
        long signexp = 0;
        for (size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0 || par[s] == 0) continue;
            for (size_t t = s + 1; t < e.size(); ++t)
                if (e[t] != 0 && par[t] != 0) signexp += long(e[s]) * e[t];
        }
        Rat cc = signexp % 2 != 0 ? Rat(-c) : c;
        out[e] += cc;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

} // namespace

RelationReport verify_psi(const PolySpace& sp, long degree_cap) {
    const RootDatum& rd = sp.datum();
    const int n = sp.size();
    Checker ck{RelationReport{}, rd};

    for (const Word& ui : sp.components()) {
        std::vector<int> p = comp_parities(rd, ui);
        for (const ExpVec& a : sp.exps_up_to(ui, degree_cap)) {
            PolyVector m = PolyVector::unit(ui, a);

            for (int r = 1; r < n; ++r) {
                int i = ui[r - 1];
                int j = ui[r];
                Word tgt = ui;
                std::swap(tgt[r - 1], tgt[r]);

                // reversed crossing/projector rule: e(ui) tau_r = tau_r e(s_r ui)
                ck.expect(apply_e(sp, ui, apply_tau(sp, r, m)),
                          apply_tau(sp, r, apply_e(sp, tgt, m)),
                          rd.name + ": reversed crossing/projector");

                // reversed adjacent-variable rules
                int sgn = (p[r - 1] & p[r]) != 0 ? -1 : 1;
                PolyVector lhs = apply_e(sp, ui, apply_y(sp, r + 1, apply_tau(sp, r, m)));
                PolyVector rhs =
                    apply_e(sp, ui, apply_tau(sp, r, apply_y(sp, r, m))).scaled(sgn);
                if (i == j) rhs = rhs + apply_e(sp, ui, m);
                ck.expect(lhs, rhs, rd.name + ": reversed next-variable rule");

                PolyVector lhs2 = apply_e(sp, ui, apply_tau(sp, r, apply_y(sp, r + 1, m)));
                PolyVector rhs2 =
                    apply_e(sp, ui, apply_y(sp, r, apply_tau(sp, r, m))).scaled(sgn);
                if (i == j) rhs2 = rhs2 + apply_e(sp, ui, m);
                ck.expect(lhs2, rhs2, rd.name + ": reversed variable-next rule");

                // reversed square rule
                PolyVector lhsq = apply_e(sp, ui, apply_tau(sp, r, apply_tau(sp, r, m)));
                PolyVector rhsq;
                if (i != j) {
                    MonoPoly q = subst_bivar(sp, ui, rd.q_poly(i, j), r, r + 1);
                    rhsq = apply_e(sp, ui, poly_mul_vector(sp, reverse_poly(p, q), m));
                }
                ck.expect(lhsq, rhsq, rd.name + ": reversed crossing squared");
            }

            for (int r = 1; r + 1 < n; ++r) {
                PolyVector lhs =
                    apply_e(sp, ui,
                            apply_tau(sp, r + 1, apply_tau(sp, r, apply_tau(sp, r + 1, m))) -
                                apply_tau(sp, r,
                                          apply_tau(sp, r + 1, apply_tau(sp, r, m))));
                PolyVector rhs;
                MonoPoly f = braid_rhs(sp, ui, r);
                if (!f.empty())
                    rhs = apply_e(sp, ui, poly_mul_vector(sp, reverse_poly(p, f), m));
                ck.expect(lhs, rhs, rd.name + ": reversed braid rule");
            }
        }
    }
    return ck.rep;
}

PbwReport pbw_independence(const PolySpace& sp, long degree_cap) {
    const RootDatum& rd = sp.datum();
    const int n = sp.size();
    PbwReport out;
    long maxsym = 1;
    for (long s : rd.sym) maxsym = std::max(maxsym, s);
    const long src_limit = degree_cap + 4 * n * maxsym + 8;

    for (const Word& ui : sp.components()) {
        // collect basis elements grouped by (operator degree, operator parity)
        struct Op {
            std::vector<int> rword;
            ExpVec exps;
        };
        std::map<std::pair<long, int>, std::vector<Op>> groups;
        for (const auto& w : all_permutations(n)) {
            std::vector<int> rword = canonical_reduced_word(w);
            TauWalk walk = tau_word_walk(rd, ui, rword);
            for (const ExpVec& a : sp.exps_up_to(ui, degree_cap - walk.degree)) {
                long deg = walk.degree + sp.mono_degree(ui, a);
                if (deg > degree_cap) continue;
                int par = (walk.parity + sp.mono_parity(ui, a)) % 2;
                groups[{deg, par}].push_back(Op{rword, a});
            }
        }
        for (const auto& [slice, ops] : groups) {
            out.count += long(ops.size());
            long rank = 0;
            bool done = false;
            for (long dsrc = 0; dsrc <= src_limit; dsrc += 2) {
                auto tests = sp.exps_up_to(ui, dsrc);
                std::map<std::pair<size_t, PolyKey>, size_t> colidx;
                std::vector<std::vector<Rat>> rows;
                std::vector<std::map<std::pair<size_t, PolyKey>, Rat>> sparse;
                sparse.reserve(ops.size());
                for (const Op& op : ops) {
                    std::map<std::pair<size_t, PolyKey>, Rat> row;
                    for (size_t t = 0; t < tests.size(); ++t) {
                        PolyVector v = PolyVector::unit(ui, tests[t]);
                        v = apply_monomial(sp, op.exps, v);
                        v = apply_tau_word(sp, op.rword, v);
                        for (const auto& [k, c] : v.terms()) {
                            row[{t, k}] = c;
                            auto key = std::make_pair(t, k);
                            if (!colidx.count(key))
                                colidx.emplace(key, colidx.size());
                        }
                    }
                    sparse.push_back(std::move(row));
                }
                rows.assign(ops.size(), std::vector<Rat>(colidx.size(), Rat(0)));
                for (size_t r = 0; r < sparse.size(); ++r)
                    for (const auto& [key, c] : sparse[r])
                        rows[r][colidx.at(key)] = c;
                rank = rank_rat(rows);
                if (rank == long(ops.size())) {
                    done = true;
                    break;
                }
            }
            out.rank += rank;
            if (!done) out.ok = false;
        }
    }
    return out;
}

} // namespace qcover
