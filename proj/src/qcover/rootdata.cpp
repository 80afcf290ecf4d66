#include "rootdata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qcover {

SkewBivar::SkewBivar(int commute_sign) : sign_(commute_sign) {
    if (commute_sign != 1 && commute_sign != -1)
        throw BadInput("commute sign must be +1 or -1");
}

SkewBivar SkewBivar::monomial(int commute_sign, int ue, int ve, const Rat& c) {
    SkewBivar r(commute_sign);
    r.add_term(ue, ve, c);
    return r;
}

SkewBivar SkewBivar::constant(int commute_sign, const Rat& c) {
    return monomial(commute_sign, 0, 0, c);
}

bool SkewBivar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0) &&
           terms_.begin()->second == 1;
}

void SkewBivar::add_term(int ue, int ve, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(ue, ve);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SkewBivar SkewBivar::operator+(const SkewBivar& o) const {
    if (sign_ != o.sign_ && !is_zero() && !o.is_zero())
        throw BadInput("mixing incompatible commutation signs");
    SkewBivar r(is_zero() ? o.sign_ : sign_);
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

SkewBivar SkewBivar::operator-(const SkewBivar& o) const {
    if (sign_ != o.sign_ && !is_zero() && !o.is_zero())
        throw BadInput("mixing incompatible commutation signs");
    SkewBivar r(is_zero() ? o.sign_ : sign_);
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

SkewBivar SkewBivar::operator*(const SkewBivar& o) const {
    if (sign_ != o.sign_ && !is_zero() && !o.is_zero())
        throw BadInput("mixing incompatible commutation signs");
    SkewBivar r(sign_);
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            // v^b * u^c = sign^{b c} u^c v^b
            Rat c = c1 * c2;
            if (sign_ == -1 && (long(k1.second) * k2.first) % 2 != 0) c = -c;
            r.add_term(k1.first + k2.first, k1.second + k2.second, c);
        }
    }
    return r;
}

SkewBivar SkewBivar::pow(int e) const {
    if (e < 0) throw BadInput("negative power of a polynomial");
    SkewBivar r = constant(sign_, 1);
    SkewBivar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SkewBivar SkewBivar::swapped() const {
    SkewBivar r(sign_);
    for (const auto& [k, c] : terms_) {
        // u^a v^b  ->  v^a u^b = sign^{a b} u^b v^a
        Rat cc = c;
        if (sign_ == -1 && (long(k.first) * k.second) % 2 != 0) cc = -cc;
        r.add_term(k.second, k.first, cc);
    }
    return r;
}

SkewBivar SkewBivar::negated_u() const {
    SkewBivar r(sign_);
    for (const auto& [k, c] : terms_)
        r.add_term(k.first, k.second, k.first % 2 != 0 ? Rat(-c) : c);
    return r;
}

SkewBivar SkewBivar::negated_v() const {
    SkewBivar r(sign_);
    for (const auto& [k, c] : terms_)
        r.add_term(k.first, k.second, k.second % 2 != 0 ? Rat(-c) : c);
    return r;
}

bool SkewBivar::operator==(const SkewBivar& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return sign_ == o.sign_ && terms_ == o.terms_;
}

std::string SkewBivar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (k.first != 0) os << "*u^" << k.first;
        if (k.second != 0) os << "*v^" << k.second;
    }
    return os.str();
}

long Weight::height() const {
    long h = 0;
    for (long m : mult) h += m;
    return h;
}

long RootDatum::m_of(int i, int j) const {
    return lcm_long(2 * sym[i], 2 * sym[j]);
}

int RootDatum::index_of_label(const std::string& label) const {
    for (int i = 0; i < rank; ++i)
        if (labels[i] == label) return i;
    throw BadInput("unknown node label: " + label);
}

SkewBivar RootDatum::q_poly(int i, int j) const {
    int cs = (parity[i] * parity[j]) % 2 != 0 ? -1 : 1;
    if (i == j) return SkewBivar(cs);
    if (pairing[i][j] == 0) return SkewBivar::constant(cs, 1);
    long m = m_of(i, j);
    long eu = m / (2 * sym[i]);
    long ev = m / (2 * sym[j]);
    long expo = -2 * pairing[i][j] / m;
    SkewBivar base = SkewBivar::monomial(cs, int(eu), 0, 1) -
                     SkewBivar::monomial(cs, 0, int(ev), 1);
    SkewBivar res = base.pow(int(expo));
    if (dcount[i][j] % 2 != 0)
        res = SkewBivar::constant(cs, -1) * res;
    return res;
}

SkewBivar RootDatum::p_poly(int i, int j) const {
    int cs = (parity[i] * parity[j]) % 2 != 0 ? -1 : 1;
    if (i == j) return SkewBivar(cs);
    if (i < j) return q_poly(i, j);
    return SkewBivar::constant(cs, 1);
}

long RootDatum::pair_weights(const Weight& a, const Weight& b) const {
    if (int(a.mult.size()) != rank || int(b.mult.size()) != rank)
        throw WeightMismatch("weight size does not match datum rank");
    long acc = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            acc += a.mult[i] * b.mult[j] * pairing[i][j];
    return acc;
}

Weight RootDatum::weight_of_word(const std::vector<int>& word) const {
    Weight w;
    w.mult.assign(rank, 0);
    for (int c : word) {
        if (c < 0 || c >= rank) throw BadInput("word entry out of range");
        ++w.mult[c];
    }
    return w;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

RootDatum derive_root_datum(const QuiverDatum& in) {
    const int nv = in.num_vertices;
    if (nv <= 0) throw BadInput("quiver needs at least one vertex");
    if (int(in.automorphism.size()) != nv)
        throw BadInput("automorphism must list an image for every vertex");
    for (const auto& [s, t] : in.edges) {
        if (s < 0 || s >= nv || t < 0 || t >= nv)
            throw BadInput("edge endpoint out of range");
        if (s == t) throw BadInput("loops are not allowed");
    }

    // The vertex map must be a bijection.
    {
        std::vector<int> seen(nv, 0);
        for (int v = 0; v < nv; ++v) {
            int im = in.automorphism[v];
            if (im < 0 || im >= nv)
                throw IncompatibleAutomorphism("vertex image out of range");
            if (seen[im]++)
                throw IncompatibleAutomorphism("vertex map is not a bijection");
        }
    }

    // The edge multiset must be stable under the vertex map.
    {
        auto sorted = in.edges;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(in.edges.size());
        for (const auto& [s, t] : in.edges)
            mapped.emplace_back(in.automorphism[s], in.automorphism[t]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != sorted)
            throw IncompatibleAutomorphism("edge multiset is not preserved");
    }

    // Vertex orbits, ordered by smallest member.
    RootDatum rd;
    rd.name = in.name;
    rd.orbit_of_vertex.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (rd.orbit_of_vertex[v] >= 0) continue;
        int idx = rd.rank++;
        rd.reps.push_back(v);
        long size = 0;
        int c = v;
        do {
            rd.orbit_of_vertex[c] = idx;
            ++size;
            c = in.automorphism[c];
        } while (c != v);
        rd.sym.push_back(size);
    }
    const int n = rd.rank;

    // No edge may join two vertices of the same orbit.
    for (const auto& [s, t] : in.edges)
        if (rd.orbit_of_vertex[s] == rd.orbit_of_vertex[t])
            throw IncompatibleAutomorphism("edge inside a single orbit");

    // The vertex map must preserve connected components.
    {
        UnionFind uf(nv);
        for (const auto& [s, t] : in.edges) uf.unite(s, t);
        for (int v = 0; v < nv; ++v)
            if (uf.find(v) != uf.find(in.automorphism[v]))
                throw IncompatibleAutomorphism(
                    "vertex map does not preserve connected components");
    }

    // Parity: orbit size mod 2 unless explicitly overridden.
    rd.parity.assign(n, 0);
    for (int i = 0; i < n; ++i) rd.parity[i] = int(rd.sym[i] % 2);
    for (const auto& [v, p] : in.parity_override) {
        if (v < 0 || v >= nv) throw BadInput("parity override vertex out of range");
        if (p != 0 && p != 1) throw BadInput("parity must be 0 or 1");
        rd.parity[rd.orbit_of_vertex[v]] = p;
    }

    // Labels.
    rd.labels.assign(n, "");
    for (const auto& [label, v] : in.labels) {
        if (v < 0 || v >= nv) throw BadInput("label vertex out of range");
        int o = rd.orbit_of_vertex[v];
        if (!rd.labels[o].empty())
            throw BadInput("orbit carries two labels: " + rd.labels[o] + ", " + label);
        rd.labels[o] = label;
    }
    for (int i = 0; i < n; ++i)
        if (rd.labels[i].empty())
            rd.labels[i] = "v" + std::to_string(rd.reps[i] + 1);

    // Bilinear form values and directed edge-orbit counts.
    rd.pairing.assign(n, std::vector<long>(n, 0));
    rd.dcount.assign(n, std::vector<long>(n, 0));
    std::vector<std::vector<long>> directed(n, std::vector<long>(n, 0));
    for (const auto& [s, t] : in.edges)
        ++directed[rd.orbit_of_vertex[s]][rd.orbit_of_vertex[t]];
    for (int i = 0; i < n; ++i) {
        rd.pairing[i][i] = 2 * rd.sym[i];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            rd.pairing[i][j] = -(directed[i][j] + directed[j][i]);
            long orb = lcm_long(rd.sym[i], rd.sym[j]);
            if (directed[i][j] % orb != 0)
                throw IncompatibleAutomorphism(
                    "edge count between orbits is not a multiple of the orbit size");
            rd.dcount[i][j] = directed[i][j] / orb;
        }
    }

    // Integer matrix from the symmetric form.
    rd.cartan.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rd.pairing[i][j] % rd.sym[i] != 0)
                throw IncompatibleAutomorphism("form value not divisible by symmetrizer");
            rd.cartan[i][j] = rd.pairing[i][j] / rd.sym[i];
        }
    }

    // Symmetrizers must be coprime overall.
    {
        long g = 0;
        for (long s : rd.sym) g = std::gcd(g, s);
        if (g != 1) throw GcdNotOne("orbit sizes share a common factor");
    }

    // Rows attached to odd nodes must be even off the diagonal.
    for (int i = 0; i < n; ++i) {
        if (rd.parity[i] != 1) continue;
        for (int j = 0; j < n; ++j)
            if (rd.cartan[i][j] % 2 != 0)
                throw C4Violation("odd node row contains an odd entry");
    }

    // At least one odd node, and parity must match orbit size mod 2.
    {
        bool has_odd = false;
        for (int i = 0; i < n; ++i) {
            if (rd.parity[i] == 1) has_odd = true;
            if (rd.parity[i] != int(rd.sym[i] % 2))
                throw C6Violation("parity does not match orbit size mod 2");
        }
        if (!has_odd) throw C6Violation("no odd node present");
    }

    // An explicit node order, when supplied, permutes the orbit-indexed data.
    if (!in.order.empty()) {
        if (int(in.order.size()) != n)
            throw BadInput("order must list every orbit representative once");
        std::vector<int> at(n, -1);
        std::vector<char> used(n, 0);
        for (int k = 0; k < n; ++k) {
            int v = in.order[k];
            if (v < 0 || v >= nv) throw BadInput("order vertex out of range");
            int o = rd.orbit_of_vertex[v];
            if (rd.reps[o] != v)
                throw BadInput("order entries must be orbit representatives");
            if (used[o]) throw BadInput("order repeats an orbit");
            used[o] = 1;
            at[k] = o;
        }
        RootDatum rr = rd;
        for (int k = 0; k < n; ++k) {
            int o = at[k];
            rr.labels[k] = rd.labels[o];
            rr.reps[k] = rd.reps[o];
            rr.parity[k] = rd.parity[o];
            rr.sym[k] = rd.sym[o];
            for (int l = 0; l < n; ++l) {
                rr.pairing[k][l] = rd.pairing[o][at[l]];
                rr.cartan[k][l] = rd.cartan[o][at[l]];
                rr.dcount[k][l] = rd.dcount[o][at[l]];
            }
        }
        for (int v = 0; v < nv; ++v) {
            int o = rd.orbit_of_vertex[v];
            for (int k = 0; k < n; ++k)
                if (at[k] == o) rr.orbit_of_vertex[v] = k;
        }
        rd = std::move(rr);
    }

    return rd;
}

QConditionReport check_q_conditions(const RootDatum& rd) {
    QConditionReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    const int n = rd.rank;
    for (int i = 0; i < n; ++i) {
        if (!rd.q_poly(i, i).is_zero())
            fail("diagonal entry (" + std::to_string(i) + ") is nonzero");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            SkewBivar qij = rd.q_poly(i, j);
            SkewBivar qji = rd.q_poly(j, i);
            if (qij != qji.swapped())
                fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") is not the variable swap of its transpose");
            if (rd.odd(i) && qij.negated_u() != qij)
                fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") is not even in the first variable");
            if (rd.odd(j) && qij.negated_v() != qij)
                fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") is not even in the second variable");
            long m = rd.m_of(i, j);
            if (rd.dcount[i][j] + rd.dcount[j][i] != -2 * rd.pairing[i][j] / m)
                fail("edge-orbit count identity fails at (" + std::to_string(i) +
                     "," + std::to_string(j) + ")");
        }
    }
    return rep;
}

std::vector<std::vector<int>> enumerate_sequences(const Weight& w) {
    std::vector<int> base;
    for (size_t i = 0; i < w.mult.size(); ++i) {
        if (w.mult[i] < 0) throw BadInput("negative multiplicity in weight");
        for (long k = 0; k < w.mult[i]; ++k) base.push_back(int(i));
    }
    std::vector<std::vector<int>> out;
    if (base.empty()) {
        out.push_back({});
        return out;
    }
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

Weight parse_weight(const RootDatum& rd, const std::string& text) {
    Weight w;
    w.mult.assign(rd.rank, 0);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto pos = item.find(':');
        if (pos == std::string::npos)
            throw BadInput("weight entry must look like label:count, got: " + item);
        std::string label = item.substr(0, pos);
        long count = 0;
        try {
            count = std::stol(item.substr(pos + 1));
        } catch (const std::exception&) {
            throw BadInput("bad count in weight entry: " + item);
        }
        if (count < 0) throw BadInput("negative count in weight entry: " + item);
        w.mult[rd.index_of_label(label)] += count;
    }
    return w;
}

std::vector<Weight> weights_up_to_height(int rank, long max_height) {
    std::vector<Weight> out;
    for (long h = 1; h <= max_height; ++h) {
        Weight w;
        w.mult.assign(rank, 0);
        std::function<void(int, long)> rec = [&](int pos, long left) {
            if (pos == rank - 1) {
                w.mult[pos] = left;
                out.push_back(w);
                return;
            }
            for (long c = 0; c <= left; ++c) {
                w.mult[pos] = c;
                rec(pos + 1, left - c);
            }
        };
        rec(0, h);
    }
    return out;
}

std::string word_str(const RootDatum& rd, const std::vector<int>& word) {
    std::string s = "(";
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += ",";
        s += rd.labels[word[k]];
    }
    s += ")";
    return s;
}

} // namespace qcover
