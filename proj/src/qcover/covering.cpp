#include "covering.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace qcover {

int word_parity(const RootDatum& rd, const Word& w) {
    int p = 0;
    for (int c : w) p ^= rd.parity[c] & 1;
    return p;
}

Weight word_weight(const RootDatum& rd, const Word& w) {
    return rd.weight_of_word(w);
}

FreeElement FreeElement::from_word(const Word& w) {
    FreeElement e;
    e.add(w, PiScalar::one());
    return e;
}

void FreeElement::add(const Word& w, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, PiScalar::zero() - c);
    return r;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    }
    return r;
}

FreeElement FreeElement::scaled(const PiScalar& c) const {
    FreeElement r;
    for (const auto& [w, cc] : terms_) r.add(w, cc * c);
    return r;
}

FreeElement FreeElement::barred() const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.add(w, c.bar());
    return r;
}

Weight FreeElement::weight(const RootDatum& rd) const {
    if (terms_.empty()) throw BadInput("zero element has no weight");
    Weight w = rd.weight_of_word(terms_.begin()->first);
    for (const auto& [word, c] : terms_)
        if (rd.weight_of_word(word) != w)
            throw BadInput("element is not weight-homogeneous");
    return w;
}

std::string FreeElement::str(const RootDatum& rd) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]*" << word_str(rd, w);
    }
    return os.str();
}

void TensorElement::add(const WordPair& wp, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(wp);
    if (it == terms_.end()) {
        terms_.emplace(wp, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [wp, c] : o.terms_) r.add(wp, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [wp, c] : o.terms_) r.add(wp, PiScalar::zero() - c);
    return r;
}

std::string TensorElement::str(const RootDatum& rd) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [wp, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]*" << word_str(rd, wp.first) << "(x)"
           << word_str(rd, wp.second);
    }
    return os.str();
}

TensorElement tensor_product(const RootDatum& rd, const TensorElement& a,
                             const TensorElement& b) {
    TensorElement r;
    for (const auto& [wp1, c1] : a.terms()) {
        for (const auto& [wp2, c2] : b.terms()) {
            // twist from moving wp2.first past wp1.second
            long qexp = 0;
            for (int u : wp1.second)
                for (int v : wp2.first) qexp -= rd.pairing[u][v];
            long piexp =
                long(word_parity(rd, wp1.second)) * word_parity(rd, wp2.first);
            PiScalar c = c1 * c2 * PiScalar::pi_pow(piexp) * PiScalar::q_pow(qexp);
            Word left = wp1.first;
            left.insert(left.end(), wp2.first.begin(), wp2.first.end());
            Word right = wp1.second;
            right.insert(right.end(), wp2.second.begin(), wp2.second.end());
            r.add({left, right}, c);
        }
    }
    return r;
}

TensorElement tensor_simple(const FreeElement& a, const FreeElement& b) {
    TensorElement r;
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) r.add({w1, w2}, c1 * c2);
    return r;
}

TensorElement coproduct(const RootDatum& rd, const FreeElement& x) {
    TensorElement out;
    for (const auto& [word, coeff] : x.terms()) {
        // expand the product of (theta (x) 1 + 1 (x) theta) letter by letter
        TensorElement acc;
        acc.add({Word{}, Word{}}, coeff);
        for (int letter : word) {
            TensorElement next;
            for (const auto& [wp, c] : acc.terms()) {
                // letter goes into the first slot: twist past the second slot
                long qexp = 0;
                for (int u : wp.second) qexp -= rd.pairing[u][letter];
                long piexp =
                    long(word_parity(rd, wp.second)) * rd.parity[letter];
                Word left = wp.first;
                left.push_back(letter);
                next.add({left, wp.second},
                         c * PiScalar::pi_pow(piexp) * PiScalar::q_pow(qexp));
                // letter goes into the second slot: no twist
                Word right = wp.second;
                right.push_back(letter);
                next.add({wp.first, right}, c);
            }
            acc = next;
        }
        out = out + acc;
    }
    return out;
}

PiScalar CoveringForm::generator_pair(int i) const {
    PiScalar d = PiScalar::one() -
                 PiScalar::pi_pow(rd_.parity[i]) * PiScalar::q_pow(2 * rd_.sym[i]);
    return d.inverse();
}

PiScalar CoveringForm::words(const Word& x, const Word& y) {
    if (x.size() != y.size()) return PiScalar::zero();
    if (x.empty()) return PiScalar::one();
    if (!(rd_.weight_of_word(x) == rd_.weight_of_word(y))) return PiScalar::zero();
    WordPair key{x, y};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const int j = y.front();
    Word rest(y.begin() + 1, y.end());
    PiScalar total = PiScalar::zero();
    long prefix_pair = 0; // (wt(x_1..x_{k-1}), wt_j)
    int prefix_par = 0;
    for (size_t k = 0; k < x.size(); ++k) {
        if (x[k] == j) {
            Word reduced;
            reduced.reserve(x.size() - 1);
            reduced.insert(reduced.end(), x.begin(), x.begin() + k);
            reduced.insert(reduced.end(), x.begin() + k + 1, x.end());
            PiScalar c = PiScalar::pi_pow(long(prefix_par) * rd_.parity[j]) *
                         PiScalar::q_pow(-prefix_pair) * generator_pair(j) *
                         words(reduced, rest);
            total = total + c;
        }
        prefix_pair += rd_.pairing[x[k]][j];
        prefix_par ^= rd_.parity[x[k]] & 1;
    }
    cache_.emplace(std::move(key), total);
    return total;
}

PiScalar CoveringForm::elements(const FreeElement& a, const FreeElement& b) {
    PiScalar total = PiScalar::zero();
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            if (x.size() != y.size()) continue;
            PiScalar v = words(x, y);
            if (!v.is_zero()) total = total + cx * cy * v;
        }
    return total;
}

PiScalar CoveringForm::tensor_elements(const TensorElement& a,
                                       const TensorElement& b) {
    PiScalar total = PiScalar::zero();
    for (const auto& [wp1, c1] : a.terms())
        for (const auto& [wp2, c2] : b.terms()) {
            if (wp1.first.size() != wp2.first.size() ||
                wp1.second.size() != wp2.second.size())
                continue;
            PiScalar v = words(wp1.first, wp2.first);
            if (v.is_zero()) continue;
            PiScalar w = words(wp1.second, wp2.second);
            if (w.is_zero()) continue;
            total = total + c1 * c2 * v * w;
        }
    return total;
}

FreeElement divided_word(const RootDatum& rd, int i, int a) {
    if (a < 0) throw BadInput("negative divided power");
    Word w(size_t(a), i);
    PiScalar fact = quantum_factorial(a, rd.sym[i], rd.parity[i]);
    FreeElement e;
    e.add(w, fact.inverse());
    return e;
}

long serre_sign_exponent(const RootDatum& rd, int k, int i, int j) {
    return long(k) * rd.parity[i] * rd.parity[j] +
           (long(k) * (k - 1) / 2) * rd.parity[i];
}

FreeElement serre_element(const RootDatum& rd, int i, int j) {
    if (i == j) throw BadInput("need two distinct nodes");
    long n = 1 - rd.cartan[i][j];
    FreeElement total;
    FreeElement thj = FreeElement::from_word(Word{j});
    for (long a2 = 0; a2 <= n; ++a2) {
        long a = n - a2;
        PiScalar c = PiScalar::pi_pow(serre_sign_exponent(rd, int(a2), i, j));
        if (a2 % 2 != 0) c = PiScalar::zero() - c;
        total = total +
                (divided_word(rd, i, int(a)) * thj * divided_word(rd, i, int(a2)))
                    .scaled(c);
    }
    return total;
}

PiScalar divided_self_pair_closed(const RootDatum& rd, int i, int a) {
    PiScalar prod = PiScalar::pi_pow(rd.parity[i] * choose2(a));
    for (int s = 1; s <= a; ++s) {
        PiScalar d = PiScalar::one() - PiScalar::pi_pow(long(rd.parity[i]) * s) *
                                           PiScalar::q_pow(2 * rd.sym[i] * s);
        prod = prod * d.inverse();
    }
    return prod;
}

TensorElement divided_coproduct_closed(const RootDatum& rd, int i, int a) {
    TensorElement out;
    for (int t = 0; t <= a; ++t) {
        int t2 = a - t;
        // (sign_i q_i)^{-t t2}
        long e = long(t) * t2;
        PiScalar c = PiScalar::pi_pow(long(rd.parity[i]) * e) *
                     PiScalar::q_pow(-rd.sym[i] * e);
        TensorElement term =
            tensor_simple(divided_word(rd, i, t), divided_word(rd, i, t2));
        for (const auto& [wp, cc] : term.terms()) out.add(wp, cc * c);
    }
    return out;
}

PiScalar sandwich_pair_closed(const RootDatum& rd, int i, int j, int a, int a2,
                              int b, int b2) {
    if (!rd.odd(i)) throw BadInput("closed form needs an odd first node");
    if (a < 0 || a2 < 0 || b < 0 || b2 < 0) throw BadInput("negative exponent");
    const int n = a + a2;
    if (b + b2 != n) throw BadInput("mismatched total exponents");

    const long si = rd.sym[i];
    const long pj = rd.parity[j];
    const long aij = rd.cartan[i][j];

    PiScalar denom_base = PiScalar::pi() * PiScalar::q_pow(si) - PiScalar::q_pow(-si);
    PiScalar denom_fixed =
        (PiScalar::one() - PiScalar::pi_pow(pj) * PiScalar::q_pow(2 * rd.sym[j]))
            .inverse() *
        denom_base.pow(n).inverse();

    PiScalar total = PiScalar::zero();
    for (int t = 0; t <= std::min(a, b); ++t) {
        int s = b - t;
        int t2 = a - t;
        int s2 = a2 - s;
        if (t2 < 0 || s2 < 0 || t2 + s2 != b2) continue;
        long spade = (long(s) * (s - 1) + long(s2) * (s2 - 1) + long(t) * (t - 1) +
                      long(t2) * (t2 - 1)) /
                     2;
        long club = long(s) * s2 + long(t) * t2 + long(t) * s + long(t2) * s2 +
                    2L * t2 * s + (spade + n) + (long(t2) + s) * aij;
        long heart = long(s) * s2 + long(t) * t2 + long(t) * s + long(t2) * s2 +
                     long(t2) * s + (long(s) + t2) * pj + spade;
        PiScalar numer = PiScalar::pi_pow(heart) * PiScalar::q_pow(-club * si);
        if (n % 2 != 0) numer = PiScalar::zero() - numer;
        PiScalar fact = quantum_factorial(s, si, 1) * quantum_factorial(s2, si, 1) *
                        quantum_factorial(t, si, 1) * quantum_factorial(t2, si, 1);
        total = total + numer * fact.inverse();
    }
    return total * denom_fixed;
}

std::vector<std::vector<PiScalar>> gram_matrix(CoveringForm& form, const Weight& w) {
    auto words = enumerate_sequences(w);
    const size_t n = words.size();
    std::vector<std::vector<PiScalar>> g(n, std::vector<PiScalar>(n, PiScalar::zero()));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) g[r][c] = form.words(words[r], words[c]);
    return g;
}

GramRank radical_rank(CoveringForm& form, const Weight& w) {
    auto g = gram_matrix(form, w);
    GramRank out;
    out.dim = long(g.size());
    std::vector<std::vector<RatFunc>> plus(g.size()), minus(g.size());
    for (size_t r = 0; r < g.size(); ++r) {
        plus[r].reserve(g.size());
        minus[r].reserve(g.size());
        for (size_t c = 0; c < g.size(); ++c) {
            plus[r].push_back(g[r][c].plus);
            minus[r].push_back(g[r][c].minus);
        }
    }
    out.rank_plus = rank_ratfunc(plus);
    out.rank_minus = rank_ratfunc(minus);
    return out;
}

bool in_radical(CoveringForm& form, const FreeElement& x) {
    if (x.is_zero()) return true;
    Weight w = x.weight(form.datum());
    for (const auto& word : enumerate_sequences(w)) {
        PiScalar v = form.elements(x, FreeElement::from_word(word));
        if (!v.is_zero()) return false;
    }
    return true;
}

} // namespace qcover
