#pragma once

#include "covering.hpp"
#include "rootdata.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace qcover {

using ExpVec = std::vector<int>;
using PolyKey = std::pair<Word, ExpVec>;   // (component word, exponent vector)
using MonoPoly = std::map<ExpVec, Rat>;    // polynomial in normal form

// Element of the direct sum over component words of skew polynomial rings:
// variables y_1..y_n, where y_r y_s = (-1)^{p(i_r) p(i_s)} y_s y_r inside the
// component with word (i_1..i_n).  Monomials are kept in the normal form
// y_1^{a_1} ... y_n^{a_n}.
class PolyVector {
public:
    PolyVector() = default;

    static PolyVector unit(const Word& comp, const ExpVec& exps);

    const std::map<PolyKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& comp, const ExpVec& exps, const Rat& c);

    PolyVector operator+(const PolyVector& o) const;
    PolyVector operator-(const PolyVector& o) const;
    PolyVector scaled(const Rat& c) const;

    bool operator==(const PolyVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyVector& o) const { return !(*this == o); }

    std::string str(const RootDatum& rd) const;

private:
    std::map<PolyKey, Rat> terms_;
};

// The ambient space for a fixed weight: one polynomial component per word.
class PolySpace {
public:
    PolySpace(const RootDatum& rd, const Weight& w);

    const RootDatum& datum() const { return rd_; }
    const Weight& weight() const { return w_; }
    int size() const { return n_; }
    const std::vector<Word>& components() const { return comps_; }
    bool has_component(const Word& c) const { return compset_.count(c) != 0; }

    long mono_degree(const Word& comp, const ExpVec& exps) const;
    int mono_parity(const Word& comp, const ExpVec& exps) const;

    // All exponent vectors of a component with degree at most the cap.
    std::vector<ExpVec> exps_up_to(const Word& comp, long degree_cap) const;

private:
    const RootDatum& rd_;
    Weight w_;
    int n_;
    std::vector<Word> comps_;
    std::set<Word> compset_;
};

// Generator actions; positions r are 1-based throughout.
PolyVector apply_e(const PolySpace& sp, const Word& ui, const PolyVector& v);
PolyVector apply_y(const PolySpace& sp, int r, const PolyVector& v);
PolyVector apply_sym(const PolySpace& sp, int k, const PolyVector& v);
PolyVector apply_tau(const PolySpace& sp, int r, const PolyVector& v);

// Left multiplication by a polynomial (exponent vectors over all variables).
PolyVector poly_mul_vector(const PolySpace& sp, const MonoPoly& p,
                           const PolyVector& v);

// Substitute u -> y_{upos}, v -> y_{vpos} into a two-variable skew polynomial,
// normal-ordering the result inside the given component.
MonoPoly subst_bivar(const PolySpace& sp, const Word& comp, const SkewBivar& q,
                     int upos, int vpos);

// ---- permutation utilities (0-based images; word letters are 1-based) ----

std::vector<int> identity_perm(int n);
long perm_length(const std::vector<int>& w);
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> perm_inverse(const std::vector<int>& w);
std::vector<int> longest_perm(int n);
std::vector<std::vector<int>> all_permutations(int n);

// Left action on words: (w . x)[w(k)] = x[k].
Word act_word(const std::vector<int>& w, const Word& x);

// Lexicographically smallest reduced word (letters 1..n-1).
std::vector<int> canonical_reduced_word(std::vector<int> w);

bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w);

// Apply tau_{r_1} tau_{r_2} ... (letters left to right) to a vector.
PolyVector apply_tau_word(const PolySpace& sp, const std::vector<int>& rword,
                          const PolyVector& v);

// Left multiplication by the monomial y^exps.
PolyVector apply_monomial(const PolySpace& sp, const ExpVec& exps,
                          const PolyVector& v);

// Degree, parity and target component of a crossing word applied to a source
// component, walking the word right to left.
struct TauWalk {
    long degree = 0;
    int parity = 0;
    Word target;
};
TauWalk tau_word_walk(const RootDatum& rd, const Word& source,
                      const std::vector<int>& rword);

// ---- verification drivers ----

struct RelationReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> failures;
};

// Checks the full defining relation list (projector relations, straightening
// rules, quadratic and braid rules) on all monomials up to the degree cap.
RelationReport verify_relations(const PolySpace& sp, long degree_cap);

// Checks that the generator substitution
//   e(ui) -> e(reversed ui), y_r -> y_{n+1-r},
//   tau_r -> (component-dependent sign) tau_{n-r}
// again satisfies the defining relations, and squares to the identity.
RelationReport verify_phi(const PolySpace& sp, long degree_cap);

// Checks the order-reversed relation list (the transpose map fixing all
// generators extends to an anti-automorphism).
RelationReport verify_psi(const PolySpace& sp, long degree_cap);

struct PbwReport {
    bool ok = true;
    long count = 0;
    long rank = 0;
};

// Linear independence of { tau_w y^a e(ui) } of operator degree <= cap,
// checked per component via exact operator images.
PbwReport pbw_independence(const PolySpace& sp, long degree_cap);

} // namespace qcover
