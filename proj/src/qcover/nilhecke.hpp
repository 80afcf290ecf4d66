#pragma once

#include "common.hpp"
#include "pi_series.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcover {

using NhExp = std::vector<int>;
using NhPoly = std::map<NhExp, Rat>;  // normal form y_1^{a_1} ... y_n^{a_n}

// Rank-one polynomial calculus: n variables attached to a single node with
// grading step sym (each variable has degree 2*sym) and common parity.  The
// variables commute when the parity is 0 and anticommute when it is 1.
class NilHecke {
public:
    NilHecke(int nvars, int parity, long sym = 1);

    int vars() const { return n_; }
    int node_parity() const { return p_; }
    long node_sym() const { return s_; }

    NhPoly unit() const;
    NhPoly monomial(const NhExp& e, const Rat& c = Rat(1)) const;

    static void add_term(NhPoly& p, const NhExp& e, const Rat& c);
    static NhPoly add(const NhPoly& a, const NhPoly& b);
    static NhPoly sub(const NhPoly& a, const NhPoly& b);
    static NhPoly scaled(const NhPoly& a, const Rat& c);

    NhPoly mul(const NhPoly& a, const NhPoly& b) const;

    // Generator actions; positions are 1-based.
    NhPoly y_mult(int r, const NhPoly& f) const;
    NhPoly del(int r, const NhPoly& f) const;   // divided difference
    NhPoly dem(int r, const NhPoly& f) const;   // Demazure: -del_r (y_r .)

    // Apply an operator word, rightmost letter first.
    NhPoly word_del(const std::vector<int>& w, const NhPoly& f) const;
    NhPoly word_dem(const std::vector<int>& w, const NhPoly& f) const;

    // Rank-one idempotent: Demazure word along the longest element.
    NhPoly idem(const NhPoly& f) const;
    // Same on the k leading (offset 0) or trailing (offset n-k) variables.
    NhPoly idem_block(int k, int offset, const NhPoly& f) const;
    NhPoly word_del_block(int k, int offset, const NhPoly& f) const;

    long degree(const NhExp& e) const;
    int z2_of(const NhExp& e) const;
    std::vector<NhExp> exps_up_to(long degree_cap) const;

    // Fixed reduced word of the longest element: (1..n-1)(1..n-2)...(1).
    static std::vector<int> longest_word(int n);
    // Exponents (n-1, n-2, ..., 1, 0).
    NhExp staircase() const;

    std::string str(const NhPoly& f) const;

private:
    int n_;
    int p_;
    long s_;
};

// Elementary symmetric polynomial of degree k, with alternating signs on the
// index sum in the anticommuting case.
NhPoly elem_sym(const NilHecke& h, int k);

struct NhReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> failures;
    std::string detail;
};

// The two competing routes behind nilhecke_dim_check: the exact basis count
// (crossing word times monomial) per (degree, parity) slice, and the closed
// product formula for the same dimension.
PiSeries nilhecke_count_series(int n, int parity, long sym, int order);
PiScalar nilhecke_closed_dim(int n, int parity, long sym);

// Graded dimension of the whole algebra: exact basis count (crossing word
// times monomial) against the closed product formula, through q-degree
// `order`.
NhReport nilhecke_dim_check(int n, int parity, long sym, int order);

// Graded dimension of the intersection of the divided-difference kernels:
// partition count against the closed form, plus a direct check that the
// elementary polynomials and their products are killed by every del_r.
NhReport lambda_dim_check(int n, int parity, long sym, int order);

// Demazure idempotency and braid identities, the closed form of the
// idempotent as crossing-word-times-staircase, nesting and crossing
// identities, and the annihilator identities; all as exact operator
// statements on monomials up to the degree cap.
NhReport nilhecke_idempotent_suite(int n, int parity, long sym, long degree_cap);

}  // namespace qcover
