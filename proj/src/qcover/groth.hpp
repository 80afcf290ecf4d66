#pragma once

#include "covering.hpp"
#include "pi_series.hpp"
#include "polyrep.hpp"
#include "rootdata.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcover {

// Symbol for a projective class: a base sequence, a grouping of the sequence
// into constant blocks (divided powers), and an accumulated grading shift.
// The grouping carries its own implicit shift -- see class_shift below -- on
// top of the explicit (qshift, pishift) pair.
struct ProjClass {
    Word ui;                 // base sequence of node indices
    std::vector<int> uk;     // block sizes; sums to ui.size()
    int qshift = 0;          // explicit extra grading shift
    int pishift = 0;         // explicit extra parity shift (0/1)
};

// Plain class of a word (all blocks of size one, no shift).
ProjClass proj_class(const Word& ui);

// Class with the given grouping; throws BadInput if the blocks do not cover
// the word or a block mixes two letters.
ProjClass grouped_class(const Word& ui, const std::vector<int>& uk);

// Class with the maximal-run grouping of the word.
ProjClass run_grouped_class(const Word& ui);

// Sum of (block size choose 2) over the blocks.
long grouping_choose2(const ProjClass& x);

// Sum of the block letters' parities.
int grouping_parity(const RootDatum& rd, const ProjClass& x);

// The implicit shift carried by the grouping: grading -choose2 and parity
// parity*choose2.  Returned as (q exponent, parity bit).
std::pair<int, int> class_shift(const RootDatum& rd, const ProjClass& x);

// Duality on the shift bookkeeping: a grading shift by a becomes a shift by
// -a together with a parity shift by a, matching the bar involution of the
// scalar q^a.
ProjClass dual_class(const ProjClass& x);

// Concatenation of base sequences and groupings; shifts add.
ProjClass induce_class(const ProjClass& x, const ProjClass& y);

// Bilinear pairing of two classes of equal weight (throws WeightMismatch
// otherwise): a sum over all permutations carrying one base sequence to the
// other, weighted by the exact degree and parity of the corresponding
// crossing element, divided by the factorials of the block sizes, times the
// one-variable tails and the shifts of both sides.
PiScalar proj_pairing(const RootDatum& rd, const ProjClass& x, const ProjClass& y);

struct GammaReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> mismatches;
};

// For every pair of words of the given weight, compares the free-algebra
// form with proj_pairing; both computations are exact and must agree.
GammaReport gamma_check(const RootDatum& rd, const Weight& w);

struct RestrictSummand {
    Word ui, uj;
    long qshift = 0;
    int pishift = 0;
};

// Two-block restriction of the class of a word: one summand per minimal
// coset representative that shuffles the word into the given weight split,
// with the shift read off the crossing element.
std::vector<RestrictSummand> restrict_decomposition(const RootDatum& rd,
                                                    const Word& uk,
                                                    const Weight& mu,
                                                    const Weight& nu);

// Pairing of a restricted class against a split pair of word classes, using
// the product form on the two tensor factors.  Used to cross-check the
// pairing against restrict_decomposition.
PiScalar restricted_pairing(const RootDatum& rd, const Word& x, const Word& y,
                            const Word& yprime);

// Graded character: one truncated series per component word.
struct CharSeries {
    int order = 0;
    std::map<Word, PiSeries> comps;

    PiSeries at(const Word& c) const;
    void add_term(const Word& c, const PiSeries& s);
    CharSeries operator+(const CharSeries& o) const;
    CharSeries operator-(const CharSeries& o) const;
    CharSeries scaled(long pipow, int qexp, const Rat& coeff = Rat(1)) const;
    bool is_zero() const;
    bool operator==(const CharSeries& o) const;
    bool operator!=(const CharSeries& o) const { return !(*this == o); }
    std::string str(const RootDatum& rd) const;
};

// Character of the projective class attached to (ui, grouping): for each
// component word, the exact rank per (degree, parity) slice of right
// multiplication by the block idempotent, computed in the faithful
// polynomial action.  Throws TruncationTooSmall if the order cuts below the
// lowest graded piece.
CharSeries idempotent_char(const RootDatum& rd, const Word& ui,
                           const std::vector<int>& uk, int order, int jobs = 1);

// The same series computed from the pairing closed form; the dual route used
// by tests to validate the rank pipeline.
CharSeries idempotent_char_closed(const RootDatum& rd, const Word& ui,
                                  const std::vector<int>& uk, int order);

struct CatSerreReport {
    bool ok = true;
    bool boundary = true;
    bool interior = true;
    bool chain = true;
    bool parity = true;
    bool character = true;
    long checks = 0;
    // the verified scalars: both boundary compositions, the relative sign
    // combining the two interior compositions, and the per-class interior
    // constants (indexed by k-1 for the interior classes k = 1..n-2)
    int boundary_first = 0;
    int boundary_last = 0;
    int interior_combination = 0;
    std::vector<int> interior_signs;
    std::vector<std::string> failures;
    std::string witness;
};

// Verifies the split-sequence identities between the neighbour classes of
// weight (1 - a_ij) alpha_i + alpha_j: boundary and interior compositions of
// the crossing maps, the chain property, the parity of the maps, and the
// alternating character identity.
CatSerreReport categorical_serre(const RootDatum& rd, int i, int j,
                                 long degree_cap, int jobs = 1);

struct TypeMReport {
    bool ok = true;
    long dim = 0;
    long rank_plus = 0;
    long rank_minus = 0;
};

// Numerical shadow of the type-M property: the radical ranks of the word
// Gram matrix agree at the two specializations of the sign parameter.
TypeMReport type_m_check(CoveringForm& form, const Weight& w);

} // namespace qcover
