#pragma once

#include "pi_scalar.hpp"
#include "rootdata.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcover {

using Word = std::vector<int>;
using WordPair = std::pair<Word, Word>;

int word_parity(const RootDatum& rd, const Word& w);
Weight word_weight(const RootDatum& rd, const Word& w);

// Element of the free algebra on one generator per node, with coefficients
// in the two-component scalar ring.
class FreeElement {
public:
    FreeElement() = default;

    static FreeElement from_word(const Word& w);

    const std::map<Word, PiScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const PiScalar& c);

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator*(const FreeElement& o) const;   // concatenation
    FreeElement scaled(const PiScalar& c) const;
    FreeElement barred() const;                          // bar on coefficients

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    // Weight of a homogeneous element; throws BadInput if terms mix weights.
    Weight weight(const RootDatum& rd) const;

    std::string str(const RootDatum& rd) const;

private:
    std::map<Word, PiScalar> terms_;
};

// Element of the twisted tensor square of the free algebra.
class TensorElement {
public:
    TensorElement() = default;

    const std::map<WordPair, PiScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const WordPair& wp, const PiScalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str(const RootDatum& rd) const;

private:
    std::map<WordPair, PiScalar> terms_;
};

// Multiplication in the tensor square:
//   (x1 (x) x2)(x1' (x) x2')
//     = sign^{p(x2)p(x1')} q^{-(wt(x2), wt(x1'))} x1x1' (x) x2x2'.
TensorElement tensor_product(const RootDatum& rd, const TensorElement& a,
                             const TensorElement& b);

// Plain tensor a (x) b (single product, no twist involved).
TensorElement tensor_simple(const FreeElement& a, const FreeElement& b);

// The algebra map determined by  theta_i |-> theta_i (x) 1 + 1 (x) theta_i.
TensorElement coproduct(const RootDatum& rd, const FreeElement& x);

// The bilinear form determined by
//   (theta_i, theta_j) = delta_ij (1 - sign_i q_i^2)^{-1}
// and adjointness with the coproduct.  Values are memoized per word pair.
class CoveringForm {
public:
    explicit CoveringForm(const RootDatum& rd) : rd_(rd) {}

    const RootDatum& datum() const { return rd_; }

    // (theta_i, theta_i)
    PiScalar generator_pair(int i) const;

    PiScalar words(const Word& x, const Word& y);
    PiScalar elements(const FreeElement& a, const FreeElement& b);
    PiScalar tensor_elements(const TensorElement& a, const TensorElement& b);

private:
    const RootDatum& rd_;
    std::map<WordPair, PiScalar> cache_;
};

// theta_i^a divided by the factorial of a.
FreeElement divided_word(const RootDatum& rd, int i, int a);

// Exponent k p(i) p(j) + (k choose 2) p(i) used in the deformed Serre sum.
long serre_sign_exponent(const RootDatum& rd, int k, int i, int j);

// sum_{a+a'=1-cartan[i][j]} (-1)^{a'} sign^{...} theta_i^(a) theta_j theta_i^(a')
FreeElement serre_element(const RootDatum& rd, int i, int j);

// Closed form for (theta_i^(a), theta_i^(a)).
PiScalar divided_self_pair_closed(const RootDatum& rd, int i, int a);

// Closed form for the coproduct of theta_i^(a).
TensorElement divided_coproduct_closed(const RootDatum& rd, int i, int a);

// Closed form for (theta_i^(a) theta_j theta_i^(a2), theta_i^(b) theta_j theta_i^(b2))
// for an odd node i; requires a + a2 == b + b2.
PiScalar sandwich_pair_closed(const RootDatum& rd, int i, int j, int a, int a2,
                              int b, int b2);

struct GramRank {
    long dim = 0;
    long rank_plus = 0;
    long rank_minus = 0;
};

std::vector<std::vector<PiScalar>> gram_matrix(CoveringForm& form, const Weight& w);
GramRank radical_rank(CoveringForm& form, const Weight& w);

// Whether a homogeneous element pairs to zero with every word of its weight.
bool in_radical(CoveringForm& form, const FreeElement& x);

} // namespace qcover
