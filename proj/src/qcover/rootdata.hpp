#pragma once

#include "common.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcover {

// Input description of a directed multigraph together with a vertex
// permutation.  Vertices are 0-based internally; JSON files use 1-based ids
// and are converted by the loader.
struct QuiverDatum {
    std::string name;
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;   // (source, target)
    std::vector<int> automorphism;            // automorphism[v] = image of v
    std::map<std::string, int> labels;        // node label -> any vertex of its orbit
    std::map<int, int> parity_override;       // vertex -> 0/1 (rarely used)
    std::vector<int> order;                   // optional: orbit reps in node order
};

// Polynomial in two variables u, v subject to u*v = sign * v*u with
// sign = +1 or -1.  Terms are kept in the normal form  c * u^a v^b.
class SkewBivar {
public:
    SkewBivar() : sign_(1) {}
    explicit SkewBivar(int commute_sign);

    static SkewBivar monomial(int commute_sign, int ue, int ve, const Rat& c);
    static SkewBivar constant(int commute_sign, const Rat& c);

    int commute_sign() const { return sign_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

    SkewBivar operator+(const SkewBivar& o) const;
    SkewBivar operator-(const SkewBivar& o) const;
    SkewBivar operator*(const SkewBivar& o) const;
    SkewBivar pow(int e) const;

    // Exchange the roles of u and v (staying inside the same ring).
    SkewBivar swapped() const;
    // Substitute u -> -u, respectively v -> -v.
    SkewBivar negated_u() const;
    SkewBivar negated_v() const;

    bool operator==(const SkewBivar& o) const;
    bool operator!=(const SkewBivar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(int ue, int ve, const Rat& c);

    int sign_;
    std::map<std::pair<int, int>, Rat> terms_;
};

// Formal nonnegative integer combination of the simple generators.
struct Weight {
    std::vector<long> mult;

    long height() const;
    bool operator==(const Weight& o) const { return mult == o.mult; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
};

// Symmetrizable integer matrix data derived from a quiver with a compatible
// vertex permutation.  Indices run over vertex orbits, ordered by their
// smallest vertex id.
struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<std::string> labels;            // per orbit
    std::vector<int> reps;                      // smallest vertex id per orbit
    std::vector<int> parity;                    // 0 or 1 per orbit
    std::vector<long> sym;                      // symmetrizers s_i = orbit sizes
    std::vector<std::vector<long>> pairing;     // symmetric bilinear form values
    std::vector<std::vector<long>> cartan;      // cartan[i][j] = pairing[i][j]/sym[i]
    std::vector<std::vector<long>> dcount;      // directed edge-orbit counts
    std::vector<int> orbit_of_vertex;

    bool odd(int i) const { return parity[i] == 1; }
    long m_of(int i, int j) const;              // lcm of the two diagonal values
    int index_of_label(const std::string& label) const;

    // Entries of the defining polynomial matrix and of its triangular variant
    // used by the polynomial action (zero on the diagonal, the defining
    // polynomial below it in index order, one above it).
    SkewBivar q_poly(int i, int j) const;
    SkewBivar p_poly(int i, int j) const;

    long pair_weights(const Weight& a, const Weight& b) const;
    Weight weight_of_word(const std::vector<int>& word) const;
};

// Validates the input and derives the orbit data.  Throws
// IncompatibleAutomorphism, C4Violation, C6Violation, GcdNotOne or BadInput.
RootDatum derive_root_datum(const QuiverDatum& in);

struct QConditionReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks the symmetry/parity identities of the defining polynomial matrix
// together with the edge-orbit count identity.
QConditionReport check_q_conditions(const RootDatum& rd);

// All words with the given content, in lexicographic order.
std::vector<std::vector<int>> enumerate_sequences(const Weight& w);

// All nonzero weights of height at most the bound, ordered by height and then
// lexicographically.
std::vector<Weight> weights_up_to_height(int rank, long max_height);

// Parses "label:count,label:count" against the datum's labels.
Weight parse_weight(const RootDatum& rd, const std::string& text);

std::string word_str(const RootDatum& rd, const std::vector<int>& word);

} // namespace qcover
