#include "fixtures.hpp"

namespace qcover {

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "osp12", "b01", "bn3", "b2aff", "bb", "caff", "aodd2", "a22",
    };
    return names;
}

QuiverDatum builtin_quiver(const std::string& name) {
    QuiverDatum d;
    d.name = name;
    if (name == "osp12") {
        // One vertex, no edges: a single odd node.
        d.num_vertices = 1;
        d.automorphism = {0};
        d.labels = {{"i", 0}};
    } else if (name == "b01") {
        // Path 0 -> 1 <- 2 folded by the flip 0 <-> 2: orbits of sizes (2, 1),
        // entries a_eo = -1, a_oe = -2.
        d.num_vertices = 3;
        d.edges = {{0, 1}, {2, 1}};
        d.automorphism = {2, 1, 0};
        d.labels = {{"even", 0}, {"odd", 1}};
    } else if (name == "bn3") {
        // Five-vertex path 0 -> 1 -> 2 <- 3 <- 4 folded by i <-> 4-i:
        // orbit sizes (2, 2, 1), a double bond into the odd end node.
        d.num_vertices = 5;
        d.edges = {{0, 1}, {1, 2}, {4, 3}, {3, 2}};
        d.automorphism = {4, 3, 2, 1, 0};
        d.labels = {{"a", 0}, {"b", 1}, {"c", 2}};
    } else if (name == "b2aff") {
        // Orbit sizes (1, 2, 4) with two edges 0 -> {1,2} and a four-edge
        // orbit {1,2} -> {3,4,5,6}; the orbit matrix is affine.
        d.num_vertices = 7;
        d.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {1, 5}, {2, 6}};
        d.automorphism = {0, 2, 1, 4, 5, 6, 3};
        d.labels = {{"a", 0}, {"b", 1}, {"c", 3}};
    } else if (name == "bb") {
        // Star on a middle orbit of size 2 with two odd end points; the two
        // end nodes do not interact (a_xz = 0).
        d.num_vertices = 4;
        d.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
        d.automorphism = {0, 2, 1, 3};
        d.labels = {{"x", 0}, {"y", 1}, {"z", 3}};
    } else if (name == "caff") {
        // Four-leaf star folded by swapping leaves pairwise: orbit sizes
        // (2, 2, 1) with both double bonds pointing at the odd centre.
        d.num_vertices = 5;
        d.edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
        d.automorphism = {1, 0, 3, 2, 4};
        d.labels = {{"a", 0}, {"b", 2}, {"c", 4}};
    } else if (name == "aodd2") {
        // Two odd vertices joined by a doubled edge (a_uv = a_vu = -2).
        d.num_vertices = 2;
        d.edges = {{0, 1}, {0, 1}};
        d.automorphism = {0, 1};
        d.labels = {{"u", 0}, {"v", 1}};
    } else if (name == "a22") {
        // A fixed vertex attached to every vertex of a 4-cycle orbit:
        // orbit sizes (1, 4) and entries a_ab = -4, a_ba = -1.
        d.num_vertices = 5;
        d.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
        d.automorphism = {0, 2, 3, 4, 1};
        d.labels = {{"a", 0}, {"b", 1}};
    } else {
        throw BadInput("unknown builtin datum: " + name);
    }
    return d;
}

RootDatum builtin_datum(const std::string& name) {
    return derive_root_datum(builtin_quiver(name));
}

QuiverDatum parity_mismatch_quiver() {
    QuiverDatum d = builtin_quiver("b01");
    d.name = "c6bad";
    d.parity_override = {{1, 0}};  // declare the size-1 orbit even
    return d;
}

QuiverDatum odd_entry_quiver() {
    QuiverDatum d;
    d.name = "c4bad";
    d.num_vertices = 2;
    d.edges = {{0, 1}};  // single bond between two odd nodes: a_01 = -1
    d.automorphism = {0, 1};
    d.labels = {{"u", 0}, {"v", 1}};
    return d;
}

} // namespace qcover
