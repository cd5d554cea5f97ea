#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/complex.hpp"
#include "theta/cone.hpp"
#include "theta/linalg.hpp"

namespace theta {

// A four-pointed genus-0 family of tropical maps into a cone complex,
// parameterized over a free base monoid with named coordinates.
//
// Global target coordinates are the divisor labels of the complex, in the
// order of ConeComplex::divisors.  Vertex maps are matrices
// (divisors x base_rank); edge lengths, and the optional constraint
// functional delta, live in the base (vectors of length base_rank).

struct TropVertex {
    std::string name;
    std::string bsigma; // stratum id of the target cone
};

struct TropEdgeData {
    std::string name;
    std::string src, dst;
    std::string bsigma; // stratum id containing both endpoint strata
    Vec u;              // contact direction, oriented src -> dst, divisor coords
};

struct TropLeg {
    std::string label; // "x1", "x2", "x3", "out", or a free name
    std::string vertex;
    std::string bsigma;
    Vec u;              // divisor coords; equals -r for the out leg
    bool bounded = false;
};

struct TropFamily {
    ConeComplex complex;
    std::vector<TropVertex> vertices;
    std::vector<TropEdgeData> edges;
    std::vector<TropLeg> legs;
    std::vector<std::string> base_gens;   // base coordinate names
    std::map<std::string, Mat> nu;        // vertex name -> divisors x rank matrix
    std::map<std::string, Vec> lengths;   // edge name -> base vector, nonzero
    std::optional<Vec> delta;             // base vector
    std::optional<Vec> r;                 // divisor coords of the constraint point

    size_t base_rank() const { return base_gens.size(); }
    const TropVertex& vertex(const std::string& name) const;
    const TropEdgeData& edge(const std::string& name) const;
    const TropLeg& leg_by_label(const std::string& label) const;
};

struct TropValidation {
    bool ok = true;
    std::vector<std::string> errors;
};

TropValidation validate_family(const TropFamily& fam);

// Minimal connected subgraph containing all legs: vertex and edge names.
struct Spine {
    std::vector<std::string> vertices;
    std::vector<std::string> edges;
};
Spine spine(const TropFamily& fam);

enum class BoundaryClass {
    Interior,
    D_x1x2_x3out,
    D_x2x3_x1out,
    D_x1x3_x2out,
    D_x1x2x3_out,
};
std::string boundary_class_name(BoundaryClass c);
BoundaryClass boundary_class(const TropFamily& fam);

// The chain between the two topological junctions of the spine, oriented
// from the junction on the (x_k, out) side toward the junction carrying the
// remaining pair of legs.  Only defined for the two-junction boundary
// classes.
struct SpineChain {
    BoundaryClass cls;
    std::vector<std::string> chain_vertices; // v = first, w = last
    std::vector<std::string> chain_edges;    // chain_edges[i] joins v_{i+1}, v_{i+2}
    // u of chain edge i oriented from chain_vertices[i] to chain_vertices[i+1]
    std::vector<Vec> oriented_u;
};
SpineChain spine_chain(const TropFamily& fam);

bool has_terminal_tail(const TropFamily& fam);

// 1-based chain indices of the edges whose length is rationally independent
// of delta.
std::vector<size_t> splitting_edges(const TropFamily& fam);

enum class TailClass { TailFree, Terminal, Internal };
std::string tail_class_name(TailClass c);
TailClass classify_tails(const TropFamily& fam);

// The unique 1-based chain index i such that the oriented contact direction
// of chain edge i is tangent to the linear span of the image of the next
// chain vertex.  Verifies: lengths of edges before i proportional to delta;
// length of edge i independent of delta; oriented u inside the edge's
// assigned cone.  Throws on terminal tails, non-uniqueness, or a failed
// verification.
size_t find_splitting_edge(const TropFamily& fam);

// Solution cone of the family's combinatorial type: variables are the
// vertex positions (coordinates on each vertex's stratum labels), one
// length per edge, and delta, all nonnegative, subject to the edge
// displacement equations and the output constraint when r is present.
struct UniversalCone {
    Cone cone;
    size_t dimension = 0;
    std::vector<std::string> variables; // names, in coordinate order
    bool miniversal = false;            // dimension == base rank
};
UniversalCone universal_cone(const TropFamily& fam);

// Split at chain edge i (1-based).  first: the component carrying the leg
// pair, with a new out-type leg of contact -u_i; second: the component
// carrying (x_k, out), with a new leg of contact +u_i and the original
// constraint data.
struct SplitResult {
    TropFamily first, second;
    std::string new_leg; // label used for the new legs on both sides
    std::string cut_edge;
    Vec s; // oriented contact direction of the cut edge
};
SplitResult split_at_edge(const TropFamily& fam, size_t i);

// Inverse of split_at_edge: identify the two new legs and restore the edge.
TropFamily glue(const SplitResult& split, const Vec& length);

bool families_equal(const TropFamily& a, const TropFamily& b);

} // namespace theta
