#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srho/graph.hpp"

namespace srho {

enum class Family {
    path,                  // path(n)                 n >= 1
    cycle,                 // cycle(n)                n >= 3
    complete,              // complete(n)             n >= 1
    complete_bipartite,    // kbip(a,b)               a,b >= 1
    complete_multipartite, // multipartite(a1,..,ar)  r >= 1, ai >= 1
    turan,                 // turan(n,r)              n >= r >= 1
    ka_n_p,                // kanp(n,p)               n >= 3, 0 <= p <= n-1
    caterpillar,           // cat(a1,..,at)           t >= 1, ai >= 0 pendants on spine vertex i
    petersen,              // petersen
    empty,                 // empty(n)                n >= 0
    disjoint_union,        // union(spec,spec,...)
    hypercube,             // cube(d)                 d >= 0
    circulant,             // circulant(n,s1,..)      n >= 1, 1 <= si <= n/2
};

struct FamilySpec {
    Family family = Family::empty;
    std::vector<int> params;
    std::vector<FamilySpec> components;  // disjoint_union only

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Canonical labeled member of the family. Throws ParameterError naming the
/// violated bound when the parameters are out of domain.
Graph build(const FamilySpec& spec);

/// Parses the compact text form, e.g. "turan(8,3)", "kanp(6,2)", "cat(4,3,4)",
/// "union(cycle(3),cycle(3))". Throws ParseError.
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family.
std::string to_string(const FamilySpec& spec);

// Shorthands used throughout tests and the theorem suite.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
Graph turan_graph(std::size_t n, std::size_t r);
Graph ka_graph(std::size_t n, std::size_t p);
Graph caterpillar(const std::vector<std::size_t>& pendants);
Graph petersen_graph();
Graph empty_graph(std::size_t n);
Graph hypercube(std::size_t d);
Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps);

}  // namespace srho
