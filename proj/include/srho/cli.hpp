#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "srho/graph.hpp"
#include "srho/report.hpp"

namespace srho::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs `spectra-rho` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A family spec ("turan(6,3)") or a graph6 string. Throws ParseError naming
/// the text when neither reading applies.
Graph read_graph(const std::string& text);

/// One graph per non-empty line; lines starting with '#' are skipped.
std::vector<Graph> read_graph_file(const std::string& path);

/// "0,1|2,3" -> {{0,1},{2,3}}.
Partition parse_partition(const std::string& text);

/// Suite operations reachable from `verify --check`.
const std::vector<std::string>& verify_bindings();

/// Built-in table of regular graphs of order <= 10.
struct RegularEntry {
    Graph graph;
    std::size_t degree = 0;
};
const std::vector<RegularEntry>& regular_graph_table();

struct EquiPair {
    Graph first;   // K2[K2,H1]
    Graph second;  // K2[K2,H2]
    Graph part_first;
    Graph part_second;
    TheoremReport certificate;
};

/// First certified pair of non-cospectral (order, degree)-regular parts in
/// the table. Throws AvailabilityError listing the supported pairs otherwise.
EquiPair equi_pair(std::size_t order, std::size_t degree);

/// (order, degree) combinations for which equi_pair succeeds.
std::vector<std::pair<std::size_t, std::size_t>> supported_equi_pairs();

}  // namespace srho::cli
