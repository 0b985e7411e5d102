#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srho/graph.hpp"
#include "srho/report.hpp"

namespace srho {

/// Iterated line graphs above this order are not built by the suite; the
/// report is marked truncated instead.
inline constexpr std::size_t kSuiteOrderCap = 400;

/// Energy residuals are compared against this factor times the order.
inline constexpr double kEnergyTolerancePerVertex = 1e-6;

/// Printed precision of the Turan signless spectra.
inline constexpr double kPrintedTolerance = 5e-4;

TheoremReport check_iterated_rho_edge_degree(const Graph& g, std::size_t k_max);
TheoremReport check_iterated_rho_min_degree(const Graph& g, std::size_t k_max);

/// `extra_edges` are added to the join itself; the line graph of the larger
/// graph must keep property rho with energy 4(m' - n).
TheoremReport check_hjoin_line_rho(const Graph& pattern, const std::vector<Graph>& parts, std::size_t k_max,
                                   std::span<const Edge> extra_edges = {});

/// delete_count s = 1 removes one vertex; s >= 2 removes 2(s-1) vertices,
/// lowest ids first, taken from the parts in turn.
TheoremReport check_vertex_deletion_rho(const Graph& pattern, const std::vector<Graph>& parts,
                                        std::size_t delete_count, std::size_t k_max);

TheoremReport check_path_join_rho(std::size_t n, std::size_t m, std::size_t k_max);
TheoremReport check_kan_rho(std::size_t n, std::size_t p, std::size_t k_max);
TheoremReport check_min_deg4_rho(const Graph& g, std::size_t k_max);
TheoremReport check_das_iterated(const Graph& g, std::size_t k_max);

/// Also compares the four exceptional pairs (3,6), (3,7), (3,8), (4,5) with
/// their printed signless spectra.
TheoremReport check_turan_rho(std::size_t r, std::size_t n, std::size_t k_max);

TheoremReport check_regular_complement_rho(const Graph& g, std::size_t k_max);
TheoremReport check_complement_line_regular_rho(const Graph& g, std::size_t k_max);
TheoremReport check_hyperenergetic_iterated(const Graph& g, std::size_t k_max);

/// Levels whose line graph lacks property rho with -2 multiplicity
/// m_{k-1} - n_{k-1} are skipped; the hypothesis holds when some level qualifies.
TheoremReport check_complement_structure(const Graph& g, std::size_t k_max);

/// `family` lists further graphs for the spectral-radius criterion; pairs
/// with equal (n_{k-1}, m_{k-1}) are compared.
TheoremReport check_equienergetic_complement_iff(const Graph& g, std::size_t k,
                                                 std::span<const Graph> family = {});

TheoremReport check_complement_hyperenergetic(const Graph& g, std::size_t k_max);
TheoremReport check_ebd_energies(const Graph& g, std::size_t k);

/// Needs L^k(g) to have property rho (non-vacuously).
TheoremReport check_independence_bounds(const Graph& g, std::size_t k);

/// Graphs with equal (n_{k-1}, m_{k-1}) whose level-k line graphs qualify must have
/// equal level-k energies.
TheoremReport check_equienergetic_family(std::span<const Graph> graphs, std::size_t k);

/// Exact and symmetric quotient spectra over a seeded random join corpus.
TheoremReport check_quotient_spectral_equality(std::size_t count, std::uint64_t seed);

/// Assembled against direct signless spectrum of pattern[parts].
TheoremReport check_hjoin_signless_assembly(const Graph& pattern, const std::vector<Graph>& parts);

/// K2[K2,H1] against K2[K2,H2]: same quotient, different spectra, equal
/// line-graph and complement-of-line-graph energies.
TheoremReport check_join_equienergetic_pair(const Graph& h1, const Graph& h2);

/// Thirteen line-rho graphs up to order 6 and the order-7 connected-complement witness.
TheoremReport check_line_rho_census();

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t threads = 1;
};

struct SuiteOperation {
    std::string id;
    std::string summary;
    std::function<std::vector<TheoremReport>(const SuiteOptions&)> run_default;
    /// Present for operations that take a single graph and a level.
    std::function<TheoremReport(const Graph&, std::size_t)> run_on;
};

/// Every suite operation, in report order.
const std::vector<SuiteOperation>& suite_operations();

const SuiteOperation* find_operation(const std::string& id);

/// Runs the named operations (all when `ids` is empty) over their default
/// corpora; reports come back in registry order regardless of threads.
/// Throws ParameterError for an unknown id.
std::vector<TheoremReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options = {});

/// Default depth: 2 for roots of order <= 12, 1 otherwise.
std::size_t default_depth(const Graph& g);

}  // namespace srho
