#include "srho/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "srho/errors.hpp"
#include "srho/families.hpp"
#include "srho/graph6.hpp"
#include "srho/spectral.hpp"
#include "srho/structure.hpp"
#include "srho/transforms.hpp"

namespace srho {

namespace {

using Rows = std::vector<std::uint64_t>;

bool row_bit(const Rows& rows, std::size_t i, std::size_t j) { return (rows[i] >> j) & 1u; }

Rows rows_of(const Graph& g) {
    Rows rows(g.order(), 0);
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j)) rows[i] |= std::uint64_t{1} << j;
    return rows;
}

// Stable colour refinement started from degrees; colours are ranks of
// isomorphism-invariant signatures, so the ordered cells are invariant too.
std::vector<std::size_t> refine_colors(const Rows& rows) {
    const std::size_t n = rows.size();
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) sig[v].first = static_cast<std::size_t>(std::popcount(rows[v]));

    std::vector<std::size_t> color(n);
    std::size_t classes = 0;
    while (true) {
        std::vector<Signature> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (distinct.size() == classes) break;
        classes = distinct.size();
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            sig[v].second.clear();
            for (std::size_t u = 0; u < n; ++u)
                if (row_bit(rows, v, u)) sig[v].second.push_back(color[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
    }
    return color;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Rows& rows) : rows_(rows), n_(rows.size()) {
        const std::vector<std::size_t> color = refine_colors(rows_);
        std::size_t classes = n_ == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        members_.assign(classes, {});
        for (std::size_t v = 0; v < n_; ++v) members_[color[v]].push_back(v);
        for (std::size_t c = 0; c < classes; ++c)
            cell_at_.insert(cell_at_.end(), members_[c].size(), c);
        const std::size_t bits = n_ * (n_ == 0 ? 0 : n_ - 1) / 2;
        current_.assign(bits, 0);
        perm_.assign(n_, 0);
        used_.assign(n_, false);
        descend(0);
    }

    const std::vector<std::size_t>& labeling() const { return best_perm_; }
    const std::vector<std::uint8_t>& bits() const { return best_; }

private:
    void descend(std::size_t p) {
        if (p == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        const std::size_t offset = p * (p == 0 ? 0 : p - 1) / 2;
        const std::size_t end = offset + p;
        for (std::size_t v : members_[cell_at_[p]]) {
            if (used_[v]) continue;
            for (std::size_t i = 0; i < p; ++i) current_[offset + i] = row_bit(rows_, perm_[i], v);
            if (have_best_ && std::lexicographical_compare(best_.begin(), best_.begin() + end,
                                                            current_.begin(), current_.begin() + end))
                continue;
            used_[v] = true;
            perm_[p] = v;
            descend(p + 1);
            used_[v] = false;
        }
    }

    const Rows& rows_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> cell_at_;
    std::vector<std::uint8_t> current_;
    std::vector<std::uint8_t> best_;
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> best_perm_;
    std::vector<bool> used_;
    bool have_best_ = false;
};

std::string encode_short(std::size_t n, const std::vector<std::uint8_t>& bits) {
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            value <<= 1;
            if (k + b < bits.size()) value |= bits[k + b];
        }
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

void check_canonical_cap(const Graph& g) {
    if (g.order() > kCanonicalFormCap)
        throw SizeError("canonical form limited to order " + std::to_string(kCanonicalFormCap) +
                        ", got " + std::to_string(g.order()));
}

bool rows_connected(const Rows& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return true;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

std::vector<std::string> enumerate_shard(std::size_t n, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    std::vector<std::string> codes;
    Rows rows(n);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        for (std::uint64_t b = mask; b; b &= b - 1) {
            const auto& [i, j] = pairs[static_cast<std::size_t>(std::countr_zero(b))];
            rows[i] |= std::uint64_t{1} << j;
            rows[j] |= std::uint64_t{1} << i;
        }
        // Each class has a labeling with degrees non-decreasing by label.
        bool sorted = true;
        for (std::size_t v = 1; v < n && sorted; ++v)
            sorted = std::popcount(rows[v - 1]) <= std::popcount(rows[v]);
        if (!sorted || !rows_connected(rows)) continue;
        CanonicalSearch search(rows);
        codes.push_back(encode_short(n, search.bits()));
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
    check_canonical_cap(g);
    const Rows rows = rows_of(g);
    CanonicalSearch search(rows);
    return search.labeling();
}

CanonicalForm canonical_form(const Graph& g) {
    check_canonical_cap(g);
    const Rows rows = rows_of(g);
    CanonicalSearch search(rows);
    return {encode_short(g.order(), search.bits())};
}

std::size_t census_threads() {
    if (const char* env = std::getenv("SRHO_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t shards) {
    if (n < 1 || n > kMaxCensusOrder)
        throw SizeError("enumeration supports orders 1.." + std::to_string(kMaxCensusOrder) + ", got " +
                        std::to_string(n));
    if (shards == 0) shards = census_threads();
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    shards = static_cast<std::size_t>(std::min<std::uint64_t>(shards, total));

    std::vector<std::vector<std::string>> results(shards);
    std::vector<std::thread> workers;
    for (std::size_t s = 0; s < shards; ++s) {
        const std::uint64_t begin = total * s / shards;
        const std::uint64_t end = total * (s + 1) / shards;
        workers.emplace_back([&results, s, n, begin, end] { results[s] = enumerate_shard(n, begin, end); });
    }
    for (auto& w : workers) w.join();

    std::vector<std::string> codes;
    for (auto& r : results) codes.insert(codes.end(), r.begin(), r.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& code : codes) out.push_back(from_graph6(code).renamed(code));
    return out;
}

bool has_line_rho(const Graph& g) {
    const RhoVerdict v = check_rho(line_graph(g));
    return v.holds && !v.vacuous;
}

std::vector<Graph> line_rho_graphs_of_order(std::size_t n) {
    std::vector<Graph> out;
    for (auto& g : enumerate_connected(n))
        if (has_line_rho(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> find_line_rho_graphs(std::size_t n_max) {
    if (n_max > kMaxCensusOrder)
        throw SizeError("census supports orders up to " + std::to_string(kMaxCensusOrder));
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto level = line_rho_graphs_of_order(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> named_line_rho_graphs() {
    return {
        {"C4", cycle_graph(4)},
        {"K4", complete_graph(4)},
        {"K3,2", complete_bipartite(3, 2)},
        {"K5", complete_graph(5)},
        {"K4,2", complete_bipartite(4, 2)},
        {"K3,3", complete_bipartite(3, 3)},
        {"K6", complete_graph(6)},
    };
}

std::vector<NamedMatch> named_matches(const std::vector<Graph>& graphs) {
    std::vector<CanonicalForm> forms;
    for (const auto& g : graphs)
        if (g.order() <= kCanonicalFormCap) forms.push_back(canonical_form(g));
    std::vector<NamedMatch> out;
    for (const auto& [name, g] : named_line_rho_graphs()) {
        NamedMatch m{name, canonical_form(g).code, false};
        m.found = std::find(forms.begin(), forms.end(), CanonicalForm{m.code}) != forms.end();
        out.push_back(std::move(m));
    }
    return out;
}

ComplementWitnesses min_order_connected_complement(std::size_t n_max) {
    ComplementWitnesses out;
    for (std::size_t n = 1; n <= std::min(n_max, kMaxCensusOrder); ++n) {
        for (auto& g : line_rho_graphs_of_order(n))
            if (is_connected(complement(g))) out.witnesses.push_back(std::move(g));
        if (!out.witnesses.empty()) {
            out.order = n;
            break;
        }
    }
    return out;
}

}  // namespace srho
