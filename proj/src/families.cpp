#include "srho/families.hpp"

#include <cctype>
#include <charconv>

#include "srho/errors.hpp"
#include "srho/transforms.hpp"

namespace srho {

namespace {

struct FamilyName {
    Family family;
    std::string_view text;
};

constexpr FamilyName kNames[] = {
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "kbip"},
    {Family::complete_multipartite, "multipartite"},
    {Family::turan, "turan"},
    {Family::ka_n_p, "kanp"},
    {Family::caterpillar, "cat"},
    {Family::petersen, "petersen"},
    {Family::empty, "empty"},
    {Family::disjoint_union, "union"},
    {Family::hypercube, "cube"},
    {Family::circulant, "circulant"},
};

std::string_view family_text(Family f) {
    for (const auto& e : kNames)
        if (e.family == f) return e.text;
    return "?";
}

[[noreturn]] void domain(const FamilySpec& spec, const std::string& what) {
    throw ParameterError(to_string(spec) + ": " + what);
}

void require_count(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        domain(spec, "expects " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(spec.params.size()));
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return spec;
    }

private:
    FamilySpec parse_spec() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view word = text_.substr(start, pos_ - start);
        if (word.empty()) fail("expected a family name");

        FamilySpec spec;
        bool found = false;
        for (const auto& e : kNames) {
            if (e.text == word) {
                spec.family = e.family;
                found = true;
            }
        }
        if (word == "complete_bipartite") spec.family = Family::complete_bipartite, found = true;
        if (word == "ka_n_p") spec.family = Family::ka_n_p, found = true;
        if (word == "caterpillar") spec.family = Family::caterpillar, found = true;
        if (word == "hypercube") spec.family = Family::hypercube, found = true;
        if (!found) throw ParseError("unknown family '" + std::string(word) + "'");

        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '(') return spec;
        ++pos_;
        skip_ws();
        if (peek() == ')') {
            ++pos_;
            return spec;
        }
        while (true) {
            skip_ws();
            if (spec.family == Family::disjoint_union) {
                spec.components.push_back(parse_spec());
            } else {
                spec.params.push_back(parse_int());
            }
            skip_ws();
            char c = peek();
            ++pos_;
            if (c == ')') break;
            if (c != ',') fail("expected ',' or ')'");
        }
        return spec;
    }

    int parse_int() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_ || start == pos_)
            fail("expected an integer");
        return value;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("family text '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph path_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 1; i < n; ++i) b.add_edge(i - 1, i);
    return std::move(b).build("path(" + std::to_string(n) + ")");
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle(" + std::to_string(n) + "): requires n >= 3");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build("cycle(" + std::to_string(n) + ")");
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw ParameterError("complete(0): requires n >= 1");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build("complete(" + std::to_string(n) + ")");
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    if (parts.empty()) throw ParameterError("multipartite(): requires at least one part");
    std::vector<std::size_t> owner;
    std::string name = "multipartite(";
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw ParameterError("multipartite: part sizes must be >= 1");
        owner.insert(owner.end(), parts[p], p);
        name += (p ? "," : "") + std::to_string(parts[p]);
    }
    GraphBuilder b(owner.size());
    for (std::size_t i = 0; i < owner.size(); ++i)
        for (std::size_t j = i + 1; j < owner.size(); ++j)
            if (owner[i] != owner[j]) b.add_edge(i, j);
    return std::move(b).build(name + ")");
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw ParameterError("kbip: requires a >= 1 and b >= 1");
    return complete_multipartite({a, b})
        .renamed("kbip(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph turan_graph(std::size_t n, std::size_t r) {
    if (r < 1 || n < r)
        throw ParameterError("turan(" + std::to_string(n) + "," + std::to_string(r) +
                             "): requires n >= r >= 1");
    std::vector<std::size_t> parts(r, n / r);
    for (std::size_t i = 0; i < n % r; ++i) ++parts[i];
    return complete_multipartite(parts).renamed("turan(" + std::to_string(n) + "," +
                                                std::to_string(r) + ")");
}

Graph ka_graph(std::size_t n, std::size_t p) {
    std::string name = "kanp(" + std::to_string(n) + "," + std::to_string(p) + ")";
    if (n < 3) throw ParameterError(name + ": requires n >= 3");
    if (p > n - 1) throw ParameterError(name + ": requires p <= n-1");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(i == 0 && j <= p)) b.add_edge(i, j);
    return std::move(b).build(name);
}

Graph caterpillar(const std::vector<std::size_t>& pendants) {
    if (pendants.empty()) throw ParameterError("cat(): requires at least one spine vertex");
    std::size_t t = pendants.size();
    std::size_t n = t;
    for (std::size_t a : pendants) n += a;
    GraphBuilder b(n);
    for (std::size_t i = 1; i < t; ++i) b.add_edge(i - 1, i);
    std::size_t next = t;
    std::string name = "cat(";
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t k = 0; k < pendants[i]; ++k) b.add_edge(i, next++);
        name += (i ? "," : "") + std::to_string(pendants[i]);
    }
    return std::move(b).build(name + ")");
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (std::size_t i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, i + 5);
    }
    return std::move(b).build("petersen");
}

Graph empty_graph(std::size_t n) { return Graph(n, "empty(" + std::to_string(n) + ")"); }

Graph hypercube(std::size_t d) {
    if (d > 12) throw ParameterError("cube(" + std::to_string(d) + "): requires d <= 12");
    std::size_t n = std::size_t{1} << d;
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t j = i ^ (std::size_t{1} << k);
            if (i < j) b.add_edge(i, j);
        }
    return std::move(b).build("cube(" + std::to_string(d) + ")");
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
    std::string name = "circulant(" + std::to_string(n);
    for (std::size_t s : jumps) name += "," + std::to_string(s);
    name += ")";
    if (n < 1) throw ParameterError(name + ": requires n >= 1");
    GraphBuilder b(n);
    for (std::size_t s : jumps) {
        if (s < 1 || 2 * s > n) throw ParameterError(name + ": jumps must satisfy 1 <= s <= n/2");
        for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + s) % n);
    }
    return std::move(b).build(name);
}

Graph build(const FamilySpec& spec) {
    for (int p : spec.params)
        if (p < 0) domain(spec, "parameters must be non-negative");
    const auto& ps = spec.params;
    Graph g;
    switch (spec.family) {
        case Family::path:
            require_count(spec, 1);
            if (ps[0] < 1) domain(spec, "requires n >= 1");
            g = path_graph(as_size(ps[0]));
            break;
        case Family::cycle:
            require_count(spec, 1);
            if (ps[0] < 3) domain(spec, "requires n >= 3");
            g = cycle_graph(as_size(ps[0]));
            break;
        case Family::complete:
            require_count(spec, 1);
            if (ps[0] < 1) domain(spec, "requires n >= 1");
            g = complete_graph(as_size(ps[0]));
            break;
        case Family::complete_bipartite:
            require_count(spec, 2);
            if (ps[0] < 1 || ps[1] < 1) domain(spec, "requires a >= 1 and b >= 1");
            g = complete_bipartite(as_size(ps[0]), as_size(ps[1]));
            break;
        case Family::complete_multipartite: {
            if (ps.empty()) domain(spec, "requires at least one part");
            std::vector<std::size_t> parts;
            for (int p : ps) {
                if (p < 1) domain(spec, "part sizes must be >= 1");
                parts.push_back(as_size(p));
            }
            g = complete_multipartite(parts);
            break;
        }
        case Family::turan:
            require_count(spec, 2);
            if (ps[1] < 1) domain(spec, "requires r >= 1");
            if (ps[0] < ps[1]) domain(spec, "requires n >= r");
            g = turan_graph(as_size(ps[0]), as_size(ps[1]));
            break;
        case Family::ka_n_p:
            require_count(spec, 2);
            if (ps[0] < 3) domain(spec, "requires n >= 3");
            if (ps[1] > ps[0] - 1) domain(spec, "requires p <= n-1");
            g = ka_graph(as_size(ps[0]), as_size(ps[1]));
            break;
        case Family::caterpillar: {
            if (ps.empty()) domain(spec, "requires at least one spine vertex");
            std::vector<std::size_t> pendants(ps.begin(), ps.end());
            g = caterpillar(pendants);
            break;
        }
        case Family::petersen:
            require_count(spec, 0);
            g = petersen_graph();
            break;
        case Family::empty:
            require_count(spec, 1);
            g = empty_graph(as_size(ps[0]));
            break;
        case Family::disjoint_union: {
            if (spec.components.empty()) domain(spec, "requires at least one component");
            g = build(spec.components.front());
            for (std::size_t i = 1; i < spec.components.size(); ++i)
                g = disjoint_union(g, build(spec.components[i]));
            break;
        }
        case Family::hypercube:
            require_count(spec, 1);
            if (ps[0] > 12) domain(spec, "requires d <= 12");
            g = hypercube(as_size(ps[0]));
            break;
        case Family::circulant: {
            if (ps.empty()) domain(spec, "requires n");
            if (ps[0] < 1) domain(spec, "requires n >= 1");
            std::vector<std::size_t> jumps;
            for (std::size_t i = 1; i < ps.size(); ++i) {
                if (ps[i] < 1 || 2 * ps[i] > ps[0])
                    domain(spec, "jumps must satisfy 1 <= s <= n/2");
                jumps.push_back(as_size(ps[i]));
            }
            g = circulant(as_size(ps[0]), jumps);
            break;
        }
    }
    return g.renamed(to_string(spec));
}

FamilySpec parse_family(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const FamilySpec& spec) {
    std::string out(family_text(spec.family));
    if (spec.family == Family::petersen && spec.params.empty()) return out;
    out += '(';
    bool first = true;
    if (spec.family == Family::disjoint_union) {
        for (const auto& c : spec.components) {
            out += (first ? "" : ",") + to_string(c);
            first = false;
        }
    } else {
        for (int p : spec.params) {
            out += (first ? "" : ",") + std::to_string(p);
            first = false;
        }
    }
    return out + ')';
}

}  // namespace srho
