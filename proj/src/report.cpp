#include "srho/report.hpp"

#include <cmath>

namespace srho {

void TheoremReport::add_residual(std::string name, double value, double tolerance) {
    residuals.push_back({std::move(name), value, tolerance});
}

void TheoremReport::add_check(std::string name, bool ok) { checks.push_back({std::move(name), ok}); }

void TheoremReport::finalize() {
    pass = hypothesis_check;
    for (const auto& r : residuals) pass = pass && r.ok();
    for (const auto& c : checks) pass = pass && c.ok;
}

std::vector<std::string> TheoremReport::failures() const {
    std::vector<std::string> out;
    if (!hypothesis_check) out.push_back("hypothesis");
    for (const auto& r : residuals)
        if (!r.ok()) out.push_back(r.name);
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c.name);
    return out;
}

nlohmann::json TheoremReport::to_json() const {
    nlohmann::json res = nlohmann::json::array();
    for (const auto& r : residuals) {
        nlohmann::json value = std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json(nullptr);
        res.push_back({{"name", r.name}, {"value", value}, {"tol", r.tolerance}, {"ok", r.ok()}});
    }
    nlohmann::json chk = nlohmann::json::array();
    for (const auto& c : checks) chk.push_back({{"name", c.name}, {"ok", c.ok}});
    return {{"id", id},
            {"inputs", inputs},
            {"hypothesis_check", hypothesis_check},
            {"predicted", predicted},
            {"computed", computed},
            {"residuals", res},
            {"checks", chk},
            {"notes", notes},
            {"truncated", truncated},
            {"pass", pass}};
}

nlohmann::json spectrum_json(const Spectrum& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : s.groups()) out.push_back({e.value, e.multiplicity});
    return out;
}

nlohmann::json matrix_json(const DenseMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (double x : m.row(i)) {
            if (std::isfinite(x) && x == std::round(x) && std::abs(x) < 9e15)
                row.push_back(static_cast<long long>(x));
            else
                row.push_back(format_real(x, 12));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace srho
