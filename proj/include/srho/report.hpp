#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srho/matrix.hpp"
#include "srho/spectrum.hpp"

namespace srho {

struct Residual {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;

    /// NaN never passes.
    bool ok() const noexcept { return value <= tolerance; }
};

struct NamedCheck {
    std::string name;
    bool ok = false;
};

/// Outcome of one verification: the hypothesis verdict, predicted and computed
/// quantities, residuals against tolerances and named boolean assertions.
struct TheoremReport {
    std::string id;
    std::vector<std::string> inputs;
    bool hypothesis_check = false;
    nlohmann::json predicted = nlohmann::json::object();
    nlohmann::json computed = nlohmann::json::object();
    std::vector<Residual> residuals;
    std::vector<NamedCheck> checks;
    std::vector<std::string> notes;
    bool truncated = false;
    bool pass = false;

    void add_residual(std::string name, double value, double tolerance);
    void add_check(std::string name, bool ok);
    void note(std::string text) { notes.push_back(std::move(text)); }

    /// pass = hypothesis_check && every residual and check holds.
    void finalize();

    /// Applicable checks that failed.
    bool is_discrepancy() const noexcept { return hypothesis_check && !pass; }

    std::vector<std::string> failures() const;
    nlohmann::json to_json() const;
};

/// [[value, multiplicity], ...]
nlohmann::json spectrum_json(const Spectrum& s);

/// Rows of integers where integral, decimal strings otherwise.
nlohmann::json matrix_json(const DenseMatrix& m);

}  // namespace srho
