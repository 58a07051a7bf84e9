#pragma once

#include "mvop/matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mvop {

using json = nlohmann::ordered_json;

struct Check {
    std::string id;        // stable identifier, e.g. "three_term"
    std::string location;  // equation tag the check exercises
    int n = -1;            // sequence index, -1 when not applicable
    bool pass = false;
    std::optional<MatQ> residual;
    std::string note;

    // Comparison against a formula as displayed, kept next to the version that holds.
    bool displayed_form() const { return id.size() > 8 && id.compare(id.size() - 8, 8, "_claimed") == 0; }
};

class Report {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void check(std::string id, std::string location, int n, bool ok, std::string note = {});
    // Passes iff the residual is exactly zero; the residual is kept only on failure.
    void check_zero(std::string id, std::string location, int n, const MatQ& residual, std::string note = {});
    void check_equal(std::string id, std::string location, int n, const MatQ& lhs, const MatQ& rhs,
                     std::string note = {}) {
        check_zero(std::move(id), std::move(location), n, lhs - rhs, std::move(note));
    }
    void merge(const Report& o);

    const std::vector<Check>& checks() const { return checks_; }
    bool all_pass() const;
    // Every check that is not a displayed-form probe passed.
    bool verified() const;
    size_t failures() const;
    size_t count(const std::string& id) const;
    bool passed(const std::string& id) const;  // every check with this id passed (and there is at least one)

    // Ordered by check id, then n; insertion order breaks ties.
    std::vector<Check> sorted() const;
    json to_json() const;

private:
    std::vector<Check> checks_;
};

json to_json(const Q& q);
json to_json(const MatQ& m);
json to_json(const MatPoly& p);

}  // namespace mvop
