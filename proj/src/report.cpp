#include "mvop/report.hpp"

#include <algorithm>

namespace mvop {

void Report::check(std::string id, std::string location, int n, bool ok, std::string note) {
    checks_.push_back(Check{std::move(id), std::move(location), n, ok, std::nullopt, std::move(note)});
}

void Report::check_zero(std::string id, std::string location, int n, const MatQ& residual, std::string note) {
    bool ok = residual.is_zero();
    Check c{std::move(id), std::move(location), n, ok, std::nullopt, std::move(note)};
    if (!ok) c.residual = residual;
    checks_.push_back(std::move(c));
}

void Report::merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

bool Report::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

bool Report::verified() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass || c.displayed_form(); });
}

size_t Report::failures() const {
    return static_cast<size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

size_t Report::count(const std::string& id) const {
    return static_cast<size_t>(std::count_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; }));
}

bool Report::passed(const std::string& id) const {
    bool any = false;
    for (const auto& c : checks_)
        if (c.id == id) {
            if (!c.pass) return false;
            any = true;
        }
    return any;
}

std::vector<Check> Report::sorted() const {
    std::vector<Check> out = checks_;
    std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.n < b.n;
    });
    return out;
}

json Report::to_json() const {
    json arr = json::array();
    for (const auto& c : sorted()) {
        json j;
        j["check_id"] = c.id;
        j["location"] = c.location;
        if (c.n >= 0) j["n"] = c.n;
        j["pass"] = c.pass;
        if (c.displayed_form()) j["displayed_form"] = true;
        if (c.residual) {
            j["residual_frobenius_is_zero"] = false;
            j["residual"] = mvop::to_json(*c.residual);
        }
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

json to_json(const Q& q) { return to_string(q); }

json to_json(const MatQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const MatPoly& p) {
    json out = json::object();
    for (int k = 0; k <= p.degree(); ++k) out[std::to_string(k)] = to_json(p.coeff(k));
    return out;
}

}  // namespace mvop
