#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kvb/formal_series.hpp"

namespace kvb {

struct CheckReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::Pass;
    std::string witness;
    size_t cases = 0;

    CheckReport() = default;
    explicit CheckReport(std::string n, nlohmann::json p = nlohmann::json::object())
        : name(std::move(n)), params(std::move(p)) {}

    bool passed() const { return verdict == Verdict::Pass; }
    // Records one case; a failure keeps the first witness.
    void record(Verdict v, const std::string& w = {});
    // Folds another report in as a sub-case.
    void absorb(const CheckReport& other);

    nlohmann::json to_json() const;
};

}  // namespace kvb
