#include "kvb/report.hpp"

namespace kvb {

namespace {

int severity(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Inconclusive: return 1;
        case Verdict::Fail: return 2;
    }
    return 2;
}

}  // namespace

void CheckReport::record(Verdict v, const std::string& w) {
    ++cases;
    if (severity(v) > severity(verdict)) {
        verdict = v;
        witness = w;
    }
}

void CheckReport::absorb(const CheckReport& other) {
    cases += other.cases;
    if (severity(other.verdict) > severity(verdict)) {
        verdict = other.verdict;
        witness = other.name.empty() ? other.witness : other.name + ": " + other.witness;
    }
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j = {{"name", name}, {"params", params}, {"verdict", to_string(verdict)}, {"cases", cases}};
    if (verdict != Verdict::Pass) j["witness"] = witness;
    return j;
}

}  // namespace kvb
