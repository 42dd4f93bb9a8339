#include "pmv/report.hpp"

namespace pmv {

std::string status_name(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::Pass: return "pass";
        case SuiteStatus::SampledPass: return "sampled-pass";
        case SuiteStatus::Fail: return "fail";
    }
    return "?";
}

JsonValue Counterexample::to_json() const {
    JsonValue v = JsonValue::object();
    v.add("property", JsonValue::string(property));
    JsonValue elems = JsonValue::array();
    for (const auto& p : printed) elems.push(JsonValue::string(p));
    v.add("elements", std::move(elems));
    v.add("trace", JsonValue::string(trace));
    return v;
}

void SuiteReport::absorb(SuiteReport child) {
    points += child.points;
    if (child.status == SuiteStatus::Fail) {
        status = SuiteStatus::Fail;
        if (!counterexample) counterexample = child.counterexample;
    } else if (child.status == SuiteStatus::SampledPass && status == SuiteStatus::Pass) {
        status = SuiteStatus::SampledPass;
    }
    sub.push_back(std::move(child));
}

std::string SuiteReport::summary_line() const {
    std::string out = name + ": " + status_name(status) + ", " + std::to_string(points) + " points";
    if (counterexample) {
        out += "; counterexample [" + counterexample->property + "] at ";
        for (size_t i = 0; i < counterexample->printed.size(); i++) {
            if (i) out += ", ";
            out += counterexample->printed[i];
        }
        if (!counterexample->trace.empty()) out += ": " + counterexample->trace;
    }
    return out;
}

JsonValue SuiteReport::to_json() const {
    JsonValue v = JsonValue::object();
    v.add("suite", JsonValue::string(name));
    v.add("status", JsonValue::string(status_name(status)));
    v.add("points", JsonValue::number(static_cast<long long>(points)));
    if (counterexample) v.add("counterexample", counterexample->to_json());
    if (!sub.empty()) {
        JsonValue subs = JsonValue::array();
        for (const auto& s : sub) subs.push(s.to_json());
        v.add("sub", std::move(subs));
    }
    return v;
}

} // namespace pmv
