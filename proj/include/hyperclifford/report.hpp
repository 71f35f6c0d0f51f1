#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace hyperclifford {

enum class Status { pass, fail, deviation_documented };

inline std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::deviation_documented: return "deviation-documented";
    }
    return "?";
}

/// One verified relation. `paper_ref` holds the claimed relation in formula form.
struct CheckReport {
    std::string check_id;
    std::string description;
    std::string paper_ref;
    Status status = Status::pass;
    double max_error = 0.0;
    double elapsed_ms = 0.0;
};

struct Summary {
    int pass = 0;
    int fail = 0;
    int deviation = 0;
};

inline Summary summarize(const std::vector<CheckReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        switch (r.status) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::deviation_documented: ++s.deviation; break;
        }
    }
    return s;
}

inline void sort_reports(std::vector<CheckReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
}

/// Wall-clock stopwatch for filling elapsed_ms.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace hyperclifford
