#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtorus {

enum class Status { Pass, Fail, Skip };

inline const char* status_str(Status s) {
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
    }
    return "?";
}

struct CheckLine {
    std::string name;
    Status status = Status::Pass;
    std::string detail; // "checked=N", "witness=<expr>", "reason=<text>"
};

// One line per clause or check; FAIL lines carry the first counterexample.
struct Report {
    std::vector<CheckLine> lines;

    void pass(const std::string& name, long long checked = -1) {
        lines.push_back({name, Status::Pass,
                         checked >= 0 ? "checked=" + std::to_string(checked) : ""});
    }
    void fail(const std::string& name, const std::string& witness) {
        lines.push_back({name, Status::Fail, "witness=" + witness});
    }
    void skip(const std::string& name, const std::string& reason) {
        lines.push_back({name, Status::Skip, "reason=" + reason});
    }
    void merge(const Report& o) {
        lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    }

    bool ok() const {
        for (const auto& l : lines)
            if (l.status == Status::Fail) return false;
        return true;
    }

    int fail_count() const {
        int n = 0;
        for (const auto& l : lines)
            if (l.status == Status::Fail) ++n;
        return n;
    }

    void print(std::ostream& os) const {
        for (const auto& l : lines) {
            os << status_str(l.status) << " " << l.name;
            if (!l.detail.empty()) os << " " << l.detail;
            os << "\n";
        }
    }
};

} // namespace qtorus
