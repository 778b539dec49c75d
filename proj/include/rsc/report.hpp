#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace rsc {

/// One verified relation instance.  `witness` is empty on pass and carries
/// both sides' renderings (or a counterexample point) on failure.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;
};

inline bool all_pass(const std::vector<CheckItem>& items) {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

/// Full result of one named verification target.
struct CheckReport {
    std::string target;
    int n = 0;
    int l1 = 0, l2 = 0;
    int deg = 0;
    std::string mode;    // "exact" | "modular"
    uint64_t seed = 0;
    std::vector<CheckItem> items;
    long long wall_time_ms = 0;
    long long setup_ms = 0; // operator construction, shared between modes

    bool passed() const { return all_pass(items); }

    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            switch (c) {
                case '"': r += "\\\""; break;
                case '\\': r += "\\\\"; break;
                case '\n': r += "\\n"; break;
                case '\t': r += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        r += buf;
                    } else {
                        r += c;
                    }
            }
        }
        return r;
    }

    std::string render_text(bool strip_timings) const {
        std::ostringstream os;
        os << "[" << (passed() ? "PASS" : "FAIL") << "] " << target << " n=" << n << " l=(" << l1
           << "," << l2 << ") deg=" << deg << " mode=" << mode << " seed=" << seed;
        if (!strip_timings) os << " setup_ms=" << setup_ms << " wall_ms=" << wall_time_ms;
        os << "\n";
        for (const auto& it : items) {
            os << "  " << (it.pass ? "ok  " : "FAIL") << " " << it.name;
            if (!it.witness.empty()) os << "\n       " << it.witness;
            os << "\n";
        }
        return os.str();
    }

    std::string render_json(bool strip_timings) const {
        std::ostringstream os;
        os << "{\"target\":\"" << escape(target) << "\",\"n\":" << n << ",\"l\":[" << l1 << "," << l2
           << "],\"deg\":" << deg << ",\"mode\":\"" << escape(mode) << "\",\"seed\":" << seed
           << ",\"passed\":" << (passed() ? "true" : "false") << ",\"checks\":[";
        bool first = true;
        for (const auto& it : items) {
            if (!first) os << ",";
            first = false;
            os << "{\"name\":\"" << escape(it.name) << "\",\"pass\":" << (it.pass ? "true" : "false");
            if (!it.witness.empty()) os << ",\"witness\":\"" << escape(it.witness) << "\"";
            os << "}";
        }
        os << "],\"setup_ms\":" << (strip_timings ? 0 : setup_ms)
           << ",\"wall_time_ms\":" << (strip_timings ? 0 : wall_time_ms) << "}";
        return os.str();
    }
};

} // namespace rsc
