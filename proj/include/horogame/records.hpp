#pragma once

#include <algorithm>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace horogame {

// Line-oriented structured records: `type key=value key=value ...`, one per line.
// Values must not contain whitespace; producers use rationals, numbers, and
// plain tokens, so no quoting layer is needed.
struct Record {
    std::string type;
    std::vector<std::pair<std::string, std::string>> fields;

    Record() = default;
    explicit Record(std::string t) : type(std::move(t)) {}

    Record& set(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Record& set(std::string key, double value) {
        std::ostringstream os;
        os.precision(17);
        os << value;
        return set(std::move(key), os.str());
    }
    Record& set(std::string key, long long value) { return set(std::move(key), std::to_string(value)); }
    Record& set(std::string key, int value) { return set(std::move(key), std::to_string(value)); }
    Record& set(std::string key, bool value) { return set(std::move(key), std::string(value ? "true" : "false")); }

    std::optional<std::string> get(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return v;
        return std::nullopt;
    }
    std::string get_or_throw(const std::string& key) const {
        auto v = get(key);
        if (!v) throw std::invalid_argument("record " + type + ": missing field " + key);
        return *v;
    }

    std::string to_line() const {
        std::string line = type;
        for (const auto& [k, v] : fields) {
            line += ' ';
            line += k;
            line += '=';
            line += v;
        }
        return line;
    }

    static std::optional<Record> parse_line(const std::string& line) {
        std::istringstream is(line);
        std::string tok;
        if (!(is >> tok)) return std::nullopt;
        Record rec(tok);
        while (is >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) return std::nullopt;
            rec.set(tok.substr(0, eq), tok.substr(eq + 1));
        }
        return rec;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Record& r);

}  // namespace horogame

#include <ostream>

namespace horogame {
inline std::ostream& operator<<(std::ostream& os, const Record& r) { return os << r.to_line() << '\n'; }
}  // namespace horogame
