#include "orthocevia/json17.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace orthocevia {

namespace {

using nlohmann::ordered_json;

void append_double(std::string& out, double v) {
    if (!std::isfinite(v)) { // JSON has no Inf/NaN
        out += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
    // Keep the token a floating literal on round-trip.
    if (std::strpbrk(buf, ".eE") == nullptr) out += ".0";
}

void dump(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += ordered_json(key).dump();
                out += ": ";
                dump(value, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump(value, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            append_double(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json17(const nlohmann::ordered_json& doc, int indent) {
    std::string out;
    dump(doc, out, indent, 0);
    out += "\n";
    return out;
}

nlohmann::ordered_json point_to_json(double x, double y) {
    return nlohmann::ordered_json::array({x, y});
}

} // namespace orthocevia
