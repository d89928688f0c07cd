#include "torsionkit/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "torsionkit/errors.hpp"

namespace torsionkit {

namespace {

long long parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long long n = std::stoll(value, &pos);
        if (pos != value.size() || n <= 0) throw std::invalid_argument(value);
        return n;
    } catch (const std::exception&) {
        throw UsageError("caps: value for '" + key + "' must be a positive integer, got '" + value + "'");
    }
}

}  // namespace

Caps parse_caps_overrides(const std::string& spec, Caps base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("caps: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        long long n = parse_number(key, value);
        if (key == "ringOrder") {
            base.ring_order = static_cast<int>(n);
        } else if (key == "moduleOrder") {
            base.module_order = static_cast<int>(n);
        } else if (key == "tensorIntermediate") {
            base.tensor_intermediate = static_cast<int>(n);
        } else if (key == "latticeSize") {
            base.lattice_size = static_cast<int>(n);
        } else if (key == "searchBudget") {
            base.search_budget = n;
        } else {
            throw UsageError("caps: unknown key '" + key + "'");
        }
    }
    if (base.ring_order > 64)
        throw UsageError("caps: ringOrder may not exceed 64 (right ideals are 64-bit sets)");
    return base;
}

Caps caps_from_env(Caps base) {
    const char* env = std::getenv("TORSIONKIT_CAPS");
    if (env == nullptr || *env == '\0') return base;
    return parse_caps_overrides(env, base);
}

}  // namespace torsionkit
