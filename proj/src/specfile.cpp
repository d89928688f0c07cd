#include "torsionkit/specfile.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "torsionkit/corpus.hpp"
#include "torsionkit/errors.hpp"
#include "torsionkit/ideal.hpp"

namespace torsionkit {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Key/value pairs of one spec file, with duplicate and syntax checking.
class SpecFields {
public:
    SpecFields(const std::string& path, const std::string& role) : path_(path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot read " + role + " spec file '" + path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError(where(lineno) + ": expected key=value, got '" + line + "'");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw UsageError(where(lineno) + ": empty key");
            if (fields_.count(key)) throw UsageError(where(lineno) + ": duplicate key '" + key + "'");
            fields_[key] = value;
            lines_[key] = lineno;
        }
    }

    bool has(const std::string& key) const { return fields_.count(key) != 0; }

    std::string require(const std::string& key) const {
        auto it = fields_.find(key);
        if (it == fields_.end())
            throw UsageError("'" + path_ + "': missing required key '" + key + "'");
        return it->second;
    }

    std::string optional(const std::string& key) const {
        auto it = fields_.find(key);
        return it == fields_.end() ? std::string() : it->second;
    }

    /// Every present key must be in `allowed`; mentions the kind on failure.
    void restrict_to(const std::vector<std::string>& allowed, const std::string& kind) const {
        for (const auto& [key, value] : fields_) {
            bool ok = false;
            for (const auto& a : allowed) ok = ok || a == key;
            if (!ok)
                throw UsageError(where(lines_.at(key)) + ": key '" + key +
                                 "' is not valid for kind=" + kind);
        }
    }

    int parse_int(const std::string& key) const {
        const std::string value = require(key);
        try {
            std::size_t pos = 0;
            int out = std::stoi(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
            return out;
        } catch (const std::exception&) {
            throw UsageError(where(lines_.at(key)) + ": '" + value + "' is not an integer");
        }
    }

    std::vector<int> parse_int_list(const std::string& key) const {
        const std::string value = require(key);
        std::istringstream in(value);
        std::vector<int> out;
        std::string token;
        while (in >> token) {
            try {
                std::size_t pos = 0;
                out.push_back(std::stoi(token, &pos));
                if (pos != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw UsageError(where(lines_.at(key)) + ": '" + token + "' is not an integer");
            }
        }
        return out;
    }

    std::vector<std::string> parse_ref_list(const std::string& key) const {
        std::istringstream in(require(key));
        std::vector<std::string> out;
        std::string token;
        while (in >> token) out.push_back(resolve(token));
        return out;
    }

    /// A path relative to this spec file's directory.
    std::string resolve(const std::string& ref) const {
        std::filesystem::path p(ref);
        if (p.is_absolute()) return ref;
        return (std::filesystem::path(path_).parent_path() / p).string();
    }

    const std::string& path() const { return path_; }

private:
    std::string where(int lineno) const {
        return "'" + path_ + "' line " + std::to_string(lineno);
    }

    std::string path_;
    std::map<std::string, std::string> fields_;
    std::map<std::string, int> lines_;
};

RingTables extract_ring_tables(const FiniteRing& ring, const std::string& name) {
    RingTables t;
    t.name = name;
    t.order = ring.order();
    t.add.resize(t.order * t.order);
    t.mul.resize(t.order * t.order);
    for (int i = 0; i < t.order; ++i)
        for (int j = 0; j < t.order; ++j) {
            t.add[i * t.order + j] = ring.add(i, j);
            t.mul[i * t.order + j] = ring.mul(i, j);
        }
    return t;
}

bool same_ring_tables(const FiniteRing& a, const FiniteRing& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.add(i, j) != b.add(i, j) || a.mul(i, j) != b.mul(i, j)) return false;
    return true;
}

ModuleTables extract_module_tables(const FiniteModule& module, const std::string& name) {
    ModuleTables t;
    t.name = name;
    t.order = module.order();
    const int n = module.ring()->order();
    t.add.resize(t.order * t.order);
    t.act.resize(t.order * n);
    for (int x = 0; x < t.order; ++x) {
        for (int y = 0; y < t.order; ++y) t.add[x * t.order + y] = module.add(x, y);
        for (int r = 0; r < n; ++r) t.act[x * n + r] = module.act(x, r);
    }
    return t;
}

/// Ring refs inside spec files: "builtin:NAME" verbatim, paths relative.
RingPtr resolve_ring_ref(const SpecFields& fields, const std::string& ref, const Caps& caps) {
    if (ref.rfind("builtin:", 0) == 0) return resolve_ring(ref, caps);
    return resolve_ring(fields.resolve(ref), caps);
}

RightIdeal parse_ideal_mask(const SpecFields& fields, int ring_order) {
    const std::string value = fields.require("ideal");
    RightIdeal mask = 0;
    try {
        std::size_t pos = 0;
        mask = std::stoull(value, &pos, 16);
        if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
        throw UsageError("'" + fields.path() + "': ideal '" + value + "' is not a hex bitset");
    }
    if (ring_order < 64 && (mask >> ring_order) != 0)
        throw UsageError("'" + fields.path() + "': ideal " + value +
                         " has bits outside the ring (order " + std::to_string(ring_order) + ")");
    return mask;
}

ModulePtr load_module_file(const std::string& path, const RingPtr& inherited, const Caps& caps);

ModulePtr build_module(const SpecFields& fields, const RingPtr& inherited, const Caps& caps) {
    const std::string kind = fields.require("kind");

    // Resolve the ring: an explicit ring= must agree with any inherited one,
    // which stays the instance used (module factories require pointer-shared
    // rings across sum parts).
    RingPtr ring = inherited;
    if (fields.has("ring")) {
        RingPtr own = resolve_ring_ref(fields, fields.require("ring"), caps);
        if (ring && !same_ring_tables(*ring, *own))
            throw UsageError("'" + fields.path() + "': ring '" + own->name() +
                             "' differs from the enclosing ring '" + ring->name() + "'");
        if (!ring) ring = own;
    }
    if (!ring) throw UsageError("'" + fields.path() + "': missing required key 'ring'");

    ModulePtr module;
    if (kind == "regular") {
        fields.restrict_to({"kind", "ring", "name"}, kind);
        module = make_regular_module(ring, caps);
    } else if (kind == "cyclic") {
        fields.restrict_to({"kind", "ring", "ideal", "name"}, kind);
        module = make_cyclic_module(ring, parse_ideal_mask(fields, ring->order()), caps).module;
    } else if (kind == "sum") {
        fields.restrict_to({"kind", "ring", "parts", "name"}, kind);
        std::vector<std::string> parts = fields.parse_ref_list("parts");
        if (parts.size() < 2)
            throw UsageError("'" + fields.path() + "': a sum needs at least two parts");
        module = load_module_file(parts[0], ring, caps);
        for (std::size_t i = 1; i < parts.size(); ++i)
            module = make_direct_sum(module, load_module_file(parts[i], ring, caps), caps);
    } else {
        throw UsageError("'" + fields.path() + "': unknown module kind '" + kind + "'");
    }

    if (fields.has("name"))
        module = validate_module(extract_module_tables(*module, fields.require("name")), ring, caps);
    return module;
}

ModulePtr load_module_file(const std::string& path, const RingPtr& inherited, const Caps& caps) {
    SpecFields fields(path, "module");
    return build_module(fields, inherited, caps);
}

}  // namespace

RingPtr load_ring_spec(const std::string& path, const Caps& caps) {
    SpecFields fields(path, "ring");
    const std::string kind = fields.require("kind");

    RingPtr ring;
    if (kind == "zmod") {
        fields.restrict_to({"kind", "params", "name"}, kind);
        ring = make_zmod(fields.parse_int("params"), caps);
    } else if (kind == "product" || kind == "matrix" || kind == "triangular") {
        fields.restrict_to({"kind", "params", "name"}, kind);
        std::istringstream in(fields.require("params"));
        std::string first, second, extra;
        if (!(in >> first >> second) || (in >> extra))
            throw UsageError("'" + path + "': kind=" + kind + " needs exactly two params");
        if (kind == "product") {
            ring = make_product(resolve_ring_ref(fields, first, caps),
                                resolve_ring_ref(fields, second, caps), caps);
        } else {
            RingPtr base = resolve_ring_ref(fields, first, caps);
            int k = 0;
            try {
                std::size_t pos = 0;
                k = std::stoi(second, &pos);
                if (pos != second.size()) throw std::invalid_argument(second);
            } catch (const std::exception&) {
                throw UsageError("'" + path + "': size '" + second + "' is not an integer");
            }
            ring = kind == "matrix" ? make_matrix_ring(base, k, caps)
                                    : make_triangular_ring(base, k, caps);
        }
    } else if (kind == "table") {
        fields.restrict_to({"kind", "order", "add", "mul", "name"}, kind);
        RingTables t;
        t.order = fields.parse_int("order");
        t.add = fields.parse_int_list("add");
        t.mul = fields.parse_int_list("mul");
        t.name = fields.has("name") ? fields.require("name")
                                    : "table" + std::to_string(t.order);
        const std::size_t want = static_cast<std::size_t>(t.order) * t.order;
        if (t.add.size() != want || t.mul.size() != want)
            throw UsageError("'" + path + "': add and mul need order*order = " +
                             std::to_string(want) + " entries (got " +
                             std::to_string(t.add.size()) + " and " +
                             std::to_string(t.mul.size()) + ")");
        return validate_ring(t, caps);
    } else {
        throw UsageError("'" + path + "': unknown ring kind '" + kind + "'");
    }

    if (fields.has("name"))
        ring = validate_ring(extract_ring_tables(*ring, fields.require("name")), caps);
    return ring;
}

RingPtr resolve_ring(const std::string& ref, const Caps& caps) {
    constexpr const char* prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0) return builtin_ring(ref.substr(8), caps);
    return load_ring_spec(ref, caps);
}

ModulePtr load_module_spec(const std::string& path, const Caps& caps) {
    return load_module_file(path, nullptr, caps);
}

}  // namespace torsionkit
