#include "torsionkit/runner.hpp"

#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "torsionkit/corpus.hpp"
#include "torsionkit/derivation.hpp"
#include "torsionkit/errors.hpp"
#include "torsionkit/filter.hpp"
#include "torsionkit/ideal.hpp"
#include "torsionkit/module.hpp"
#include "torsionkit/specfile.hpp"
#include "torsionkit/symbolic.hpp"
#include "torsionkit/tensor.hpp"
#include "torsionkit/torsion.hpp"

namespace torsionkit {
namespace {

using nlohmann::json;

/// Accumulates the report's check objects and the summary lines.
struct CheckList {
    json checks = json::array();
    std::string lines;
    int total = 0;
    int failed = 0;

    void add(const std::string& name, bool pass, json data = json(),
             const std::string& witness = std::string()) {
        json check;
        check["name"] = name;
        check["pass"] = pass;
        if (!witness.empty()) check["witness"] = witness;
        if (!data.is_null()) check["data"] = std::move(data);
        checks.push_back(std::move(check));
        ++total;
        failed += pass ? 0 : 1;
        lines += pass ? "PASS " : "FAIL ";
        lines += name;
        if (!pass && !witness.empty()) lines += "  [" + witness + "]";
        lines += "\n";
    }
};

/// A ring together with the modules the module-level sections iterate over.
struct Job {
    RingPtr ring;
    std::vector<ModulePtr> modules;
};

std::vector<Job> build_jobs(const RunConfig& config) {
    if (config.corpus != "default" && config.corpus != "none")
        throw UsageError("unknown corpus policy '" + config.corpus + "' (default | none)");
    std::vector<Job> jobs;
    std::vector<std::string> refs = config.rings;
    if (refs.empty())
        for (const auto& name : builtin_ring_names()) refs.push_back("builtin:" + name);
    for (const auto& ref : refs) {
        Job job;
        job.ring = resolve_ring(ref, config.caps);
        if (config.corpus == "default")
            job.modules = default_module_corpus(job.ring, config.caps);
        jobs.push_back(std::move(job));
    }
    for (const auto& path : config.modules) {
        ModulePtr module = load_module_spec(path, config.caps);
        jobs.push_back(Job{module->ring(), {module}});
    }
    return jobs;
}

json hex_array(const std::vector<RightIdeal>& ideals) {
    json out = json::array();
    for (RightIdeal ideal : ideals) out.push_back(ideal_to_hex(ideal));
    return out;
}

std::string violation_witness(const FilterViolation& v) {
    if (v.ok) return "";
    std::string out = v.axiom + ": ideal=" + ideal_to_hex(v.ideal);
    if (v.axiom == "upwardClosed" || v.axiom == "axiom2") out += " other=" + ideal_to_hex(v.other);
    if (v.r >= 0) out += " r=" + std::to_string(v.r);
    return out;
}

/// Filters are identified by their minimal members, which determine them.
std::string filter_label(const GabrielFilter& filter) {
    std::string out = "{";
    bool first = true;
    for (RightIdeal ideal : minimal_members(filter)) {
        if (!first) out += ",";
        out += ideal_to_hex(ideal);
        first = false;
    }
    return out + "}";
}

std::vector<int> central_idempotents(const FiniteRing& ring) {
    std::vector<int> out;
    for (int e = 0; e < ring.order(); ++e) {
        if (ring.mul(e, e) != e) continue;
        bool central = true;
        for (int r = 0; r < ring.order() && central; ++r)
            central = ring.mul(e, r) == ring.mul(r, e);
        if (central) out.push_back(e);
    }
    return out;
}

// --- ideals ---------------------------------------------------------------

void section_ideals(CheckList& checks, const RingPtr& ring) {
    const IdealLattice lattice = build_lattice(ring);
    json ideals = json::array();
    bool dense_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
        json entry;
        entry["mask"] = ideal_to_hex(lattice.ideals[i]);
        entry["size"] = std::popcount(lattice.ideals[i]);
        entry["dense"] = lattice.dense[i] != 0;
        entry["essential"] = lattice.essential[i] != 0;
        ideals.push_back(std::move(entry));
        if (lattice.dense[i] && !lattice.essential[i] && dense_ok) {
            dense_ok = false;
            witness = ideal_to_hex(lattice.ideals[i]);
        }
    }
    json data;
    data["count"] = lattice.ideals.size();
    data["ideals"] = std::move(ideals);
    checks.add("ideals/" + ring->name(), true, std::move(data));
    checks.add("denseImpliesEssential/" + ring->name(), dense_ok, json(), witness);
}

// --- filters ----------------------------------------------------------------

void section_filters(CheckList& checks, const RingPtr& ring) {
    const IdealLattice lattice = build_lattice(ring);
    const GabrielFilter lambek = lambek_filter(ring);
    const GabrielFilter goldie = goldie_filter(ring);

    auto report = [&](const GabrielFilter& filter, const std::string& label) {
        const FilterViolation v = check_gabriel_axioms(filter);
        json data;
        data["provenance"] = provenance_name(filter.provenance);
        data["members"] = hex_array(filter.members);
        data["minimalMembers"] = hex_array(minimal_members(filter));
        checks.add("filterAxioms/" + ring->name() + "/" + label, v.ok, std::move(data),
                   violation_witness(v));
    };
    report(lambek, "lambek");
    report(goldie, "goldie");
    for (int e : central_idempotents(*ring))
        report(extension_filter(ring, e), "extension(e=" + std::to_string(e) + ")");

    bool lambek_in_goldie = true;
    std::string witness;
    for (RightIdeal ideal : lambek.members)
        if (!goldie.contains(ideal) && lambek_in_goldie) {
            lambek_in_goldie = false;
            witness = ideal_to_hex(ideal);
        }
    checks.add("lambekInsideGoldie/" + ring->name(), lambek_in_goldie, json(), witness);

    bool essential_in_goldie = true;
    witness.clear();
    for (std::size_t i = 0; i < lattice.ideals.size(); ++i)
        if (lattice.essential[i] && !goldie.contains(lattice.ideals[i]) && essential_in_goldie) {
            essential_in_goldie = false;
            witness = ideal_to_hex(lattice.ideals[i]);
        }
    checks.add("essentialInsideGoldie/" + ring->name(), essential_in_goldie, json(), witness);
}

// --- derivations ------------------------------------------------------------

void section_derivations(CheckList& checks, const Job& job, const Caps& caps) {
    const RingPtr& ring = job.ring;
    const auto ring_derivs = enumerate_ring_derivations(ring, caps);
    bool all_valid = true;
    json tables = json::array();
    for (const auto& delta : ring_derivs) {
        all_valid = all_valid && is_ring_derivation(*ring, delta.table);
        tables.push_back(delta.table);
    }
    json data;
    data["count"] = ring_derivs.size();
    data["tables"] = std::move(tables);
    checks.add("ringDerivations/" + ring->name(), all_valid, std::move(data));

    for (const ModulePtr& module : job.modules) {
        json per_delta = json::array();
        long long total = 0;
        bool valid = true;
        for (const auto& delta : ring_derivs) {
            const auto derivs = enumerate_module_derivations(module, delta, caps);
            per_delta.push_back(derivs.size());
            total += static_cast<long long>(derivs.size());
            for (const auto& d : derivs)
                valid = valid && is_module_derivation(*module, delta, d.table);
        }
        json module_data;
        module_data["perDelta"] = std::move(per_delta);
        module_data["total"] = total;
        checks.add("moduleDerivations/" + ring->name() + "/" + module->name(), valid,
                   std::move(module_data));
    }
}

// --- check-differential -----------------------------------------------------

void section_differential(CheckList& checks, const Job& job, const Caps& caps) {
    const RingPtr& ring = job.ring;
    const auto ring_derivs = enumerate_ring_derivations(ring, caps);
    std::vector<ModuleDerivation> corpus_derivs;
    for (const ModulePtr& module : job.modules) {
        const auto derivs = corpus_derivations(module, caps);
        corpus_derivs.insert(corpus_derivs.end(), derivs.begin(), derivs.end());
    }

    for (const GabrielFilter& filter : enumerate_gabriel_filters(ring, caps)) {
        const std::string label = ring->name() + "/" + filter_label(filter);

        const DifferentialCheck dc = is_differential_filter(filter, ring_derivs);
        json data;
        json witnesses = json::array();
        for (const auto& pair : dc.witnesses) {
            json w;
            w["ideal"] = ideal_to_hex(pair.ideal);
            w["stableMember"] = ideal_to_hex(pair.witness);
            witnesses.push_back(std::move(w));
        }
        data["witnesses"] = std::move(witnesses);
        checks.add("differential/" + label, dc.ok, std::move(data),
                   dc.ok ? "" : "no derivation-stable member inside " + ideal_to_hex(dc.failing));

        const BlandCheck bc = check_bland_criterion(filter, corpus_derivs);
        json bland_data;
        bland_data["derivations"] = corpus_derivs.size();
        checks.add("torsionStable/" + label, bc.ok, std::move(bland_data),
                   bc.ok ? ""
                         : "module=" + bc.module_name + " d#" +
                               std::to_string(bc.derivation_index) + " x=" +
                               std::to_string(bc.element) + " image=" + std::to_string(bc.image));
    }
}

// --- goldie-lemmas ----------------------------------------------------------

void section_goldie(CheckList& checks, const Job& job, const Caps& caps) {
    for (const ModulePtr& module : job.modules) {
        const auto derivs = corpus_derivations(module, caps);
        const GoldieLemmaReport report = verify_goldie_lemmas(module, derivs);
        for (const auto& item : report.items) {
            json data;
            data["checked"] = item.checked;
            data["violations"] = item.violations;
            checks.add("goldieLemmas/" + job.ring->name() + "/" + module->name() + "/" + item.name,
                       item.violations == 0, std::move(data), item.witness);
        }
    }
}

// --- lambek-witness ---------------------------------------------------------

void section_lambek_witness(CheckList& checks, const Job& job, const Caps& caps) {
    const RingPtr& ring = job.ring;
    const GabrielFilter lambek = lambek_filter(ring);
    const int n = ring->order();

    for (const ModulePtr& module : job.modules) {
        const auto derivs = corpus_derivations(module, caps);
        std::vector<int> torsion_elements;
        for (int x = 0; x < module->order(); ++x)
            if (lambek.contains(annihilator(*module, x))) torsion_elements.push_back(x);

        long long tuples = 0;
        bool witnessed = true;
        bool stays_torsion = true;
        std::string witness_msg, stays_msg;
        json traces = json::array();
        for (std::size_t di = 0; di < derivs.size(); ++di) {
            const ModuleDerivation& d = derivs[di];
            for (int x : torsion_elements) {
                if (!lambek.contains(annihilator(*module, d(x))) && stays_torsion) {
                    stays_torsion = false;
                    stays_msg = "d#" + std::to_string(di) + " x=" + std::to_string(x);
                }
                for (int r = 0; r < n; ++r)
                    for (int s = 1; s < n; ++s) {
                        ++tuples;
                        try {
                            const LambekWitness w = lambek_witness(d, x, r, s);
                            if (traces.size() < 3) {
                                json trace;
                                trace["d"] = di;
                                trace["x"] = x;
                                trace["r"] = r;
                                trace["s"] = s;
                                trace["t1"] = w.t1;
                                trace["t2"] = w.t2;
                                trace["t"] = w.t;
                                traces.push_back(std::move(trace));
                            }
                        } catch (const NoWitness& e) {
                            if (witnessed) witness_msg = e.what();
                            witnessed = false;
                        }
                    }
            }
        }
        const std::string base = ring->name() + "/" + module->name();
        json data;
        data["denseTorsionElements"] = torsion_elements.size();
        data["tuples"] = tuples;
        data["sampleTraces"] = std::move(traces);
        checks.add("lambekWitness/" + base, witnessed, std::move(data), witness_msg);
        checks.add("derivativeStaysTorsion/" + base, stays_torsion, json(), stays_msg);
    }
}

// --- tensor (sweep only) ----------------------------------------------------

void section_tensor(CheckList& checks, const Job& job, const Caps& caps) {
    const RingPtr& ring = job.ring;
    const BimodulePtr bireg = make_regular_bimodule(ring, caps);
    const auto ring_derivs = enumerate_ring_derivations(ring, caps);

    // Two-sided derivations of the regular bimodule, grouped per delta.
    std::vector<std::vector<ModuleDerivation>> right_derivs;
    for (const auto& delta : ring_derivs) {
        std::vector<ModuleDerivation> kept;
        for (auto& d : enumerate_module_derivations(bireg, delta, caps))
            if (satisfies_left_derivation_law(*bireg, delta, d.table)) kept.push_back(std::move(d));
        right_derivs.push_back(std::move(kept));
    }

    for (const ModulePtr& module : job.modules) {
        const std::string base = ring->name() + "/" + module->name();
        TensorProduct tensor;
        try {
            tensor = tensor_over_ring(module, bireg, caps);
        } catch (const OrderCapExceeded& e) {
            json data;
            data["skipped"] = true;
            checks.add("tensorWithRing/" + base, true, std::move(data), e.what());
            continue;
        }

        json order_data;
        order_data["module"] = module->order();
        order_data["tensor"] = tensor.module->order();
        checks.add("tensorWithRing/" + base, tensor.module->order() == module->order(),
                   std::move(order_data),
                   tensor.module->order() == module->order() ? "" : "M (x) R differs from M");

        long long pairs = 0;
        bool all_ok = true;
        std::string witness;
        for (std::size_t i = 0; i < ring_derivs.size(); ++i) {
            for (const auto& dm : enumerate_module_derivations(module, ring_derivs[i], caps))
                for (const auto& dn : right_derivs[i]) {
                    ++pairs;
                    const ModuleDerivation dt = tensor_derivation(tensor, dm, dn);
                    if (!is_module_derivation(*tensor.module, ring_derivs[i], dt.table) && all_ok) {
                        all_ok = false;
                        witness = "delta#" + std::to_string(i);
                    }
                }
        }
        json data;
        data["pairs"] = pairs;
        checks.add("tensorDerivation/" + base, all_ok, std::move(data), witness);
    }
}

// --- symbolic -----------------------------------------------------------------

void section_symbolic(CheckList& checks, std::uint64_t seed, long long cases) {
    SampleSource src(seed);

    std::vector<std::pair<RatFunc, RatFunc>> pairs;
    pairs.reserve(static_cast<std::size_t>(cases));
    for (long long i = 0; i < cases; ++i)
        pairs.emplace_back(src.ratfunc(6, 50), src.ratfunc(6, 50));
    const DerivationSample sample = check_extension_is_derivation(pairs);
    json law_data;
    law_data["cases"] = sample.cases;
    law_data["additivityFailures"] = sample.additivity_failures;
    law_data["leibnizFailures"] = sample.leibniz_failures;
    law_data["representationFailures"] = sample.representation_failures;
    checks.add("extensionDerivationLaws", sample.ok(), std::move(law_data), sample.first_failure);

    bool unique = true;
    std::string witness;
    for (long long i = 0; i < cases && unique; ++i) {
        const RatFunc q = src.ratfunc(6, 50);
        try {
            uniqueness_probe(q);
        } catch (const Error& e) {
            unique = false;
            witness = e.what();
        }
    }
    json unique_data;
    unique_data["cases"] = cases;
    checks.add("extensionUniqueness", unique, std::move(unique_data), witness);

    bool commutes = true;
    witness.clear();
    for (long long i = 0; i < cases && commutes; ++i) {
        const int k = static_cast<int>(src.next(1, 3));
        PolyVector v;
        PolyMatrix a(k, std::vector<Poly>(k));
        for (int row = 0; row < k; ++row) {
            v.push_back(src.poly(5, 20));
            for (int col = 0; col < k; ++col) a[row][col] = src.poly(2, 5);
        }
        const RatVector via_module = localize_vector(free_module_derive(v, a));
        const RatVector via_quotients = extend_module_derivation(localize_vector(v), a);
        if (via_module != via_quotients) {
            commutes = false;
            witness = "case " + std::to_string(i);
        }
    }
    json comm_data;
    comm_data["cases"] = cases;
    checks.add("moduleLocalizationCommutes", commutes, std::move(comm_data), witness);
}

// --- zq-demo ------------------------------------------------------------------

ZqSpec parse_group_spec(const std::string& group, const std::string& matrix) {
    ZqSpec spec;
    const std::size_t colon = group.find(':');
    const std::string rank_part = group.substr(0, colon);
    try {
        std::size_t pos = 0;
        spec.rank = std::stoi(rank_part, &pos);
        if (pos != rank_part.size()) throw std::invalid_argument(rank_part);
    } catch (const std::exception&) {
        throw UsageError("group rank '" + rank_part + "' is not an integer");
    }
    if (colon != std::string::npos) {
        std::istringstream in(group.substr(colon + 1));
        std::string token;
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            try {
                std::size_t pos = 0;
                spec.invariant_factors.push_back(std::stoll(token, &pos));
                if (pos != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw UsageError("invariant factor '" + token + "' is not an integer");
            }
        }
    }
    if (!matrix.empty()) {
        std::istringstream rows(matrix);
        std::string row;
        while (std::getline(rows, row, ';')) {
            std::istringstream entries(row);
            std::vector<long long> parsed;
            std::string token;
            while (entries >> token) {
                try {
                    std::size_t pos = 0;
                    parsed.push_back(std::stoll(token, &pos));
                    if (pos != token.size()) throw std::invalid_argument(token);
                } catch (const std::exception&) {
                    throw UsageError("matrix entry '" + token + "' is not an integer");
                }
            }
            spec.matrix.push_back(std::move(parsed));
        }
    }
    return spec;
}

void section_zq(CheckList& checks, const RunConfig& config) {
    std::vector<ZqSpec> specs;
    if (config.group.empty()) {
        if (!config.matrix.empty()) throw UsageError("--matrix needs --group");
        specs.push_back(ZqSpec{1, {4}, {}});
        specs.push_back(ZqSpec{0, {6}, {}});
        specs.push_back(ZqSpec{2, {}, {{0, 1}, {0, 0}}});
    } else {
        specs.push_back(parse_group_spec(config.group, config.matrix));
    }
    for (const ZqSpec& spec : specs) {
        const ZqReport report = zq_demo(spec, config.seed, config.cases);
        json data;
        data["group"] = report.group;
        data["torsionOrder"] = report.torsion_order;
        data["localizedDimension"] = report.localized_dimension;
        data["cases"] = report.cases;
        data["kernelIsTorsion"] = report.kernel_torsion;
        data["cokernelIsTorsion"] = report.cokernel_torsion;
        data["extensionCommutes"] = report.extension_commutes;
        checks.add("rationalization/" + report.group, report.ok(), std::move(data),
                   report.first_failure);
    }
}

// --- assembly -----------------------------------------------------------------

json caps_json(const Caps& caps) {
    json out;
    out["ringOrder"] = caps.ring_order;
    out["moduleOrder"] = caps.module_order;
    out["tensorIntermediate"] = caps.tensor_intermediate;
    out["latticeSize"] = caps.lattice_size;
    out["searchBudget"] = caps.search_budget;
    return out;
}

json config_json(const RunConfig& config, const std::vector<std::string>& ring_refs) {
    json out;
    out["command"] = config.command;
    out["rings"] = ring_refs;
    out["modules"] = config.modules;
    out["corpus"] = config.corpus;
    out["seed"] = config.seed;
    out["cases"] = config.cases;
    out["group"] = config.group;
    out["matrix"] = config.matrix;
    out["caps"] = caps_json(config.caps);
    return out;
}

}  // namespace

const char* tool_version() { return "torsionkit 0.1.0"; }

RunResult run_command(const RunConfig& config) {
    CheckList checks;

    const bool ring_scoped = config.command == "ideals" || config.command == "filters" ||
                             config.command == "derivations" ||
                             config.command == "check-differential" ||
                             config.command == "goldie-lemmas" ||
                             config.command == "lambek-witness" || config.command == "sweep";

    std::vector<std::string> ring_refs = config.rings;
    if (ring_scoped && ring_refs.empty())
        for (const auto& name : builtin_ring_names()) ring_refs.push_back("builtin:" + name);

    if (config.command == "ideals") {
        for (const Job& job : build_jobs(config)) section_ideals(checks, job.ring);
    } else if (config.command == "filters") {
        for (const Job& job : build_jobs(config)) section_filters(checks, job.ring);
    } else if (config.command == "derivations") {
        for (const Job& job : build_jobs(config)) section_derivations(checks, job, config.caps);
    } else if (config.command == "check-differential") {
        for (const Job& job : build_jobs(config)) section_differential(checks, job, config.caps);
    } else if (config.command == "goldie-lemmas") {
        for (const Job& job : build_jobs(config)) section_goldie(checks, job, config.caps);
    } else if (config.command == "lambek-witness") {
        for (const Job& job : build_jobs(config)) section_lambek_witness(checks, job, config.caps);
    } else if (config.command == "symbolic") {
        section_symbolic(checks, config.seed, config.cases);
    } else if (config.command == "zq-demo") {
        section_zq(checks, config);
    } else if (config.command == "sweep") {
        for (const Job& job : build_jobs(config)) {
            section_ideals(checks, job.ring);
            section_filters(checks, job.ring);
            section_derivations(checks, job, config.caps);
            section_differential(checks, job, config.caps);
            section_goldie(checks, job, config.caps);
            section_lambek_witness(checks, job, config.caps);
            section_tensor(checks, job, config.caps);
        }
        section_symbolic(checks, config.seed, config.cases);
        section_zq(checks, config);
    } else {
        throw UsageError("unknown command '" + config.command + "'");
    }

    const int exit_code = checks.failed == 0 ? 0 : 1;
    json report;
    report["toolVersion"] = tool_version();
    report["config"] = config_json(config, ring_refs);
    report["checks"] = std::move(checks.checks);
    json summary;
    summary["checks"] = checks.total;
    summary["passed"] = checks.total - checks.failed;
    summary["failed"] = checks.failed;
    summary["exitCode"] = exit_code;
    report["summary"] = std::move(summary);

    RunResult result;
    result.json = report.dump(2) + "\n";
    result.summary = std::string(tool_version()) + " " + config.command + "\n" + checks.lines +
                     std::to_string(checks.total - checks.failed) + "/" +
                     std::to_string(checks.total) + " checks passed" +
                     (checks.failed ? " - VIOLATIONS FOUND" : "") + "\n";
    result.exit_code = exit_code;
    return result;
}

void emit_result(const RunConfig& config, const RunResult& result, std::ostream& out) {
    out << result.summary;
    if (config.output_path.empty()) {
        out << result.json;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw IoError("cannot open report file '" + config.output_path + "'");
    file << result.json;
    file.close();
    if (!file) throw IoError("failed writing report file '" + config.output_path + "'");
    out << "report written to " << config.output_path << "\n";
}

}  // namespace torsionkit
