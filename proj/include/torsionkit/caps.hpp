#pragma once

// Size caps that keep the exhaustive computations tractable.

#include <cstdint>
#include <string>

namespace torsionkit {

struct Caps {
    int ring_order = 64;                    // max |R| for table rings
    int module_order = 256;                 // max |M| for finite modules
    int tensor_intermediate = 4096;         // max size of the Z-tensor before quotienting
    int lattice_size = 12;                  // max ideal count for filter enumeration
    long long search_budget = 50'000'000;   // node budget for derivation search
};

// Applies overrides of the form "ringOrder=32,moduleOrder=128" on top of `base`.
// Keys: ringOrder, moduleOrder, tensorIntermediate, latticeSize, searchBudget.
// Unknown keys or non-numeric values raise UsageError.
Caps parse_caps_overrides(const std::string& spec, Caps base = {});

// Reads the TORSIONKIT_CAPS environment variable, if set.
Caps caps_from_env(Caps base = {});

}  // namespace torsionkit
