#pragma once

// Loading rings and modules from spec files.
//
// Spec files are line-based `key=value` text. Blank lines are skipped and a
// `#` starts a comment that runs to the end of the line. Whitespace around
// keys and values is trimmed. Duplicate or unknown keys are UsageErrors, as
// is any key that does not apply to the declared kind. File references in
// values are resolved relative to the directory of the referencing file.
//
// Ring spec file:
//   name = <display name>                # optional, any kind
//   kind = zmod | product | matrix | triangular | table
//   params = 6                           # zmod: the modulus
//   params = left.ring right.ring        # product: two ring spec files
//   params = base.ring 2                 # matrix / triangular: base ring, size
//   order = 4                            # table only
//   add = 0 1 2 3 1 2 3 0 ...            # table only, order*order entries row-major
//   mul = 0 0 0 0 0 1 2 3 ...            # table only, order*order entries row-major
//
// Module spec file:
//   name = <display name>                # optional
//   kind = regular | cyclic | sum
//   ring = builtin:zmod4                 # or a ring spec file path
//   ideal = 0x5                          # cyclic only: member bitset in hex
//   parts = a.module b.module            # sum only: two or more module spec files
//
// Parts of a sum inherit the enclosing file's ring. A part may declare its
// own `ring=`, but it must resolve to the same tables.
//
// Missing files raise IoError; every grammar or validation problem raises
// UsageError naming the file (and line where applicable).

#include <string>

#include "torsionkit/caps.hpp"
#include "torsionkit/module.hpp"
#include "torsionkit/ring.hpp"

namespace torsionkit {

RingPtr load_ring_spec(const std::string& path, const Caps& caps = {});

/// Accepts either "builtin:<name>" or a ring spec file path.
RingPtr resolve_ring(const std::string& ref, const Caps& caps = {});

ModulePtr load_module_spec(const std::string& path, const Caps& caps = {});

}  // namespace torsionkit
