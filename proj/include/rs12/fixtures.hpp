// Shipped regression matrices (the search results this project reproduces),
// loaded from the versioned JSON files under data/.
#pragma once

#include <string>

#include "rs12/emod.hpp"

namespace rs12::fixtures {

/// Directory holding the fixture JSON files.  Overridable with the
/// RS12_DATA_DIR environment variable; defaults to the source-tree data/.
std::string data_dir();
std::string path(const std::string& name);

EMatrix load(const std::string& name);
/// Reinterpret a fixture's entries over F_p (entries must parse there).
EMatrix load(const std::string& name, uint32_t p);

/// The fixed linear part of B (3x2, entries in V).
EMatrix b1(uint32_t p = 5);
/// The regression-anchor quadratic part (3x2, entries in wedge^2 V):
/// reconstructed deterministically from the linear system of a1(1) with b1
/// (master seed 2026, child 1, first solution-space draw).
EMatrix b2_f5();
/// The quadratic part exactly as printed in the source; it fails the
/// resolution gates (its degree -3 flattening has full rank 30) and is kept
/// only so the defect stays pinned by a test.
EMatrix b2_printed_f5();
/// Assembled B = (B2, B1) : 2E(2) (+) 2E(1) -> 3E.
EMatrix b_f5();
/// The four linear parts with N = 114..117 (index 1..4) over F_5.
EMatrix a1(int index);
/// The linear part of the F_3 construction.
EMatrix a1_f3();

}  // namespace rs12::fixtures
