#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rdc/molecule.hpp"

namespace rdc::fixtures {

struct Generated {
  Molecule molecule;
  std::string recipe;  // how it was built, for failure messages
};

struct GeneratorStats {
  std::size_t attempts = 0;
  std::size_t rejected_size = 0;
  std::size_t not_molecules = 0;  // constructions whose result was not recognised
  std::size_t errors = 0;         // constructions that threw
};

/// At least `count` molecules of dimension ≤ 3 built from the point by random
/// pastings, atoms, suspensions, Gray products, joins and duals. Results
/// larger than `max_size` elements are discarded. Deterministic in `seed`.
std::vector<Generated> random_molecules(std::size_t count, std::uint64_t seed, std::size_t max_size = 48,
                                        GeneratorStats* stats = nullptr);

}  // namespace rdc::fixtures
