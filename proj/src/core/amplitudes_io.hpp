#pragma once

#include <string>

#include "core/mp2.hpp"

namespace sqdw {

// JSON amplitude interchange so ansatz parameters can be seeded from an
// external coupled-cluster code. Schema (version 1):
//   { "format": "sqdw-amplitudes", "version": 1, "n_occ": int, "n_virt": int,
//     "source": "mp2"|"ccsd", "t1": [n_occ*n_virt row-major],
//     "t2": [opposite-spin t2(i,j,a,b) row-major] }
void save_amplitudes_json(const std::string& path, const Amplitudes& amps);
Amplitudes load_amplitudes_json(const std::string& path);

}  // namespace sqdw
