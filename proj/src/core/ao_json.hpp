#pragma once

#include <string>

#include "core/integrals.hpp"

namespace sqdw {

// JSON container for an AO bundle so externally generated integrals can be
// injected in place of the built-in engine. Schema (version 1):
//   { "format": "sqdw-ao", "version": 1, "n_ao": int, "e_nuc": double,
//     "basis": str, "ao_atom_map": [int...], "s": [row-major n^2],
//     "hcore": [row-major n^2], "eri_packed": [8-fold packed] }
void save_ao_json(const std::string& path, const AOBundle& ao);
AOBundle load_ao_json(const std::string& path);

}  // namespace sqdw
