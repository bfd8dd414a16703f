#pragma once

#include <string>

#include "core/mo.hpp"

namespace sqdw {

struct FcidumpData {
  MOIntegrals mo;
  int n_electrons = 0;
  int ms2 = 0;
};

// Standard Knowles-Handy text layout: header with NORB/NELEC/MS2, then
// `value i j k l` records, 1-indexed, chemist notation (ij|kl); one-electron
// integrals carry k = l = 0 and the core energy carries all-zero indices.
void write_fcidump(const std::string& path, const MOIntegrals& mo,
                   int n_electrons, int ms2 = 0);
FcidumpData read_fcidump(const std::string& path);

}  // namespace sqdw
