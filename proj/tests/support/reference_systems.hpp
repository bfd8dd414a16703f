#pragma once

// Shared fixtures: benchmark geometries shipped under data/geometries and the
// published reference energies the acceptance suite checks against.

#include <string>

#include "core/integrals.hpp"
#include "core/mo.hpp"
#include "core/molecule.hpp"
#include "core/scf.hpp"

namespace sqdw::testing {

std::string data_path(const std::string& relative);
Molecule load_molecule(const std::string& name, int charge = 0);

struct PreparedSystem {
  Molecule mol;
  AOBundle ao;
  RHFResult rhf;
  MOIntegrals mo;
  int n_alpha = 0;
  int n_beta = 0;
};

// Geometry file -> integrals -> RHF -> MO Hamiltonian, cached per (name,
// basis, charge) for the lifetime of the test binary.
const PreparedSystem& prepared(const std::string& name,
                               const std::string& basis = "sto-3g",
                               int charge = 0);

struct BenchmarkRow {
  const char* name;
  int n_orb;
  int n_ele;
  double e_ccsd;
  double e_fci;
};

// The five fixed-geometry benchmark systems and their reference energies.
inline constexpr BenchmarkRow kBenchmarks[] = {
    {"h2", 2, 2, -1.12784260513579, -1.12784250431471},
    {"lih", 6, 4, -7.88116714390917, -7.88117835166515},
    {"beh2", 7, 6, -15.54741326429858, -15.54779792987434},
    {"h2o", 7, 10, -75.01541232667518, -75.01553351836277},
    {"nh3", 8, 10, -55.52092972113001, -55.52114799754608},
};

struct DmetRow {
  const char* name;
  double e_ccsd;
  double e_casci;
  double e_sqd;
};

inline constexpr DmetRow kDmetLigands[] = {
    {"hocn", -165.76903095, -165.77369080, -165.77369135},
    {"ch3no", -166.83748626, -166.84466291, -166.84466203},
    {"ch5no", -167.98584469, -167.98839994, -167.98840075},
    {"c2h3no", -204.46392213, -204.48135661, -204.48135783},
    {"c2h5no", -205.49795846, -205.50685229, -205.50684937},
    {"ch4n2o", -221.26440756, -221.28940628, -221.28940740},
    {"nocl", -582.34549362, -582.38437288, -582.38437139},
    {"hoscn", -558.99127108, -559.01613855, -559.01613914},
};

inline constexpr double kAmantadineSqd10k = -438.09785054;
inline constexpr double kAmantadineCasci = -438.09784993;
inline constexpr double kAmantadineCcsd = -438.01856100;

}  // namespace sqdw::testing
