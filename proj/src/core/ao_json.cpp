#include "core/ao_json.hpp"

#include <fstream>

#include <json.hpp>

#include "core/error.hpp"

namespace sqdw {

using nlohmann::json;

void save_ao_json(const std::string& path, const AOBundle& ao) {
  json j;
  j["format"] = "sqdw-ao";
  j["version"] = 1;
  j["n_ao"] = ao.n_ao;
  j["e_nuc"] = ao.e_nuc;
  j["basis"] = ao.basis_name;
  j["ao_atom_map"] = ao.ao_atom_map;
  std::vector<double> s(ao.S.data(), ao.S.data() + ao.S.size());
  std::vector<double> h(ao.hcore.data(), ao.hcore.data() + ao.hcore.size());
  j["s"] = s;
  j["hcore"] = h;
  j["eri_packed"] = ao.eri.raw();
  std::ofstream out(path);
  require(out.good(), ErrorKind::io, "cannot open " + path + " for writing");
  out << j.dump();
}

AOBundle load_ao_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("bad AO bundle JSON: ") + e.what());
  }
  require(j.value("format", "") == "sqdw-ao", ErrorKind::parse,
          "not an sqdw AO bundle file");

  AOBundle ao;
  ao.n_ao = j.at("n_ao").get<int>();
  ao.e_nuc = j.at("e_nuc").get<double>();
  ao.basis_name = j.value("basis", "");
  ao.ao_atom_map = j.at("ao_atom_map").get<std::vector<int>>();
  const auto s = j.at("s").get<std::vector<double>>();
  const auto h = j.at("hcore").get<std::vector<double>>();
  const int n = ao.n_ao;
  require(static_cast<int>(s.size()) == n * n &&
              static_cast<int>(h.size()) == n * n,
          ErrorKind::parse, "matrix size mismatch in AO bundle");
  ao.S = Eigen::Map<const Eigen::MatrixXd>(s.data(), n, n);
  ao.hcore = Eigen::Map<const Eigen::MatrixXd>(h.data(), n, n);
  ao.eri = PackedEri(n);
  auto packed = j.at("eri_packed").get<std::vector<double>>();
  require(packed.size() == ao.eri.raw().size(), ErrorKind::parse,
          "packed ERI size mismatch in AO bundle");
  ao.eri.raw() = std::move(packed);
  return ao;
}

}  // namespace sqdw
