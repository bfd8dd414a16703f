#include "core/amplitudes_io.hpp"

#include <fstream>

#include <json.hpp>

#include "core/error.hpp"

namespace sqdw {

using nlohmann::json;

void save_amplitudes_json(const std::string& path, const Amplitudes& amps) {
  json j;
  j["format"] = "sqdw-amplitudes";
  j["version"] = 1;
  j["n_occ"] = amps.n_occ;
  j["n_virt"] = amps.n_virt;
  j["source"] = amps.source == Amplitudes::Source::ccsd ? "ccsd" : "mp2";
  std::vector<double> t1;
  for (int i = 0; i < amps.n_occ; ++i)
    for (int a = 0; a < amps.n_virt; ++a) t1.push_back(amps.t1(i, a));
  j["t1"] = t1;
  j["t2"] = amps.t2;
  std::ofstream out(path);
  require(out.good(), ErrorKind::io, "cannot open " + path + " for writing");
  out << j.dump();
}

Amplitudes load_amplitudes_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("bad amplitude JSON: ") + e.what());
  }
  require(j.value("format", "") == "sqdw-amplitudes", ErrorKind::parse,
          "not an sqdw amplitude file");
  Amplitudes a;
  a.n_occ = j.at("n_occ").get<int>();
  a.n_virt = j.at("n_virt").get<int>();
  a.source = j.value("source", "ccsd") == std::string("mp2")
                 ? Amplitudes::Source::mp2
                 : Amplitudes::Source::ccsd;
  const auto t1 = j.at("t1").get<std::vector<double>>();
  require(static_cast<int>(t1.size()) == a.n_occ * a.n_virt, ErrorKind::parse,
          "t1 size mismatch");
  a.t1 = Eigen::MatrixXd::Zero(a.n_occ, a.n_virt);
  for (int i = 0; i < a.n_occ; ++i)
    for (int x = 0; x < a.n_virt; ++x)
      a.t1(i, x) = t1[static_cast<std::size_t>(i) * a.n_virt + x];
  a.t2 = j.at("t2").get<std::vector<double>>();
  require(a.t2.size() == static_cast<std::size_t>(a.n_occ) * a.n_occ *
                             a.n_virt * a.n_virt,
          ErrorKind::parse, "t2 size mismatch");
  return a;
}

}  // namespace sqdw
