// Gaussian basis parameters, STO-3G and 6-31G, as published (EMSL / Basis Set
// Exchange tabulations). Data revision: BSE export, 10 significant digits.
// 6-31G is carried for H and He only.

#include <map>

#include "core/basis.hpp"
#include "core/error.hpp"

namespace sqdw {

namespace {

// STO-3G contraction coefficients are shared across elements per shell type.
const std::vector<double> k1sS = {0.1543289673, 0.5353281423, 0.4446345422};
const std::vector<double> k2spS = {-0.09996722919, 0.3995128261, 0.7001154689};
const std::vector<double> k2spP = {0.1559162750, 0.6076837186, 0.3919573931};
const std::vector<double> k3spS = {-0.2196203690, 0.2255954336, 0.9003984260};
const std::vector<double> k3spP = {0.01058760429, 0.5951670053, 0.4620010120};

std::vector<ElementShellData> sto3g(const std::string& symbol) {
  static const std::map<std::string, std::vector<std::vector<double>>> exps = {
      {"H", {{3.425250914, 0.6239137298, 0.1688554040}}},
      {"He", {{6.362421394, 1.158922999, 0.3136497915}}},
      {"Li",
       {{16.11957475, 2.936200663, 0.7946504870},
        {0.6362897469, 0.1478600533, 0.0480886784}}},
      {"Be",
       {{30.16787069, 5.495115306, 1.487192653},
        {1.314833110, 0.3055389383, 0.0993707456}}},
      {"C",
       {{71.61683735, 13.04509632, 3.530512160},
        {2.941249355, 0.6834830964, 0.2222899159}}},
      {"N",
       {{99.10616896, 18.05231239, 4.885660238},
        {3.780455879, 0.8784966449, 0.2857143744}}},
      {"O",
       {{130.7093214, 23.80886605, 6.443608313},
        {5.033151319, 1.169596125, 0.3803889600}}},
      {"S",
       {{533.1257359, 97.10951830, 26.28162542},
        {33.32975173, 7.745117521, 2.518952599},
        {2.029194274, 0.5661400518, 0.2215833792}}},
      {"Cl",
       {{601.3456136, 109.5358542, 29.64467686},
        {38.96041889, 9.053563477, 2.944499834},
        {2.129386495, 0.5940934274, 0.2325241410}}},
  };

  auto it = exps.find(symbol);
  require(it != exps.end(), ErrorKind::unsupported,
          "element " + symbol + " not tabulated in STO-3G");
  const auto& e = it->second;

  std::vector<ElementShellData> shells;
  shells.push_back({0, e[0], k1sS});  // 1s core
  if (e.size() > 1) {                 // 2sp valence
    shells.push_back({0, e[1], k2spS});
    shells.push_back({1, e[1], k2spP});
  }
  if (e.size() > 2) {  // 3sp valence (third-row elements)
    shells.push_back({0, e[2], k3spS});
    shells.push_back({1, e[2], k3spP});
  }
  return shells;
}

std::vector<ElementShellData> six31g(const std::string& symbol) {
  if (symbol == "H") {
    return {
        {0,
         {18.73113696, 2.825394365, 0.6401216923},
         {0.03349460434, 0.2347269535, 0.8137573261}},
        {0, {0.1612777588}, {1.0}},
    };
  }
  if (symbol == "He") {
    return {
        {0,
         {38.42163400, 5.778030000, 1.241774000},
         {0.04013973935, 0.2612460970, 0.7931846246}},
        {0, {0.2979640000}, {1.0}},
    };
  }
  fail(ErrorKind::unsupported, "element " + symbol + " not tabulated in 6-31G");
}

}  // namespace

std::vector<ElementShellData> element_basis(const std::string& basis_name,
                                            const std::string& symbol) {
  std::string key;
  for (char c : basis_name) key += static_cast<char>(std::tolower(c));
  if (key == "sto-3g" || key == "sto3g") return sto3g(symbol);
  if (key == "6-31g" || key == "631g") return six31g(symbol);
  fail(ErrorKind::unsupported, "unknown basis set: '" + basis_name + "'");
}

}  // namespace sqdw
