#include "core/fcidump.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace sqdw {

void write_fcidump(const std::string& path, const MOIntegrals& mo,
                   int n_electrons, int ms2) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::io, "cannot open " + path + " for writing");

  const int n = mo.n_orb;
  out << "&FCI NORB=" << n << ",NELEC=" << n_electrons << ",MS2=" << ms2
      << ",\n  ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n  ISYM=1,\n&END\n";

  char buf[64];
  auto record = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof(buf), "%24.16E %4d %4d %4d %4d\n", v, i, j, k, l);
    out << buf;
  };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (PackedEri::pair_index(p, q) < PackedEri::pair_index(r, s)) continue;
          const double v = mo.g(p, q, r, s);
          if (std::abs(v) > 1e-16) record(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) {
      const double v = mo.h(p, q);
      if (std::abs(v) > 1e-16) record(v, p + 1, q + 1, 0, 0);
    }
  record(mo.e_core, 0, 0, 0, 0);
}

FcidumpData read_fcidump(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::io, "cannot open " + path);

  // header: everything until &END or a lone /
  std::string header;
  std::string line;
  bool header_done = false;
  std::streampos body_start = in.tellg();
  while (std::getline(in, line)) {
    std::string upper;
    for (char c : line) upper += static_cast<char>(std::toupper(c));
    header += " " + upper;
    if (upper.find("&END") != std::string::npos ||
        upper.find('/') != std::string::npos) {
      header_done = true;
      body_start = in.tellg();
      break;
    }
  }
  require(header_done, ErrorKind::parse, "FCIDUMP header not terminated");

  auto field = [&](const std::string& key) -> long {
    auto pos = header.find(key);
    require(pos != std::string::npos, ErrorKind::parse,
            "FCIDUMP header missing " + key);
    pos += key.size();
    while (pos < header.size() && (header[pos] == '=' || header[pos] == ' '))
      ++pos;
    return std::strtol(header.c_str() + pos, nullptr, 10);
  };

  FcidumpData data;
  const int n = static_cast<int>(field("NORB"));
  data.n_electrons = static_cast<int>(field("NELEC"));
  data.ms2 = static_cast<int>(field("MS2"));
  require(n > 0, ErrorKind::parse, "FCIDUMP NORB must be positive");

  data.mo.n_orb = n;
  data.mo.h = Eigen::MatrixXd::Zero(n, n);
  data.mo.eri.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);

  in.seekg(body_start);
  double v;
  int i, j, k, l;
  auto scatter2 = [&](int p, int q, int r, int s, double val) {
    data.mo.g(p, q, r, s) = val;
    data.mo.g(q, p, r, s) = val;
    data.mo.g(p, q, s, r) = val;
    data.mo.g(q, p, s, r) = val;
    data.mo.g(r, s, p, q) = val;
    data.mo.g(s, r, p, q) = val;
    data.mo.g(r, s, q, p) = val;
    data.mo.g(s, r, q, p) = val;
  };
  while (in >> v >> i >> j >> k >> l) {
    require(i >= 0 && i <= n && j >= 0 && j <= n && k >= 0 && k <= n &&
                l >= 0 && l <= n,
            ErrorKind::parse, "FCIDUMP record index out of range");
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.mo.e_core = v;
    } else if (k == 0 && l == 0) {
      require(i > 0 && j > 0, ErrorKind::parse, "malformed one-electron record");
      data.mo.h(i - 1, j - 1) = v;
      data.mo.h(j - 1, i - 1) = v;
    } else {
      require(i > 0 && j > 0 && k > 0 && l > 0, ErrorKind::parse,
              "malformed two-electron record");
      scatter2(i - 1, j - 1, k - 1, l - 1, v);
    }
  }
  return data;
}

}  // namespace sqdw
