#include "ifl/field_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ifl/math_util.hpp"

namespace ifl {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ensure_directory(const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec, "ensure_directory: cannot create '" + dir + "': " + ec.message());
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "write_text: cannot open '" + path + "'");
  out << content;
  require(out.good(), "write_text: write failed for '" + path + "'");
}

void write_field_csv(const std::string& path, const SampledField& f) {
  const GridSpec& g = f.grid();
  std::string s;
  s.reserve(f.values().size() * 40);
  s += g.dim == 1 ? "x,value\n" : (g.dim == 2 ? "x,y,value\n" : "x,y,z,value\n");
  for (std::size_t q = 0; q < f.values().size(); ++q) {
    Vec x = g.point(g.unravel(q));
    for (int a = 0; a < g.dim; ++a) {
      s += format_double(x[a]);
      s += ',';
    }
    s += format_double(f.values()[q]);
    s += '\n';
  }
  write_text(path, s);
}

void write_kernel_csv(const std::string& path, const Kernel1D& k) {
  std::string s = "r,F\n";
  const std::vector<double>& f = k.table();
  s.reserve(f.size() * 30);
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += format_double(i * k.dr());
    s += ',';
    s += format_double(f[i]);
    s += '\n';
  }
  write_text(path, s);
}

}  // namespace ifl
