#include "fracpolya/stiffness_cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "fracpolya/errors.hpp"

namespace fracpolya {
namespace {

constexpr char kMagic[8] = {'F', 'P', 'S', 'T', 'I', 'F', 'F', '1'};

template <typename T>
void put(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError("truncated stiffness cache header");
  return value;
}

StiffnessCacheHeader read_header(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw IoError("not a stiffness cache file (bad magic)");
  }
  StiffnessCacheHeader h;
  h.version = get<std::uint32_t>(in);
  h.panel_nodes = get<std::uint32_t>(in);
  h.alpha = get<double>(in);
  h.length = get<double>(in);
  h.size = get<std::uint64_t>(in);
  h.abs_tol = get<double>(in);
  h.checksum = get<std::uint64_t>(in);
  return h;
}

std::vector<double> lower_triangle(const StiffnessMatrix& m) {
  std::vector<double> tri;
  tri.reserve(static_cast<std::size_t>(m.size() * (m.size() + 1) / 2));
  for (long r = 0; r < m.size(); ++r) {
    for (long c = 0; c <= r; ++c) tri.push_back(m(r, c));
  }
  return tri;
}

}  // namespace

std::string stiffness_cache_file_name(double alpha, double length, long size,
                                      double abs_tol) {
  std::ostringstream name;
  name << "stiff_a" << std::hex << std::bit_cast<std::uint64_t>(alpha) << "_L"
       << std::bit_cast<std::uint64_t>(length) << "_t"
       << std::bit_cast<std::uint64_t>(abs_tol) << std::dec << "_N" << size
       << ".bin";
  return name.str();
}

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_stiffness_cache(const std::filesystem::path& file,
                           const StiffnessMatrix& matrix) {
  std::error_code ec;
  if (file.has_parent_path()) {
    std::filesystem::create_directories(file.parent_path(), ec);
  }
  const auto tri = lower_triangle(matrix);
  const auto bytes = tri.size() * sizeof(double);
  // Write to a temporary name and rename, so readers never see a partial file.
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write stiffness cache " + tmp.string());
    out.write(kMagic, sizeof(kMagic));
    put(out, kStiffnessCacheVersion);
    put(out, static_cast<std::uint32_t>(matrix.quadrature().panel_nodes));
    put(out, matrix.alpha());
    put(out, matrix.length());
    put(out, static_cast<std::uint64_t>(matrix.size()));
    put(out, matrix.quadrature().abs_tol);
    put(out, fnv1a64(tri.data(), bytes));
    out.write(reinterpret_cast<const char*>(tri.data()),
              static_cast<std::streamsize>(bytes));
    if (!out) throw IoError("failed writing stiffness cache " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoError("cannot move stiffness cache into place: " + ec.message());
}

StiffnessCacheHeader read_stiffness_cache_header(
    const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  return read_header(in);
}

std::optional<StiffnessMatrix> read_stiffness_cache(
    const std::filesystem::path& file, double alpha, double length, long size,
    const QuadratureSpec& quad) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  const auto h = read_header(in);
  if (h.version != kStiffnessCacheVersion || h.alpha != alpha ||
      h.length != length || h.size != static_cast<std::uint64_t>(size) ||
      h.abs_tol != quad.abs_tol ||
      h.panel_nodes != static_cast<std::uint32_t>(quad.panel_nodes)) {
    return std::nullopt;
  }
  std::vector<double> tri(static_cast<std::size_t>(size * (size + 1) / 2));
  in.read(reinterpret_cast<char*>(tri.data()),
          static_cast<std::streamsize>(tri.size() * sizeof(double)));
  if (!in) throw IoError("truncated stiffness cache payload in " + file.string());
  if (fnv1a64(tri.data(), tri.size() * sizeof(double)) != h.checksum) {
    throw IoError("stiffness cache checksum mismatch in " + file.string());
  }
  StiffnessMatrix m(size, alpha, length, quad);
  std::size_t i = 0;
  for (long r = 0; r < size; ++r) {
    for (long c = 0; c <= r; ++c) m.set(r, c, tri[i++]);
  }
  return m;
}

}  // namespace fracpolya
