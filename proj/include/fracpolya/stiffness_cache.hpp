#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "fracpolya/stiffness.hpp"

namespace fracpolya {

// On-disk stiffness matrix container.
//
// Layout (little-endian host order):
//   char[8]  magic "FPSTIFF1"
//   uint32   version
//   uint32   panel_nodes
//   float64  alpha
//   float64  length
//   uint64   size N
//   float64  abs_tol
//   uint64   checksum  (FNV-1a 64 over the payload bytes)
//   float64  payload[N (N + 1) / 2]   lower triangle, row-major:
//            (0,0), (1,0), (1,1), (2,0), ...
struct StiffnessCacheHeader {
  std::uint32_t version = 0;
  std::uint32_t panel_nodes = 0;
  double alpha = 0.0;
  double length = 0.0;
  std::uint64_t size = 0;
  double abs_tol = 0.0;
  std::uint64_t checksum = 0;
};

inline constexpr std::uint32_t kStiffnessCacheVersion = 1;

// Environment variable consulted by the CLI for the default cache directory.
inline constexpr const char* kCacheDirEnv = "FRACPOLYA_CACHE_DIR";

// File name derived from the exact bit patterns of the key fields.
std::string stiffness_cache_file_name(double alpha, double length, long size,
                                      double abs_tol);

std::uint64_t fnv1a64(const void* data, std::size_t bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

void write_stiffness_cache(const std::filesystem::path& file,
                           const StiffnessMatrix& matrix);

StiffnessCacheHeader read_stiffness_cache_header(
    const std::filesystem::path& file);

// Loads a cached matrix whose header matches the request exactly. Returns
// nullopt when the file is absent or keyed differently; throws IoError when
// the checksum does not match the payload.
std::optional<StiffnessMatrix> read_stiffness_cache(
    const std::filesystem::path& file, double alpha, double length, long size,
    const QuadratureSpec& quad);

}  // namespace fracpolya
