#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cintrec/forward.hpp"
#include "cintrec/imaging.hpp"
#include "cintrec/medium.hpp"

namespace cintrec {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// FNV-1a 64-bit hash of a file's bytes, as a hex string.
std::string fnv1a_hex(const std::filesystem::path& file);

void write_text(const std::filesystem::path& file, const std::string& content);

/// data.csv: receiver index, receiver coordinates, omega, Re/Im p_hat.
void write_data_csv(const std::filesystem::path& file, const ArrayData& data);
ArrayData read_data_csv(const std::filesystem::path& file);

/// image_*.csv: node indices, node coordinates, Re, Im, |value|.
void write_image_csv(const std::filesystem::path& file, const ImageGrid& img);

/// Scalar field on the same mesh layout (used for the kernel envelope).
void write_field_csv(const std::filesystem::path& file, const GridSpec& spec,
                     const std::vector<double>& values);

/// 8-bit binary portable graymap of |values| normalized to the maximum.
void write_image_pgm(const std::filesystem::path& file, const ImageGrid& img);

/// Graymap of raw values mapped linearly from [lo, hi] to [0, 255].
void write_field_pgm(const std::filesystem::path& file, int width, int height,
                     const std::vector<double>& values, double lo, double hi);

}  // namespace cintrec
