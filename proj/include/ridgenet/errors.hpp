#pragma once

#include <stdexcept>
#include <string>

namespace ridgenet {

// Unreadable or unwritable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file contents (bad header, dangling ids, truncated data).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller-supplied value outside its documented range.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Geometry referencing pixels outside the raster.
struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External segmenter process failed; message carries captured diagnostics.
struct SegmenterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ridgenet
