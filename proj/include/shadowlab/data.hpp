#pragma once

#include <string>
#include <string_view>

namespace shadowlab {

/// Contents of a catalog data file, e.g. "lattices/d12.glue". Files are read
/// from $SHADOWLAB_DATA when it is set, otherwise from the copy compiled into
/// the library. Throws std::runtime_error if the file is missing.
std::string read_data_file(std::string_view relative_path);

/// Catalog name to file stem: "E7^2" -> "e7_2".
std::string data_stem(std::string_view name);

}  // namespace shadowlab
