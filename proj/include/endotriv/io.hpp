#pragma once

#include <filesystem>
#include <string>

#include "endotriv/modrep.hpp"
#include "endotriv/permgroup.hpp"

namespace endotriv {

/// Group file: `degree n`, then one generator per line as n space-separated
/// 1-based images. Readers throw std::invalid_argument naming the offending
/// line on malformed input or a non-bijection.
std::string write_grp(const PermGroup& g);
PermGroup read_grp(const std::string& text);

/// Module file: `dim d field 2^e gens m degree n`, m generator lines as in the
/// group format, then m blocks of d hex rows.
std::string write_mod(const GModule& m);
GModule read_mod(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace endotriv
