#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace magicrank::cli {

/// One "path,value" row per JSON leaf, paths joined with '.'; arrays use indices.
void write_csv(const nlohmann::json& doc, std::ostream& out);

/// JSON or CSV to a file (atomically) or stdout when path is empty.
void emit(const nlohmann::json& doc, const std::string& format, const std::string& path);

}  // namespace magicrank::cli
