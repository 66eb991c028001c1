#include "report.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace magicrank::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void flatten(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    out << csv_field(path) << ',' << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

void write_csv(const nlohmann::json& doc, std::ostream& out) {
  out << "path,value\n";
  flatten(doc, "", out);
}

void emit(const nlohmann::json& doc, const std::string& format, const std::string& path) {
  std::ostringstream body;
  if (format == "csv")
    write_csv(doc, body);
  else
    body << doc.dump(2) << '\n';
  if (path.empty()) {
    std::cout << body.str();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << body.str();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace magicrank::cli
