#include "shadowlab/data.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shadowlab {

// generated at build time from data/
const std::map<std::string, std::string_view>& embedded_data_files();

std::string read_data_file(std::string_view relative_path) {
    if (const char* dir = std::getenv("SHADOWLAB_DATA"); dir && *dir) {
        const auto path = std::filesystem::path(dir) / std::string(relative_path);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open data file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    const auto& files = embedded_data_files();
    auto it = files.find(std::string(relative_path));
    if (it == files.end()) throw std::runtime_error("no embedded data file " + std::string(relative_path));
    return std::string(it->second);
}

std::string data_stem(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '^')
            out += '_';
        else if (c == '+')
            out += "plus";
        else
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace shadowlab
