#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace clisupport {

inline std::string binary_path() {
    if (const char* env = std::getenv("PROTEUS_BIN")) return env;
#ifdef PROTEUS_BIN_PATH
    return PROTEUS_BIN_PATH;
#else
    throw std::runtime_error("PROTEUS_BIN is not set");
#endif
}

// Runs a subcommand with its output captured; returns the exit status.
inline int run(const std::string& args, const std::filesystem::path& log_file) {
    const std::string command =
        binary_path() + " " + args + " > " + log_file.string() + " 2>&1";
    const int status = std::system(command.c_str());
    return status;
}

inline void run_ok(const std::string& args, const std::filesystem::path& log_file) {
    if (run(args, log_file) != 0) {
        std::ifstream in(log_file);
        std::ostringstream log;
        log << in.rdbuf();
        throw std::runtime_error("command failed: " + args + "\n" + log.str());
    }
}

}  // namespace clisupport
