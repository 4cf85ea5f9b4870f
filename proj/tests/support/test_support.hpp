#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace test_support {

std::filesystem::path fixture_path(const std::string& name);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

struct CommandResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string cli_path();

// Runs the project CLI with the given arguments and captures both streams.
CommandResult run_cli(const std::vector<std::string>& args);

// A `serve` child process on an ephemeral port, stopped on destruction.
class ServeProcess {
public:
    explicit ServeProcess(const std::filesystem::path& store_file,
                          const std::string& addr = "127.0.0.1:0");
    ~ServeProcess();
    ServeProcess(const ServeProcess&) = delete;
    ServeProcess& operator=(const ServeProcess&) = delete;

    bool running() const { return pid_ > 0; }
    int port() const { return port_; }

    // SIGTERM, then reap; returns the child's exit code (or -1).
    int terminate();

private:
    int pid_ = -1;
    int port_ = -1;
};

}  // namespace test_support
