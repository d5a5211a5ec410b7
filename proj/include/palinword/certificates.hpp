#pragma once
// Reproducible structured-text certificates for the CLI.  Replaying a
// command with the same inputs yields byte-identical output except for the
// elapsed-ms line.

#include <map>
#include <string>
#include <vector>

namespace palinword {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateHeader = "palinword-certificate/1";

// exit codes: 0 claim verified, 1 claim refuted with witness,
// 2 inconclusive (budget), 3 usage error
enum ExitCode { kVerified = 0, kRefuted = 1, kInconclusive = 2, kUsage = 3 };

class Certificate {
  public:
    explicit Certificate(std::string command) : command_(std::move(command)) {}

    void input(const std::string& key, const std::string& value) { inputs_.emplace_back(key, value); }
    void result(const std::string& key, const std::string& value) { results_.emplace_back(key, value); }
    void set_elapsed_ms(long long ms) { elapsed_ms_ = ms; }

    std::string render() const;

  private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;   // emission order
    std::vector<std::pair<std::string, std::string>> results_;
    long long elapsed_ms_ = 0;
};

}  // namespace palinword
