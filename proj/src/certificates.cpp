#include "palinword/certificates.hpp"

#include <sstream>

namespace palinword {

std::string Certificate::render() const {
    std::ostringstream out;
    out << kCertificateHeader << "\n";
    out << "command: " << command_ << "\n";
    for (const auto& [k, v] : inputs_) out << "input " << k << ": " << v << "\n";
    for (const auto& [k, v] : results_) out << "result " << k << ": " << v << "\n";
    out << "tool-version: " << kToolVersion << "\n";
    out << "elapsed-ms: " << elapsed_ms_ << "\n";
    return out.str();
}

}  // namespace palinword
