#ifndef TAB2IMG_ERRORS_HPP
#define TAB2IMG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tab2img {

// Error taxonomy mirrors the process exit codes: 2 config, 3 data, 4 numeric.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tab2img

#endif
