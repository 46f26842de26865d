#pragma once

#include <stdexcept>
#include <string>

namespace latbound {

// A bound was requested outside the dimension range it is proven for.
struct ValidityError : std::domain_error {
    explicit ValidityError(const std::string& what) : std::domain_error(what) {}
};

// QR found a diagonal entry below the rank tolerance.
struct RankDeficientError : std::runtime_error {
    explicit RankDeficientError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration requested above the configured dimension cap.
struct DimensionCapError : std::invalid_argument {
    explicit DimensionCapError(const std::string& what) : std::invalid_argument(what) {}
};

// kz_ratio is only defined over KZ-reduced bases.
struct NotKZReducedError : std::invalid_argument {
    explicit NotKZReducedError(const std::string& what) : std::invalid_argument(what) {}
};

// Basis file could not be parsed.
struct FileFormatError : std::runtime_error {
    explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latbound
