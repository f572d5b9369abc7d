#pragma once

#include <stdexcept>
#include <string>

namespace sied {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// paillier_core
struct PrimeGenerationFailure : Error { using Error::Error; };
struct NonDivisibleInput : Error { using Error::Error; };
struct PlaintextOutOfRange : Error { using Error::Error; };
struct BadRandomness : Error { using Error::Error; };
struct MalformedCiphertext : Error { using Error::Error; };

// embedding schemes
struct RetryLimitExceeded : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotExpandable : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct PayloadCorruption : Error { using Error::Error; };

// framework
struct KeyRoleMismatch : Error { using Error::Error; };

// statistics / harness
struct BinningMismatch : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct MissingTrace : Error { using Error::Error; };

// file / record parsing (CLI exit code 65)
struct FormatError : Error { using Error::Error; };

// scenario stage failure, wraps the failing stage name
class StageError : public Error {
public:
    StageError(const std::string& stage, const std::string& what)
        : Error("stage '" + stage + "': " + what), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace sied
