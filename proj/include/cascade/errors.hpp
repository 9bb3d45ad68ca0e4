#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };
struct InvalidLevel : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct SingularGenerator : Error { using Error::Error; };
struct StepFailure : Error { using Error::Error; };
struct ZeroSteadyState : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct NoPeak : Error { using Error::Error; };
struct NonzeroDetuning : Error { using Error::Error; };
struct NearPole : Error { using Error::Error; };
struct NotCatalogued : Error { using Error::Error; };
struct IllConditionedPoles : Error { using Error::Error; };

// Configuration errors map to exit code 2 in the CLI.
struct ConfigError : Error { using Error::Error; };

struct ParseError : ConfigError {
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};
struct UnknownKey : ConfigError { using ConfigError::ConfigError; };
struct RangeError : ConfigError { using ConfigError::ConfigError; };

}  // namespace cascade
