#pragma once

#include <stdexcept>
#include <string>

namespace tabdx {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-supplied configuration (CLI maps this to exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input data: CSV cells, row lengths, schema mismatches.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Schema-level problems: duplicate columns, unknown kinds, missing label.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Anything that stops a pipeline stage (CLI maps this to exit code 3).
class PipelineError : public Error {
 public:
  using Error::Error;
};

}  // namespace tabdx
