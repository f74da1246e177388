#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cybar {

/// Base class of every hard error raised by the library. Axiom violations on
/// user input are returned as data instead; these exceptions signal broken
/// preconditions or internal invariant failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a construction would enumerate more simplices than the active
/// cap allows.
class CapExceeded : public Error {
 public:
  CapExceeded(int degree, std::size_t count, std::size_t cap)
      : Error("simplex cap " + std::to_string(cap) + " exceeded in degree " +
              std::to_string(degree) + " (" + std::to_string(count) + " simplices)"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Per-thread simplex cap for enumerating constructions.
std::size_t simplex_cap() noexcept;

class ScopedSimplexCap {
 public:
  explicit ScopedSimplexCap(std::size_t cap);
  ~ScopedSimplexCap();
  ScopedSimplexCap(const ScopedSimplexCap&) = delete;
  ScopedSimplexCap& operator=(const ScopedSimplexCap&) = delete;

 private:
  std::size_t previous_;
};

inline constexpr std::size_t kDefaultSimplexCap = 1'000'000;

}  // namespace cybar
