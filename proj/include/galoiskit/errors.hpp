#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace galoiskit {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, radicand or chain description.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Input violates an operation's precondition (zero polynomial, reducible
/// stage polynomial, non-normal subfield, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured [E:Q] bound.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::size_t degree, std::size_t cap, const std::string& where)
      : Error(where + ": field degree " + std::to_string(degree) + " exceeds cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t degree_;
  std::size_t cap_;
};

/// A mathematical identity the engine checks at runtime failed. This is never
/// a user error.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

namespace audit {

/// Collects the names of every runtime check that passed while it is alive.
/// Recorders nest; only the innermost one receives entries.
class Recorder {
 public:
  Recorder();
  ~Recorder();
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  const std::map<std::string, std::size_t>& passed() const noexcept { return passed_; }
  void record(std::string_view name) { ++passed_[std::string(name)]; }

 private:
  std::map<std::string, std::size_t> passed_;
  Recorder* previous_;
};

/// Throws SoundnessError unless `condition` holds; otherwise logs `name`.
void require(bool condition, std::string_view name, std::string_view detail = {});

}  // namespace audit
}  // namespace galoiskit
