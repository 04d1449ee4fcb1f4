#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace setu {

/// Malformed resource data: dictionary, proverb, corpus, or scheme files.
/// `line()` is 1-based when the error points at a specific input line,
/// 0 otherwise.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Translation aborted because the OOV policy is `fail` and at least one
/// word was missing from the dictionary. Carries every unknown surface.
class UnknownWordError : public std::runtime_error {
 public:
  explicit UnknownWordError(std::vector<std::string> words)
      : std::runtime_error(format(words)), words_(std::move(words)) {}

  const std::vector<std::string>& words() const { return words_; }

 private:
  static std::string format(const std::vector<std::string>& words) {
    std::string msg = "unknown words:";
    for (const auto& w : words) {
      msg += ' ';
      msg += w;
    }
    return msg;
  }

  std::vector<std::string> words_;
};

}  // namespace setu
