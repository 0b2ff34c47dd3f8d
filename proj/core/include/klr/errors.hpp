#ifndef KLR_ERRORS_HPP
#define KLR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klr {

// Exceptions carry a stable code string (used by the CLI and by tests that
// pin error identities) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error err(const std::string& code, const std::string& msg) {
  return Error(code, msg);
}

}  // namespace klr

#endif
