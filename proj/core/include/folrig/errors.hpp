#ifndef FOLRIG_ERRORS_HPP
#define FOLRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace folrig {

// Every failure the library raises falls into one of three buckets; the CLI
// maps them onto its exit codes (validation -> 2, budget -> 3, convergence -> 4).
enum class ErrorKind { validation, budget, convergence };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget, what) {}
};

struct NotConverged : Error {
    explicit NotConverged(const std::string& what) : Error(ErrorKind::convergence, what) {}
};

}  // namespace folrig

#endif
