#ifndef EISQ_ERROR_HPP
#define EISQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace eisq {

// Library error with a stable machine-readable code (used verbatim by the
// CLI's JSON error objects). Codes in use:
//   domain, pole, overflow, convergence, convergence_region, truncation,
//   quadrature_failure, inconsistency, matrix, level, nonconvergence,
//   fit_degree, not_almost_holomorphic, io, usage
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace eisq

#endif
