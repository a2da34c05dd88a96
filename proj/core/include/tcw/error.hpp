#pragma once

#include <stdexcept>
#include <string>

namespace tcw {

enum class Errc {
    invalid_input,
    reject_non_simplicial,
    size_limit,
    cone_not_in_fan,
    dim_too_small,
    unbounded,
    degenerate,
    not_simple,
    nu_degenerate,
    symmetry_violation,
    non_integer_result,
    oracle_budget_exceeded,
    param_order,
    validation_failed,
    calibration_failed,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_input: return "INVALID_INPUT";
        case Errc::reject_non_simplicial: return "REJECT_NON_SIMPLICIAL";
        case Errc::size_limit: return "SIZE_LIMIT";
        case Errc::cone_not_in_fan: return "CONE_NOT_IN_FAN";
        case Errc::dim_too_small: return "DIM_TOO_SMALL";
        case Errc::unbounded: return "UNBOUNDED";
        case Errc::degenerate: return "DEGENERATE";
        case Errc::not_simple: return "NOT_SIMPLE";
        case Errc::nu_degenerate: return "NU_DEGENERATE";
        case Errc::symmetry_violation: return "SYMMETRY_VIOLATION";
        case Errc::non_integer_result: return "NON_INTEGER_RESULT";
        case Errc::oracle_budget_exceeded: return "ORACLE_BUDGET_EXCEEDED";
        case Errc::param_order: return "PARAM_ORDER";
        case Errc::validation_failed: return "VALIDATION_FAILED";
        case Errc::calibration_failed: return "CALIBRATION_FAILED";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tcw
