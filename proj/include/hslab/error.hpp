#ifndef HSLAB_ERROR_HPP
#define HSLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hslab {

enum class ErrorCode {
    UNSOLVABLE,
    RESOURCE_LIMIT,
    SIZE_LIMIT,
    EMPTY_INPUT,
    LABEL_OFF_GRID,
    ZERO_LABEL,
    NONDIFFERENTIABLE_LOSS,
    SHAPE_MISMATCH,
    DIVERGED,
    NO_FIT,
    FORMAT_ERROR,
    IO_ERROR,
    USAGE_ERROR,
};

inline const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UNSOLVABLE: return "UNSOLVABLE";
    case ErrorCode::RESOURCE_LIMIT: return "RESOURCE_LIMIT";
    case ErrorCode::SIZE_LIMIT: return "SIZE_LIMIT";
    case ErrorCode::EMPTY_INPUT: return "EMPTY_INPUT";
    case ErrorCode::LABEL_OFF_GRID: return "LABEL_OFF_GRID";
    case ErrorCode::ZERO_LABEL: return "ZERO_LABEL";
    case ErrorCode::NONDIFFERENTIABLE_LOSS: return "NONDIFFERENTIABLE_LOSS";
    case ErrorCode::SHAPE_MISMATCH: return "SHAPE_MISMATCH";
    case ErrorCode::DIVERGED: return "DIVERGED";
    case ErrorCode::NO_FIT: return "NO_FIT";
    case ErrorCode::FORMAT_ERROR: return "FORMAT_ERROR";
    case ErrorCode::IO_ERROR: return "IO_ERROR";
    case ErrorCode::USAGE_ERROR: return "USAGE_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}

#endif
