#pragma once

#include <stdexcept>
#include <string>

namespace hec {

// Thrown when a factorization or triangular preprocessing step hits a zero
// (or structurally missing) pivot. block() is -1 outside block methods.
class ZeroPivotError : public std::runtime_error {
public:
    explicit ZeroPivotError(int row, int block = -1)
        : std::runtime_error(message(row, block)), row_(row), block_(block) {}

    int row() const noexcept { return row_; }
    int block() const noexcept { return block_; }

private:
    static std::string message(int row, int block) {
        std::string msg = "zero or missing pivot at row " + std::to_string(row);
        if (block >= 0) msg += " of block " + std::to_string(block);
        return msg;
    }

    int row_;
    int block_;
};

} // namespace hec
