#pragma once

#include <string>

#include "hydro/euler.hpp"

namespace hydro::detail {

// Exceptions cannot cross an OpenMP region; kernels record the first
// failure here and rethrow after the loop.
struct ErrorCollector {
    bool failed = false;
    std::string message;

    void record(const std::string& msg) {
#pragma omp critical(hydro_error_collector)
        {
            if (!failed) {
                failed = true;
                message = msg;
            }
        }
    }
    void rethrow() const {
        if (failed) throw unphysical_error(message);
    }
};

}  // namespace hydro::detail
