#include "ctm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ctm {

unsigned default_worker_count() {
    if (const char* env = std::getenv("CTM_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::exception&) {
            // fall through to hardware concurrency
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace ctm
