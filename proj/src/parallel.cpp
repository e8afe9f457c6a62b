#include "hqg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hqg {

unsigned thread_limit() {
    static const unsigned limit = [] {
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("HQG_THREADS")) {
            try {
                const long v = std::stol(env);
                if (v > 0) return static_cast<unsigned>(std::min<long>(v, hw));
            } catch (const std::exception&) {
            }
        }
        return hw;
    }();
    return limit;
}

}  // namespace hqg
