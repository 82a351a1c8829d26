#include "qdiv/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace qdiv {

int thread_cap() {
    if (const char* env = std::getenv("QDIV_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return omp_get_max_threads();
}

}  // namespace qdiv
