#include "gfc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gfc {
namespace {

std::atomic<std::size_t> g_override{0};

std::size_t from_environment() {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("GFC_THREADS");
    if (env == nullptr || *env == '\0') return hw;
    try {
        const long v = std::stol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    } catch (...) {
    }
    return hw;
}

}  // namespace

std::size_t worker_count() {
    const std::size_t o = g_override.load();
    if (o != 0) return o;
    static const std::size_t env = from_environment();
    return env;
}

void set_worker_count(std::size_t n) { g_override.store(n); }

}  // namespace gfc
