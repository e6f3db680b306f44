#include "annular/config.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace annular {

namespace {

std::atomic<int> g_bound{-1};
std::atomic<int> g_threads{0};

int bound_from_env()
{
    if (const char* s = std::getenv("ANNULAR_MAX_M")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v < 64)
            return static_cast<int>(v);
    }
    return 14;
}

} // namespace

int enumeration_bound()
{
    int b = g_bound.load();
    return b > 0 ? b : bound_from_env();
}

void set_enumeration_bound(int m)
{
    g_bound.store(m);
}

void check_bound(int m, const std::string& what)
{
    if (m > enumeration_bound())
        throw BoundExceeded(what + ": m = " + std::to_string(m) + " exceeds the enumeration bound " +
                            std::to_string(enumeration_bound()) + " (raise it with ANNULAR_MAX_M or --max-m)");
}

int worker_threads()
{
    int t = g_threads.load();
    if (t > 0)
        return t;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void set_worker_threads(int n)
{
    g_threads.store(n);
}

} // namespace annular
