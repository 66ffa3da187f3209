#include "wcount/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace wcount {

const AsymptoticConstants& constants() {
    static const AsymptoticConstants table = {
        2.678938534707747633655692940974677644129L,
        -1.460354508809586812889499152515298012467L,
        0.5772156649015328606065120900824024310422L,
        4.206546315976362783525057237150882406389L,
        -4.130506304462434366273530133502507024454L,
        2.804364210650908522350038158100588270926L,
        "2.678938534707747633655692940974677644129",
        "-1.460354508809586812889499152515298012467",
        "0.5772156649015328606065120900824024310422",
        "4.206546315976362783525057237150882406389",
        "-4.130506304462434366273530133502507024454",
        "2.804364210650908522350038158100588270926",
        "mpmath 1.x, mp.dps=50: gamma(1/3), zeta(1/2), euler; "
        "c1=2^(2/3)*sqrt(3)*gamma(1/3)^3/(4*pi); c2=2^(3/2)*zeta(1/2); "
        "residue=2^(2/3)*gamma(1/3)^3/(2*pi*sqrt(3))",
    };
    return table;
}

long double main_terms(long double x) {
    if (x < 1.0L) throw UnsupportedParameter("main_terms requires x >= 1");
    const auto& c = constants();
    long double x13 = cbrtl(x);
    return c.c1 * x13 * x13 + c.c2 * sqrtl(x);
}

SummatoryRecord residual_at(u64 x, CountMethod method) {
    u64 count = (method == CountMethod::brute) ? summatory_brute(x)
                                               : summatory_hyperbola(x);
    const auto& c = constants();
    long double xl = static_cast<long double>(x);
    long double x13 = cbrtl(xl);
    SummatoryRecord rec;
    rec.x = x;
    rec.exact_count = count;
    rec.main_term_23 = c.c1 * x13 * x13;
    rec.main_term_12 = c.c2 * sqrtl(xl);
    rec.residual = static_cast<long double>(count) - rec.main_term_23 - rec.main_term_12;
    rec.scaled_residual = rec.residual / x13;
    rec.precision = "extended";
    return rec;
}

static unsigned worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("WITTEN_COUNT_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

std::vector<SummatoryRecord> residual_series(const std::vector<u64>& x_grid,
                                             CountMethod method) {
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        if (x_grid[i] <= x_grid[i - 1]) {
            throw UnsupportedParameter("residual_series grid must be strictly increasing");
        }
    }
    std::vector<SummatoryRecord> out(x_grid.size());
    unsigned workers = worker_count(x_grid.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < x_grid.size(); ++i) out[i] = residual_at(x_grid[i], method);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= x_grid.size()) return;
            try {
                out[i] = residual_at(x_grid[i], method);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

long double divisor_residual(u64 x) {
    const auto& c = constants();
    long double xl = static_cast<long double>(x);
    long double d = static_cast<long double>(divisor_summatory(x));
    return (d - xl * logl(xl) - (2.0L * c.euler_gamma - 1.0L) * xl) / sqrtl(xl);
}

}  // namespace wcount
