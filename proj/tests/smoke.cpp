#include <iostream>
#include <chrono>
#include "leechkit/borcherds.hpp"
#include "leechkit/normal_form.hpp"

using namespace leechkit;
using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    const IntMat& n = canonical_leech_gram();
    auto t0 = Clock::now();
    auto h = hnf(n);
    auto t1 = Clock::now();
    std::cout << "hnf(leech): " << secs(t0,t1) << "s" << std::endl;
    Int hm = 0;
    for (std::size_t i=0;i<24;++i) for (std::size_t j=0;j<24;++j) if (abs(h.h(i,j))>hm) hm=abs(h.h(i,j));
    std::cout << "hnf max entry: " << hm << std::endl;
    Int um = 0;
    for (std::size_t i=0;i<24;++i) for (std::size_t j=0;j<24;++j) if (abs(h.u(i,j))>um) um=abs(h.u(i,j));
    std::cout << "hnf U max entry: " << um << std::endl;
    auto t2 = Clock::now();
    auto s = snf(n);
    auto t3 = Clock::now();
    std::cout << "snf(leech): " << secs(t2,t3) << "s diag: ";
    for (std::size_t i=0;i<24;++i) std::cout << s.d(i,i) << " ";
    std::cout << std::endl;
    return 0;
}
