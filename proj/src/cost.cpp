#include "ucurve/cost.hpp"

#include <algorithm>

#include "ucurve/rng.hpp"

namespace ucurve {

SyntheticUInstance make_synthetic_instance(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("make_synthetic_instance: degree out of range");
    SeededRng rng(seed);
    SyntheticUInstance inst;
    inst.n = n;
    inst.gap = 1.0;
    inst.valley = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    inst.u.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = inst.valley - 1; k >= 0; --k)
        inst.u[static_cast<std::size_t>(k)] =
            inst.u[static_cast<std::size_t>(k) + 1] + inst.gap * (1.0 + rng.real01());
    for (int k = inst.valley + 1; k <= n; ++k)
        inst.u[static_cast<std::size_t>(k)] =
            inst.u[static_cast<std::size_t>(k) - 1] + inst.gap * (1.0 + rng.real01());

    double bound = inst.gap / (2.0 * n);
    inst.delta.resize(static_cast<std::size_t>(n));
    for (auto& d : inst.delta) d = bound * 0.999 * rng.real01();
    // distinct deltas give the instance a unique global minimum
    for (bool clash = true; clash;) {
        clash = false;
        std::vector<double> sorted = inst.delta;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1]) {
                clash = true;
                for (auto& d : inst.delta)
                    if (d == sorted[i]) { d = bound * 0.999 * rng.real01(); break; }
                break;
            }
        }
    }
    return inst;
}

} // namespace ucurve
