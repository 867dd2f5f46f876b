#include "ormer/attack.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ormer/errors.hpp"
#include "ormer/synth.hpp"

namespace ormer {

AttackResult inject_attack(const PriceSeries& series, const AttackSpec& spec,
                           uint64_t seed) {
    if (spec.window == 0) {
        raise(Errc::spec_out_of_range, "attack window must be positive");
    }
    if (spec.beta > spec.window) {
        raise(Errc::spec_out_of_range, "beta exceeds the observation window");
    }
    if (spec.magnitude.raw <= 0) {
        raise(Errc::spec_out_of_range, "attack magnitude must be positive");
    }

    std::vector<size_t> targets;
    if (!spec.indices.empty()) {
        std::map<size_t, uint32_t> per_window;
        for (size_t idx : spec.indices) {
            if (idx >= series.size()) {
                raise(Errc::spec_out_of_range,
                      "attack index " + std::to_string(idx) +
                          " beyond feed of " + std::to_string(series.size()));
            }
            if (++per_window[idx / spec.window] > spec.beta) {
                raise(Errc::spec_out_of_range,
                      "more than beta points targeted in one window");
            }
        }
        targets = spec.indices;
    } else if (spec.beta > 0) {
        Rng rng(seed);
        for (size_t w0 = 0; w0 + spec.window <= series.size();
             w0 += spec.window) {
            std::set<size_t> picked;
            while (picked.size() < spec.beta) {
                picked.insert(w0 + rng.index(spec.window));
            }
            targets.insert(targets.end(), picked.begin(), picked.end());
        }
    }

    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    AttackResult result;
    result.series = series;
    for (size_t idx : targets) {
        result.series.points[idx].p =
            fp_mul(series.points[idx].p, spec.magnitude);
        result.manipulated.push_back(idx);
    }
    return result;
}

}  // namespace ormer
