#include "proteus/regimegen/transition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "proteus/rng.hpp"

namespace proteus::regimegen {

std::vector<std::string> config_warnings(const StreamConfig& config) {
    std::vector<std::string> warnings;
    if (config.interval > 0 && config.length % config.interval != 0) {
        std::ostringstream out;
        out << "length " << config.length << " is not a multiple of the drift interval "
            << config.interval << "; the tail after the last drift stays in the final state";
        warnings.push_back(out.str());
    }
    return warnings;
}

double sigmoid_weight(std::int64_t t, std::int64_t start, std::int64_t duration) {
    if (duration < 1) throw std::invalid_argument("sigmoid_weight: duration must be >= 1");
    if (t < start) return 0.0;
    if (t >= start + duration) return 1.0;
    const double steepness = 10.0 / static_cast<double>(duration);
    const double offset = static_cast<double>(t - start) - static_cast<double>(duration) / 2.0;
    return 1.0 / (1.0 + std::exp(-steepness * offset));
}

std::vector<std::string> validate_map(const TransitionMap& map, int n_states) {
    std::vector<std::string> problems;
    auto flag = [&](std::size_t row, const std::string& text) {
        std::ostringstream out;
        out << "event " << (row + 1) << ": " << text;
        problems.push_back(out.str());
    };

    int expected_from = map.initial_state;
    for (std::size_t i = 0; i < map.events.size(); ++i) {
        const TransitionEvent& ev = map.events[i];
        if (ev.duration < 1) flag(i, "duration must be >= 1");
        if (ev.start_index < 0) flag(i, "start_index must be >= 0");
        if (ev.from_state == ev.to_state) flag(i, "from_state equals to_state");
        if (ev.from_state < 1 || ev.to_state < 1) flag(i, "state ids must be >= 1");
        if (n_states > 0 && (ev.from_state > n_states || ev.to_state > n_states)) {
            std::ostringstream out;
            out << "state id outside 1.." << n_states;
            flag(i, out.str());
        }
        if (map.stream_length > 0 && ev.end_index() > map.stream_length) {
            std::ostringstream out;
            out << "event ends at " << ev.end_index() << " beyond stream length "
                << map.stream_length;
            flag(i, out.str());
        }
        if (i > 0) {
            const TransitionEvent& prev = map.events[i - 1];
            if (ev.start_index < prev.end_index()) {
                std::ostringstream out;
                out << "overlaps previous event ending at " << prev.end_index();
                flag(i, out.str());
            }
        }
        if (ev.from_state != expected_from) {
            std::ostringstream out;
            out << "chain break: from_state " << ev.from_state << " but the active state is "
                << expected_from;
            flag(i, out.str());
        }
        expected_from = ev.to_state;
    }
    return problems;
}

void require_valid(const TransitionMap& map, int n_states) {
    const auto problems = validate_map(map, n_states);
    if (problems.empty()) return;
    std::ostringstream out;
    out << "invalid transition map:";
    for (const auto& p : problems) out << "\n  " << p;
    throw std::invalid_argument(out.str());
}

TransitionMap generate_map(const StreamConfig& config, int n_states) {
    if (n_states < 2) throw std::invalid_argument("generate_map: need at least 2 states");
    if (config.interval <= config.gradual_duration) {
        std::ostringstream out;
        out << "generate_map: interval " << config.interval
            << " must exceed the gradual duration " << config.gradual_duration;
        throw std::invalid_argument(out.str());
    }
    if (config.length < config.interval)
        throw std::invalid_argument("generate_map: stream shorter than one drift interval");

    const std::int64_t n_events = config.length / config.interval;

    // Balanced duration deck, then a seeded shuffle.
    std::vector<std::int64_t> durations(static_cast<std::size_t>(n_events));
    for (std::int64_t i = 0; i < n_events; ++i)
        durations[static_cast<std::size_t>(i)] =
            (i % 2 == 0) ? config.abrupt_duration : config.gradual_duration;
    NormalSampler rng(mix_seed(config.seed, 0xD3CAu));
    for (std::size_t i = durations.size(); i > 1; --i)
        std::swap(durations[i - 1], durations[rng.next_below(i)]);

    TransitionMap map;
    map.initial_state = config.initial_state;
    map.stream_length = config.length;
    map.events.reserve(static_cast<std::size_t>(n_events));

    int current = config.initial_state;
    for (std::int64_t k = 1; k <= n_events; ++k) {
        TransitionEvent ev;
        ev.duration = durations[static_cast<std::size_t>(k - 1)];
        ev.start_index = k * config.interval;
        // The last window may poke past the end; slide it back so it fits.
        if (ev.end_index() > config.length) ev.start_index = config.length - ev.duration;
        ev.from_state = current;
        int target = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_states - 1)));
        if (target >= current) ++target;
        ev.to_state = target;
        current = target;
        map.events.push_back(ev);
    }

    require_valid(map, n_states);
    return map;
}

}  // namespace proteus::regimegen
