#include "proteus/regimegen/stream.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "proteus/econometrics/simulate.hpp"
#include "proteus/rng.hpp"

namespace proteus::regimegen {

namespace econ = proteus::econometrics;

namespace {

// Substream tags for the per-stream seed.
constexpr std::uint64_t kEmissionTag = 0;
constexpr std::uint64_t kBurnInTag = 1;

}  // namespace

DriftType classify_duration(std::int64_t duration, std::int64_t gradual_cutoff) {
    return duration >= gradual_cutoff ? DriftType::gradual : DriftType::abrupt;
}

std::vector<InstanceAnnotation> annotate_instances(const TransitionMap& map,
                                                   std::int64_t length) {
    std::vector<InstanceAnnotation> annotations(static_cast<std::size_t>(length));
    int active = map.initial_state;
    std::size_t next_event = 0;
    for (std::int64_t t = 0; t < length; ++t) {
        while (next_event < map.events.size() && t >= map.events[next_event].end_index()) {
            active = map.events[next_event].to_state;
            ++next_event;
        }
        InstanceAnnotation& a = annotations[static_cast<std::size_t>(t)];
        if (next_event < map.events.size() && t >= map.events[next_event].start_index) {
            const TransitionEvent& ev = map.events[next_event];
            a.state_from = ev.from_state;
            a.state_to = ev.to_state;
            a.blend_weight = sigmoid_weight(t, ev.start_index, ev.duration);
        } else {
            a.state_from = active;
        }
    }
    return annotations;
}

StreamResult simulate_stream(const std::vector<econ::RegimeModel>& models,
                             const TransitionMap& map, const StreamConfig& config) {
    if (config.length < 1) throw std::invalid_argument("simulate_stream: empty stream");
    require_valid(map);

    std::vector<econ::RegimeModel> active_models = models;
    if (config.mean_neutralize)
        for (auto& m : active_models) m.arma.mu = 0.0;

    std::map<int, std::size_t> index_of;
    for (std::size_t i = 0; i < active_models.size(); ++i) {
        econ::require_valid(active_models[i]);
        if (!index_of.emplace(active_models[i].state_id, i).second) {
            std::ostringstream out;
            out << "simulate_stream: duplicate model for state " << active_models[i].state_id;
            throw std::invalid_argument(out.str());
        }
    }
    auto model_index = [&](int state_id) {
        const auto it = index_of.find(state_id);
        if (it == index_of.end()) {
            std::ostringstream out;
            out << "simulate_stream: no model for state " << state_id;
            throw std::invalid_argument(out.str());
        }
        return it->second;
    };
    (void)model_index(map.initial_state);
    for (const TransitionEvent& ev : map.events) {
        (void)model_index(ev.from_state);
        (void)model_index(ev.to_state);
    }

    const std::size_t n_models = active_models.size();
    int shared_lags = 1;
    for (const auto& m : active_models) shared_lags = std::max(shared_lags, m.arma.p());
    const int burn_steps = std::max(config.burn_in_steps, shared_lags);

    // Every model burns in privately on the same innovation substream, so
    // identically parameterized models enter the stream in identical
    // states. The shared path history continues the initial model's
    // burn-in path.
    std::vector<econ::ModelState> states(n_models);
    econ::LagBuffer shared_history(shared_lags);
    const std::size_t initial_index = model_index(map.initial_state);
    for (std::size_t i = 0; i < n_models; ++i) {
        states[i] = econ::make_state(active_models[i]);
        NormalSampler burn_rng(mix_seed(config.seed, kBurnInTag));
        if (i == initial_index) {
            econ::burn_in(active_models[i], states[i], shared_history, burn_rng, burn_steps);
        } else {
            econ::LagBuffer private_history(std::max(1, active_models[i].arma.p()));
            econ::burn_in(active_models[i], states[i], private_history, burn_rng, burn_steps);
        }
    }

    StreamResult result;
    result.returns.resize(static_cast<std::size_t>(config.length));
    result.log.initial_state = map.initial_state;
    result.log.events = map.events;
    result.log.instances = annotate_instances(map, config.length);

    NormalSampler sampler(mix_seed(config.seed, kEmissionTag));
    std::vector<econ::StepMoments> moments(n_models);

    std::int64_t t = 0;
    try {
        for (; t < config.length; ++t) {
            const InstanceAnnotation& a = result.log.instances[static_cast<std::size_t>(t)];
            for (std::size_t i = 0; i < n_models; ++i)
                moments[i] = econ::conditional_moments(active_models[i], states[i], shared_history);

            double emitted;
            if (a.in_transition()) {
                const std::size_t from = model_index(a.state_from);
                const std::size_t to = model_index(a.state_to);
                const double z_from = sampler.next();
                const double z_to = config.shared_innovations ? z_from : sampler.next();
                const double r_from = moments[from].mean + moments[from].sigma * z_from;
                const double r_to = moments[to].mean + moments[to].sigma * z_to;
                emitted = r_from + a.blend_weight * (r_to - r_from);
            } else {
                const std::size_t active = model_index(a.state_from);
                emitted = moments[active].mean + moments[active].sigma * sampler.next();
            }

            for (std::size_t i = 0; i < n_models; ++i)
                econ::commit_step(states[i], moments[i], emitted);
            shared_history.push(emitted);
            result.returns[static_cast<std::size_t>(t)] = emitted;
        }
    } catch (const std::runtime_error& e) {
        std::ostringstream out;
        out << e.what() << " (stream instance " << t << ")";
        throw std::runtime_error(out.str());
    }
    return result;
}

void simulate_batch(const std::vector<econ::RegimeModel>& models, const TransitionMap& map,
                    const StreamConfig& config, int n_streams, std::uint64_t base_seed,
                    int threads, const std::function<void(int, StreamResult&&)>& sink) {
    if (n_streams < 1) throw std::invalid_argument("simulate_batch: need at least one stream");

    std::atomic<int> cursor{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_lock;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const int i = cursor.fetch_add(1);
            if (i >= n_streams) return;
            try {
                StreamConfig stream_config = config;
                stream_config.seed = mix_seed(base_seed, static_cast<std::uint64_t>(i));
                sink(i, simulate_stream(models, map, stream_config));
            } catch (const std::exception& e) {
                std::scoped_lock lock(error_lock);
                if (!failed.exchange(true)) {
                    std::ostringstream out;
                    out << "stream " << i << ": " << e.what();
                    first_error = out.str();
                }
                return;
            }
        }
    };

    const int n_workers = std::clamp(threads, 1, n_streams);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error(first_error);
}

std::vector<StreamResult> simulate_batch(const std::vector<econ::RegimeModel>& models,
                                         const TransitionMap& map, const StreamConfig& config,
                                         int n_streams, std::uint64_t base_seed, int threads) {
    std::vector<StreamResult> results(static_cast<std::size_t>(n_streams));
    std::mutex store_lock;
    simulate_batch(models, map, config, n_streams, base_seed, threads,
                   [&](int i, StreamResult&& stream) {
                       std::scoped_lock lock(store_lock);
                       results[static_cast<std::size_t>(i)] = std::move(stream);
                   });
    return results;
}

}  // namespace proteus::regimegen
