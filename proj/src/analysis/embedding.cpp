#include "proteus/analysis/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace proteus::analysis {

StateEmbedding embed_states(std::span<const double> returns,
                            std::span<const regimegen::InstanceAnnotation> annotations,
                            int window) {
    if (window < 2) throw std::invalid_argument("embed_states: window must be >= 2");
    if (returns.size() <= static_cast<std::size_t>(window))
        throw std::invalid_argument("embed_states: series shorter than the window");
    if (annotations.size() != returns.size())
        throw std::invalid_argument("embed_states: annotation/return length mismatch");

    StateEmbedding embedding;
    embedding.window = window;
    embedding.points.reserve(returns.size() - static_cast<std::size_t>(window) + 1);

    for (std::size_t end = static_cast<std::size_t>(window) - 1; end < returns.size(); ++end) {
        double mean = 0.0;
        for (int i = 0; i < window; ++i) mean += returns[end - static_cast<std::size_t>(i)];
        mean /= window;
        double squares = 0.0;
        for (int i = 0; i < window; ++i) {
            const double d = returns[end - static_cast<std::size_t>(i)] - mean;
            squares += d * d;
        }
        EmbeddingPoint point;
        point.velocity = mean;
        point.volatility = std::sqrt(squares / (window - 1));
        point.state = annotations[end].state_from;
        point.in_transition = annotations[end].in_transition();
        embedding.points.push_back(point);
    }
    return embedding;
}

}  // namespace proteus::analysis
