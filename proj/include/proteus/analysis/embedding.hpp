#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "proteus/regimegen/stream.hpp"

namespace proteus::analysis {

// One point of the two-dimensional state view: rolling mean return
// (velocity) against rolling return standard deviation (volatility).
struct EmbeddingPoint {
    double velocity = 0.0;
    double volatility = 0.0;
    int state = 0;           // generating state at the window end
    bool in_transition = false;
};

struct StateEmbedding {
    int window = 0;
    std::vector<EmbeddingPoint> points;  // one per full window, ends at W-1 .. n-1
};

// Rolling moments over trailing windows of W returns; each point is
// tagged with the annotation of its end index (transition points carry
// the source state and a flag). Volatility uses the sample estimator.
StateEmbedding embed_states(std::span<const double> returns,
                            std::span<const regimegen::InstanceAnnotation> annotations,
                            int window = 50);

}  // namespace proteus::analysis
