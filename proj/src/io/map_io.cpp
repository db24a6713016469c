#include "proteus/io/map_io.hpp"

#include <stdexcept>

#include "proteus/io/csv.hpp"

namespace proteus::io {

namespace {

regimegen::TransitionEvent event_from_fields(const std::vector<std::string_view>& fields,
                                             const CsvTable& table, std::size_t row) {
    regimegen::TransitionEvent ev;
    ev.start_index = parse_int(fields[0], table.context(row, "start_index"));
    ev.duration = parse_int(fields[1], table.context(row, "duration"));
    ev.from_state = static_cast<int>(parse_int(fields[2], table.context(row, "from_state")));
    ev.to_state = static_cast<int>(parse_int(fields[3], table.context(row, "to_state")));
    return ev;
}

void append_event(std::string& out, const regimegen::TransitionEvent& ev) {
    append_int(out, ev.start_index);
    out += ',';
    append_int(out, ev.duration);
    out += ',';
    append_int(out, ev.from_state);
    out += ',';
    append_int(out, ev.to_state);
}

std::int64_t inferred_length(const std::vector<regimegen::TransitionEvent>& events) {
    return events.empty() ? 0 : events.back().end_index();
}

}  // namespace

void save_map(const std::filesystem::path& path, const regimegen::TransitionMap& map) {
    regimegen::require_valid(map);
    std::string out = "start_index,duration,from_state,to_state\n";
    for (const auto& ev : map.events) {
        append_event(out, ev);
        out += '\n';
    }
    write_text_file(path, out);
}

regimegen::TransitionMap load_map(const std::filesystem::path& path, std::int64_t stream_length) {
    const CsvTable table(path, {"start_index", "duration", "from_state", "to_state"});

    regimegen::TransitionMap map;
    map.events.reserve(table.rows());
    for (std::size_t row = 0; row < table.rows(); ++row)
        map.events.push_back(event_from_fields(table.fields(row), table, row));

    // The chain invariant pins the initial state to the first source.
    if (!map.events.empty()) map.initial_state = map.events.front().from_state;
    map.stream_length = stream_length > 0 ? stream_length : inferred_length(map.events);

    const auto problems = regimegen::validate_map(map);
    if (!problems.empty()) {
        std::string message = path.string() + ": invalid transition map:";
        for (const auto& p : problems) message += "\n  " + p;
        throw std::runtime_error(message);
    }
    return map;
}

void save_ground_truth_events(const std::filesystem::path& path,
                              const std::vector<regimegen::TransitionEvent>& events,
                              std::int64_t gradual_cutoff) {
    std::string out = "start_index,duration,from_state,to_state,type\n";
    for (const auto& ev : events) {
        append_event(out, ev);
        out += ',';
        out += regimegen::classify_duration(ev.duration, gradual_cutoff) ==
                       regimegen::DriftType::gradual
                   ? "gradual"
                   : "abrupt";
        out += '\n';
    }
    write_text_file(path, out);
}

GroundTruthEvents load_ground_truth_events(const std::filesystem::path& path) {
    const CsvTable table(path, {"start_index", "duration", "from_state", "to_state", "type"});
    GroundTruthEvents result;
    result.events.reserve(table.rows());
    result.types.reserve(table.rows());
    for (std::size_t row = 0; row < table.rows(); ++row) {
        const auto fields = table.fields(row);
        result.events.push_back(event_from_fields(fields, table, row));
        if (fields[4] == "abrupt") result.types.push_back(regimegen::DriftType::abrupt);
        else if (fields[4] == "gradual") result.types.push_back(regimegen::DriftType::gradual);
        else throw std::runtime_error(table.context(row, "unknown drift type"));
    }
    result.stream_length = inferred_length(result.events);
    return result;
}

}  // namespace proteus::io
