#include "stbext/trace.hpp"

#include <ostream>

#include <json.hpp>

namespace stbext::trace {

std::string to_json(const label_enum::TraceEvent& event, const Framework& f) {
    nlohmann::ordered_json mu = nlohmann::ordered_json::object();
    nlohmann::ordered_json pi = nlohmann::ordered_json::object();
    for (ArgId x = 0; x < f.size(); ++x) {
        mu[f.name(x)] = std::string(label_enum::to_string(event.snapshot.labels[x]));
        pi[f.name(x)] = event.snapshot.counters[x];
    }
    nlohmann::ordered_json gamma = nlohmann::ordered_json::array();
    for (ArgId x : event.snapshot.worklist) gamma.push_back(f.name(x));

    nlohmann::ordered_json j;
    j["state_id"] = event.state_id;
    j["event"] = std::string(label_enum::to_string(event.kind));
    j["dead_end"] = event.dead_end;
    j["mu"] = std::move(mu);
    j["pi"] = std::move(pi);
    j["gamma"] = std::move(gamma);
    return j.dump();
}

void JsonLinesWriter::on_boundary(const label_enum::Boundary& b, const label_enum::LabelState& s) {
    out_ << to_json(label_enum::make_trace_event(b, s), f_) << '\n';
}

} // namespace stbext::trace
