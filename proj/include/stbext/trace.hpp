#pragma once

#include <iosfwd>
#include <string>

#include "stbext/framework.hpp"
#include "stbext/label_enum.hpp"

namespace stbext::trace {

// One JSON object for an event:
//   {"state_id":3,"event":"assign_in","dead_end":false,
//    "mu":{"a":"in",...},"pi":{"a":0,...},"gamma":["c","d"]}
// mu and pi list arguments in index order, gamma is in index order.
std::string to_json(const label_enum::TraceEvent& event, const Framework& f);

// Writes every boundary of a label search as one JSON line.
class JsonLinesWriter : public label_enum::Observer {
public:
    JsonLinesWriter(std::ostream& out, const Framework& f) : out_(out), f_(f) {}
    void on_boundary(const label_enum::Boundary& b, const label_enum::LabelState& s) override;

private:
    std::ostream& out_;
    const Framework& f_;
};

} // namespace stbext::trace
