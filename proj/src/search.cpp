#include "stbext/search.hpp"

namespace stbext {

std::optional<PickOrder> parse_pick_order(std::string_view name) {
    if (name == "lex") return PickOrder::Lex;
    if (name == "max-out") return PickOrder::MaxOut;
    if (name == "max-in") return PickOrder::MaxIn;
    return std::nullopt;
}

std::string_view to_string(PickOrder order) {
    switch (order) {
    case PickOrder::Lex: return "lex";
    case PickOrder::MaxOut: return "max-out";
    case PickOrder::MaxIn: return "max-in";
    }
    return "?";
}

} // namespace stbext
