#ifndef LOBBY_IO_HPP
#define LOBBY_IO_HPP

#include <string>

#include "lobby/instance.hpp"

namespace lobby {

/// Parses and validates an instance document. Throws ParseError for
/// malformed input and ValidationError for invalid instances.
Instance parse_instance(const std::string& text);

/// JSON document that round-trips losslessly through parse_instance.
std::string serialize_instance(const Instance& inst);

}  // namespace lobby

#endif
