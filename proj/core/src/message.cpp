#include "mimodof/message.hpp"

#include <stdexcept>

namespace mimodof {

std::string_view msg_tag(Msg m) {
  switch (m) {
    case Msg::W11: return "11";
    case Msg::W21: return "21";
    case Msg::W12: return "12";
    case Msg::W22: return "22";
    case Msg::W1: return "1";
    case Msg::W2: return "2";
    case Msg::W01: return "01";
    case Msg::W02: return "02";
    case Msg::W0: return "0";
  }
  return "?";
}

std::optional<Msg> msg_from_tag(std::string_view tag) {
  for (Msg m : kAllMessages) {
    if (msg_tag(m) == tag) return m;
  }
  return std::nullopt;
}

NodePair tx_set(Msg m) {
  switch (m) {
    case Msg::W11:
    case Msg::W21:
    case Msg::W1: return {true, false};
    case Msg::W12:
    case Msg::W22:
    case Msg::W2: return {false, true};
    case Msg::W01:
    case Msg::W02:
    case Msg::W0: return {true, true};
  }
  return {};
}

NodePair rx_set(Msg m) {
  switch (m) {
    case Msg::W11:
    case Msg::W12:
    case Msg::W01: return {true, false};
    case Msg::W21:
    case Msg::W22:
    case Msg::W02: return {false, true};
    case Msg::W1:
    case Msg::W2:
    case Msg::W0: return {true, true};
  }
  return {};
}

std::vector<Msg> MessageSet::members() const {
  std::vector<Msg> out;
  out.reserve(size());
  for (Msg m : kAllMessages) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

MessageSet parse_message_set(std::string_view text) {
  MessageSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tag = text.substr(start, comma - start);
    if (tag.empty()) {
      throw std::invalid_argument("empty message tag in '" + std::string(text) + "'");
    }
    auto m = msg_from_tag(tag);
    if (!m) {
      throw std::invalid_argument("unknown message tag '" + std::string(tag) + "'");
    }
    set.insert(*m);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return set;
}

std::string format_message_set(MessageSet set) {
  std::string out;
  for (Msg m : set.members()) {
    if (!out.empty()) out += ',';
    out += msg_tag(m);
  }
  return out;
}

}  // namespace mimodof
