#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimodof {

// The nine messages of the 2x2 interference network, identified by where
// they originate and where they are wanted:
//   W11 W12 W21 W22 : private, Wrt goes from transmitter t to receiver r
//   W01 W02         : known to both transmitters, wanted at one receiver
//   W1  W2          : multicast from one transmitter, wanted at both receivers
//   W0              : known to both transmitters, wanted at both receivers
//
// Canonical index order matches the 9-tuple (d11,d21,d12,d22,d1,d2,d01,d02,d0)
// used everywhere in the region code and in serialized output.
enum class Msg : std::uint8_t {
  W11 = 0,
  W21 = 1,
  W12 = 2,
  W22 = 3,
  W1 = 4,
  W2 = 5,
  W01 = 6,
  W02 = 7,
  W0 = 8,
};

inline constexpr int kNumMessages = 9;

inline constexpr std::array<Msg, kNumMessages> kAllMessages = {
    Msg::W11, Msg::W21, Msg::W12, Msg::W22, Msg::W1,
    Msg::W2,  Msg::W01, Msg::W02, Msg::W0};

inline constexpr int index_of(Msg m) { return static_cast<int>(m); }

// Tag strings follow the subscript convention: "11".."22", "1", "2",
// "01", "02", "0".
std::string_view msg_tag(Msg m);
std::optional<Msg> msg_from_tag(std::string_view tag);

struct NodePair {
  bool first = false;   // T1 / R1
  bool second = false;  // T2 / R2
  bool operator==(const NodePair&) const = default;
};

// Transmitters that know the message / receivers that want it.
NodePair tx_set(Msg m);
NodePair rx_set(Msg m);

// A subset of the nine messages as a bitmask.
class MessageSet {
 public:
  constexpr MessageSet() = default;
  constexpr explicit MessageSet(std::uint16_t bits) : bits_(bits) {}
  static constexpr MessageSet all() { return MessageSet(0x1FF); }
  static MessageSet of(std::initializer_list<Msg> msgs) {
    MessageSet s;
    for (Msg m : msgs) s.insert(m);
    return s;
  }

  constexpr bool contains(Msg m) const {
    return (bits_ >> index_of(m)) & 1u;
  }
  constexpr void insert(Msg m) { bits_ |= std::uint16_t(1u << index_of(m)); }
  constexpr void erase(Msg m) { bits_ &= std::uint16_t(~(1u << index_of(m))); }
  constexpr int size() const { return std::popcount(std::uint32_t(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }

  constexpr bool is_subset_of(MessageSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr MessageSet intersect(MessageSet other) const {
    return MessageSet(bits_ & other.bits_);
  }

  // Members in canonical order.
  std::vector<Msg> members() const;

  bool operator==(const MessageSet&) const = default;

 private:
  std::uint16_t bits_ = 0;
};

// Parses a comma-separated tag list such as "11,22,0".
MessageSet parse_message_set(std::string_view text);
std::string format_message_set(MessageSet set);

}  // namespace mimodof
