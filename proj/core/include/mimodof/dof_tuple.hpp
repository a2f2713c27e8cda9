#pragma once

#include <array>
#include <map>

#include "mimodof/message.hpp"
#include "mimodof/rational.hpp"

namespace mimodof {

// A 9-vector of exact nonnegative rationals indexed by message. Messages
// outside the active set of whatever region it is checked against are
// expected to be exactly zero.
class DofTuple {
 public:
  DofTuple() { d_.fill(Rat(0)); }
  explicit DofTuple(const std::map<Msg, Rat>& entries) : DofTuple() {
    for (const auto& [m, v] : entries) set(m, v);
  }

  const Rat& operator[](Msg m) const { return d_[index_of(m)]; }
  void set(Msg m, const Rat& v) { d_[index_of(m)] = v; }

  // Messages with a nonzero entry.
  MessageSet support() const {
    MessageSet s;
    for (Msg m : kAllMessages) {
      if (d_[index_of(m)] != Rat(0)) s.insert(m);
    }
    return s;
  }

  bool is_nonnegative() const {
    for (const auto& v : d_) {
      if (v < Rat(0)) return false;
    }
    return true;
  }

  bool is_integer_valued() const {
    for (const auto& v : d_) {
      if (!is_integer(v)) return false;
    }
    return true;
  }

  // Least common multiple of the entry denominators (1 for integer tuples).
  long long lcm_denominator() const {
    long long l = 1;
    for (const auto& v : d_) l = lcm_ll(l, v.denominator());
    return l;
  }

  Rat sum() const {
    Rat s(0);
    for (const auto& v : d_) s += v;
    return s;
  }

  DofTuple scaled(const Rat& factor) const {
    DofTuple out;
    for (Msg m : kAllMessages) out.set(m, d_[index_of(m)] * factor);
    return out;
  }

  bool operator==(const DofTuple&) const = default;

  // Lexicographic comparison in canonical message order; used for
  // deterministic vertex ordering and tie-breaking.
  bool operator<(const DofTuple& other) const { return d_ < other.d_; }

  std::string to_string(MessageSet active = MessageSet::all()) const {
    std::string out = "(";
    bool first = true;
    for (Msg m : active.members()) {
      if (!first) out += ",";
      first = false;
      out += "d";
      out += msg_tag(m);
      out += "=";
      out += format_rat((*this)[m]);
    }
    return out + ")";
  }

 private:
  std::array<Rat, kNumMessages> d_;
};

}  // namespace mimodof
