#ifndef THOMPSON_WIRE_HPP
#define THOMPSON_WIRE_HPP

#include <string>
#include <string_view>

#include "thompson/kex.hpp"

namespace thompson {

// Line-delimited JSON over any reliable byte stream. Message kinds:
//   {"kind":"hello","params":{"s":N,"M":N,"w":{"pos":[...],"neg":[...]}}}
//   {"kind":"token","role":"alice"|"bob","word":{...}}
//   {"kind":"confirm","digest":"<64 hex chars>"}
// The initiator is Alice: hello, token, then reads Bob's token; the confirm
// exchange compares digests without revealing the shared element.

struct WireError : Error {
  using Error::Error;
};

class LineStream {
public:
  virtual ~LineStream() = default;
  virtual bool read_line(std::string& out) = 0;  // false on EOF
  virtual void write_line(std::string_view line) = 0;
};

struct SessionResult {
  bool agreed = false;
  SharedKey key;
  std::string peer_digest;
};

SessionResult run_initiator(LineStream& stream, const ProtocolParams& params,
                            std::uint64_t seed);
SessionResult run_responder(LineStream& stream, std::uint64_t seed);

}  // namespace thompson

#endif
