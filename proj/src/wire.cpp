#include "thompson/wire.hpp"

#include "thompson/json_io.hpp"

namespace thompson {

namespace {

Json read_message(LineStream& stream, const char* expected_kind) {
  std::string line;
  if (!stream.read_line(line)) {
    throw WireError(std::string("connection closed while waiting for '") +
                    expected_kind + "'");
  }
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("kind")) {
    throw WireError("malformed message line");
  }
  if (j["kind"] != expected_kind) {
    throw WireError(std::string("expected '") + expected_kind +
                    "' message, got '" + j["kind"].dump() + "'");
  }
  return j;
}

void send_hello(LineStream& stream, const ProtocolParams& params) {
  Json j;
  j["kind"] = "hello";
  j["params"]["s"] = params.s;
  j["params"]["M"] = params.M;
  j["params"]["w"] = to_json(params.w);
  stream.write_line(j.dump());
}

ProtocolParams read_hello(LineStream& stream) {
  const Json j = read_message(stream, "hello");
  if (!j.contains("params") || !j["params"].is_object()) {
    throw WireError("hello carries no params");
  }
  const Json& p = j["params"];
  if (!p.contains("s") || !p["s"].is_number_unsigned() || !p.contains("M") ||
      !p["M"].is_number_unsigned() || !p.contains("w")) {
    throw WireError("hello params are incomplete");
  }
  ProtocolParams params;
  params.s = p["s"].get<std::uint32_t>();
  params.M = p["M"].get<std::uint64_t>();
  params.w = normal_word_from_json(p["w"]);  // rejects non-canonical words
  validate(params);
  return params;
}

void send_token(LineStream& stream, const char* role,
                const PublicToken& token) {
  Json j;
  j["kind"] = "token";
  j["role"] = role;
  j["word"] = to_json(token.u);
  stream.write_line(j.dump());
}

PublicToken read_token(LineStream& stream, const char* role) {
  const Json j = read_message(stream, "token");
  if (!j.contains("role") || j["role"] != role) {
    throw WireError(std::string("expected token from ") + role);
  }
  if (!j.contains("word")) {
    throw WireError("token carries no word");
  }
  return {normal_word_from_json(j["word"])};
}

void send_confirm(LineStream& stream, const SharedKey& key) {
  Json j;
  j["kind"] = "confirm";
  j["digest"] = key.digest_hex();
  stream.write_line(j.dump());
}

std::string read_confirm(LineStream& stream) {
  const Json j = read_message(stream, "confirm");
  if (!j.contains("digest") || !j["digest"].is_string()) {
    throw WireError("confirm carries no digest");
  }
  return j["digest"].get<std::string>();
}

}  // namespace

SessionResult run_initiator(LineStream& stream, const ProtocolParams& params,
                            std::uint64_t seed) {
  validate(params);
  const PrivateKey priv = generate_private_key(params, seed);
  send_hello(stream, params);
  send_token(stream, "alice", alice_token(params, priv));
  const PublicToken bob = read_token(stream, "bob");
  SessionResult result;
  result.key = alice_shared(params, priv, bob);
  send_confirm(stream, result.key);
  result.peer_digest = read_confirm(stream);
  result.agreed = (result.peer_digest == result.key.digest_hex());
  return result;
}

SessionResult run_responder(LineStream& stream, std::uint64_t seed) {
  const ProtocolParams params = read_hello(stream);
  const PrivateKey priv = generate_private_key(params, seed);
  const PublicToken alice = read_token(stream, "alice");
  send_token(stream, "bob", bob_token(params, priv));
  SessionResult result;
  result.key = bob_shared(params, priv, alice);
  result.peer_digest = read_confirm(stream);
  send_confirm(stream, result.key);
  result.agreed = (result.peer_digest == result.key.digest_hex());
  return result;
}

}  // namespace thompson
