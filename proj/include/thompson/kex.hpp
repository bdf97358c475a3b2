#ifndef THOMPSON_KEX_HPP
#define THOMPSON_KEX_HPP

#include <array>
#include <cstdint>
#include <string>

#include "thompson/normal_word.hpp"
#include "thompson/subgroups.hpp"

namespace thompson {

// Decomposition-problem key exchange over the commuting pair (A_s, B_s).
// Alice holds (a_1, b_1), publishes the normal form of a_1 w b_1; Bob holds
// (a_2, b_2), publishes the normal form of b_2 w a_2; both sides reach
// K = a_1 b_2 w a_2 b_1.

struct InvalidKeyError : Error {
  using Error::Error;
};

struct ProtocolParams {
  std::uint32_t s = 3;
  std::uint64_t M = 256;
  NormalWord w;  // public base word
};

/// Rejects s < 2 and odd or zero M.
void validate(const ProtocolParams& params);

/// Public parameters with the base word grown from w_seed.
ProtocolParams make_params(std::uint32_t s, std::uint64_t M,
                           std::uint64_t w_seed);

struct PrivateKey {
  NormalWord a;  // element of A_s
  NormalWord b;  // element of B_s
};

/// Both factors from independent substreams of one seed.
PrivateKey generate_private_key(const ProtocolParams& params,
                                std::uint64_t seed);

struct PublicToken {
  NormalWord u;
};

struct SharedKey {
  NormalWord k;
  std::array<std::uint8_t, 32> digest{};  // SHA-256 of the canonical JSON of k

  std::string digest_hex() const;
  bool operator==(const SharedKey&) const = default;
};

SharedKey shared_key_from(const NormalWord& k);

PublicToken alice_token(const ProtocolParams& params, const PrivateKey& priv);
PublicToken bob_token(const ProtocolParams& params, const PrivateKey& priv);
SharedKey alice_shared(const ProtocolParams& params, const PrivateKey& priv,
                       const PublicToken& from_bob);
SharedKey bob_shared(const ProtocolParams& params, const PrivateKey& priv,
                     const PublicToken& from_alice);

/// Both roles run in-process; the JSON rendering is byte-stable for fixed
/// seeds, which is the replayability contract of the demo.
struct DemoTranscript {
  ProtocolParams params;
  PublicToken alice;
  PublicToken bob;
  SharedKey alice_key;
  SharedKey bob_key;
  bool k_equal = false;

  std::string to_json_text() const;
  std::string to_text() const;
};

DemoTranscript run_demo(const ProtocolParams& params, std::uint64_t seed_alice,
                        std::uint64_t seed_bob);

}  // namespace thompson

#endif
