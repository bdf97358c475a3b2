#include "thompson/kex.hpp"

#include <openssl/evp.h>

#include "thompson/json_io.hpp"
#include "thompson/normal_form.hpp"

namespace thompson {

void validate(const ProtocolParams& params) {
  if (params.s < 2) {
    throw Error("protocol parameter s must be at least 2");
  }
  if (params.M == 0 || params.M % 2 != 0) {
    throw Error("protocol parameter M must be a positive even number");
  }
}

ProtocolParams make_params(std::uint32_t s, std::uint64_t M,
                           std::uint64_t w_seed) {
  ProtocolParams params;
  params.s = s;
  params.M = M;
  validate(params);
  SplitMix64 rng(derive_seed(w_seed, 'w'));
  params.w = gen_base_word({s, M}, rng);
  return params;
}

PrivateKey generate_private_key(const ProtocolParams& params,
                                std::uint64_t seed) {
  validate(params);
  SplitMix64 root(seed);
  SplitMix64 rng_a = root.substream();
  SplitMix64 rng_b = root.substream();
  PrivateKey key;
  key.a = gen_A({params.s, params.M}, rng_a);
  key.b = gen_B({params.s, params.M}, rng_b);
  return key;
}

namespace {

void check_key(const ProtocolParams& params, const PrivateKey& priv) {
  if (!in_A(priv.a, params.s)) {
    throw InvalidKeyError("private factor a is not in A_s");
  }
  if (!in_B(priv.b, params.s)) {
    throw InvalidKeyError("private factor b is not in B_s");
  }
}

std::array<std::uint8_t, 32> sha256(const std::string& bytes) {
  std::array<std::uint8_t, 32> out{};
  unsigned int written = 0;
  EVP_Digest(bytes.data(), bytes.size(), out.data(), &written, EVP_sha256(),
             nullptr);
  return out;
}

}  // namespace

std::string SharedKey::digest_hex() const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t byte : digest) {
    out += hex[byte >> 4];
    out += hex[byte & 0xf];
  }
  return out;
}

SharedKey shared_key_from(const NormalWord& k) {
  SharedKey out;
  out.k = k;
  out.digest = sha256(to_canonical_json(k));
  return out;
}

PublicToken alice_token(const ProtocolParams& params, const PrivateKey& priv) {
  validate(params);
  check_key(params, priv);
  return {normal_product(
      {&priv.a.body(), &params.w.body(), &priv.b.body()})};
}

PublicToken bob_token(const ProtocolParams& params, const PrivateKey& priv) {
  validate(params);
  check_key(params, priv);
  return {normal_product(
      {&priv.b.body(), &params.w.body(), &priv.a.body()})};
}

SharedKey alice_shared(const ProtocolParams& /*params*/,
                       const PrivateKey& priv, const PublicToken& from_bob) {
  return shared_key_from(normal_product(
      {&priv.a.body(), &from_bob.u.body(), &priv.b.body()}));
}

SharedKey bob_shared(const ProtocolParams& /*params*/, const PrivateKey& priv,
                     const PublicToken& from_alice) {
  return shared_key_from(normal_product(
      {&priv.b.body(), &from_alice.u.body(), &priv.a.body()}));
}

std::string DemoTranscript::to_json_text() const {
  Json j;
  j["params"]["s"] = params.s;
  j["params"]["M"] = params.M;
  j["params"]["w"] = to_json(params.w);
  j["alice_token"] = to_json(alice.u);
  j["bob_token"] = to_json(bob.u);
  j["alice_digest"] = alice_key.digest_hex();
  j["bob_digest"] = bob_key.digest_hex();
  j["k_equal"] = k_equal;
  j["shared_length"] = alice_key.k.length();
  return j.dump();
}

std::string DemoTranscript::to_text() const {
  std::string out;
  out += "s: " + std::to_string(params.s) + "\n";
  out += "M: " + std::to_string(params.M) + "\n";
  out += "w: " + thompson::to_text(as_word(params.w)) + "\n";
  out += "alice_token: " + thompson::to_text(as_word(alice.u)) + "\n";
  out += "bob_token: " + thompson::to_text(as_word(bob.u)) + "\n";
  out += "alice_digest: " + alice_key.digest_hex() + "\n";
  out += "bob_digest: " + bob_key.digest_hex() + "\n";
  out += "K_equal: " + std::string(k_equal ? "true" : "false") + "\n";
  return out;
}

DemoTranscript run_demo(const ProtocolParams& params, std::uint64_t seed_alice,
                        std::uint64_t seed_bob) {
  validate(params);
  DemoTranscript t;
  t.params = params;
  const PrivateKey alice_priv = generate_private_key(params, seed_alice);
  const PrivateKey bob_priv = generate_private_key(params, seed_bob);
  t.alice = alice_token(params, alice_priv);
  t.bob = bob_token(params, bob_priv);
  t.alice_key = alice_shared(params, alice_priv, t.bob);
  t.bob_key = bob_shared(params, bob_priv, t.alice);
  t.k_equal = (t.alice_key == t.bob_key);
  return t;
}

}  // namespace thompson
