#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thompson/attack.hpp"
#include "thompson/json_io.hpp"
#include "thompson/kex.hpp"
#include "thompson/net.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/oracle.hpp"
#include "thompson/rng.hpp"
#include "thompson/wire.hpp"

namespace {

using namespace thompson;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

// empty word prints as `1` in human-readable output
std::string display(const Word& w) {
  const std::string text = to_text(w);
  return text.empty() ? "1" : text;
}

struct Options {
  bool json = false;
  bool quiet = false;
};

void emit(const Options& opt, const std::string& human, const Json& machine) {
  if (opt.quiet) {
    return;
  }
  if (opt.json) {
    std::cout << machine.dump() << "\n";
  } else {
    std::cout << human << "\n";
  }
}

int cmd_nf(const Options& opt, const std::string& input, bool use_oracle) {
  const Word w = parse_word(input);
  const NormalWord nf =
      use_oracle ? oracle::oracle_normal(w) : normal_form(w);
  emit(opt, display(as_word(nf)), to_json(nf));
  return kExitOk;
}

int cmd_keygen(std::uint32_t s, std::uint64_t M, std::uint64_t seed,
               std::uint64_t w_seed, const std::string& role) {
  const ProtocolParams params = make_params(s, M, w_seed);
  const PrivateKey priv = generate_private_key(params, seed);
  const PublicToken token = (role == "alice") ? alice_token(params, priv)
                                              : bob_token(params, priv);
  Json j;
  j["role"] = role;
  j["params"]["s"] = params.s;
  j["params"]["M"] = params.M;
  j["params"]["w"] = to_json(params.w);
  j["private"]["a"] = to_json(priv.a);
  j["private"]["b"] = to_json(priv.b);
  j["public_token"] = to_json(token.u);
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_kex_demo(const Options& opt, std::uint32_t s, std::uint64_t M,
                 std::uint64_t seed_alice, std::uint64_t seed_bob,
                 std::uint64_t w_seed) {
  const ProtocolParams params = make_params(s, M, w_seed);
  const DemoTranscript t = run_demo(params, seed_alice, seed_bob);
  if (!opt.quiet) {
    std::cout << (opt.json ? t.to_json_text() + "\n" : t.to_text());
  }
  return t.k_equal ? kExitOk : kExitRuntime;
}

int cmd_kex_serve(const Options& opt, std::uint16_t port, std::uint64_t seed) {
  TcpListener listener = TcpListener::bind_port(port);
  if (!opt.quiet) {
    std::cerr << "listening on port " << listener.port() << "\n";
  }
  FdStream stream = listener.accept_one();
  const SessionResult result = run_responder(stream, seed);
  Json j;
  j["role"] = "bob";
  j["agreed"] = result.agreed;
  j["digest"] = result.key.digest_hex();
  emit(opt,
       std::string("agreed: ") + (result.agreed ? "true" : "false") +
           "\ndigest: " + result.key.digest_hex(),
       j);
  return result.agreed ? kExitOk : kExitRuntime;
}

int cmd_kex_connect(const Options& opt, const std::string& host,
                    std::uint16_t port, std::uint32_t s, std::uint64_t M,
                    std::uint64_t seed, std::uint64_t w_seed) {
  const ProtocolParams params = make_params(s, M, w_seed);
  FdStream stream = tcp_connect(host, port);
  const SessionResult result = run_initiator(stream, params, seed);
  Json j;
  j["role"] = "alice";
  j["agreed"] = result.agreed;
  j["digest"] = result.key.digest_hex();
  emit(opt,
       std::string("agreed: ") + (result.agreed ? "true" : "false") +
           "\ndigest: " + result.key.digest_hex(),
       j);
  return result.agreed ? kExitOk : kExitRuntime;
}

Json report_json(const AttackReport& report) {
  Json j;
  j["outcome"] = to_string(report.outcome);
  if (report.outcome == AttackOutcome::Success) {
    j["left_factor"] = to_text(report.left_factor);
    j["right_factor"] = to_text(report.right_factor);
  }
  j["nodes_expanded"] = report.nodes_expanded;
  j["nodes_stored"] = report.nodes_stored;
  j["expanded_from_source"] = report.expanded_from_source;
  j["expanded_from_target"] = report.expanded_from_target;
  j["wall_seconds"] = report.wall_seconds;
  j["frontier_growth_exponent"] = frontier_growth_exponent(report);
  // keep the report readable: at most 200 samples of the frontier series
  Json sizes = Json::array();
  const std::size_t n = report.frontier_sizes.size();
  const std::size_t stride = n <= 200 ? 1 : n / 200;
  for (std::size_t i = 0; i < n; i += stride) {
    sizes.push_back({report.frontier_sizes[i].first,
                     report.frontier_sizes[i].second});
  }
  j["frontier_sizes"] = sizes;
  return j;
}

int cmd_attack(std::uint32_t s, std::uint64_t M, std::uint64_t seed,
               std::uint64_t max_nodes, double max_seconds,
               bool require_success) {
  const ProtocolParams params = make_params(s, M, derive_seed(seed, 'w'));
  const PrivateKey alice =
      generate_private_key(params, derive_seed(seed, 'a'));
  const PublicToken token = alice_token(params, alice);
  const AttackReport report =
      length_attack(params.w, token.u, s, {max_nodes, max_seconds});
  std::cout << report_json(report).dump() << "\n";
  if (require_success && report.outcome != AttackOutcome::Success) {
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_attack_sweep(const Options& opt, const std::string& grid_path,
                     std::uint32_t trials, std::uint64_t max_nodes,
                     double max_seconds, std::uint64_t seed,
                     unsigned parallel) {
  std::ifstream in(grid_path);
  if (!in) {
    throw Error("cannot open grid file " + grid_path);
  }
  Json grid_json = Json::parse(in, nullptr, false);
  if (grid_json.is_discarded() || !grid_json.is_array()) {
    throw ParseError("grid file must hold a JSON array of {s, M} objects");
  }
  std::vector<SweepPoint> grid;
  for (const auto& entry : grid_json) {
    if (!entry.is_object() || !entry.contains("s") || !entry.contains("M")) {
      throw ParseError("grid entries must be {\"s\":N,\"M\":N}");
    }
    grid.push_back(
        {entry["s"].get<std::uint32_t>(), entry["M"].get<std::uint64_t>()});
  }
  const auto rows =
      attack_sweep(grid, trials, {max_nodes, max_seconds}, seed, parallel);
  std::cout << sweep_csv(rows);
  if (!opt.quiet) {
    // per-point aggregates go to stderr so stdout stays machine-readable
    std::cerr << summary_text(summarize_sweep(rows));
  }
  return kExitOk;
}

int cmd_bench_nf(unsigned min_exp, unsigned max_exp, std::uint64_t seed) {
  std::cout << "length,letter_visits,nanoseconds\n";
  for (unsigned exp = min_exp; exp <= max_exp; ++exp) {
    const std::size_t length = std::size_t{1} << exp;
    SplitMix64 rng(derive_seed(seed, exp));
    const Word w = random_word(length, 9, rng);
    stats::reset_letter_visits();
    const auto start = std::chrono::steady_clock::now();
    const NormalWord nf = normal_form(w);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    (void)nf;
    std::cout << length << "," << stats::letter_visits() << ","
              << std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)
                     .count()
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson's group F: normal forms, commuting-subgroup key "
               "exchange, and the length-based attack"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--quiet", opt.quiet, "suppress normal output");

  // nf
  std::string nf_input;
  bool nf_oracle = false;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("word", nf_input,
                 "word in text syntax, e.g. \"x0 x2^-1\" (empty or 1 for the "
                 "identity)");
  nf->add_flag("--oracle", nf_oracle,
               "use the naive rewriting oracle instead of the fast engine");

  // keygen
  std::uint32_t s = 3;
  std::uint64_t M = 256;
  std::uint64_t seed = 0;
  std::uint64_t w_seed = 0;
  std::string role = "alice";
  auto* keygen = app.add_subcommand("keygen", "generate a private key bundle");
  keygen->add_option("--s", s, "subgroup parameter (>= 2)")->required();
  keygen->add_option("--M", M, "target normal-form length (even)")->required();
  keygen->add_option("--seed", seed, "key seed")->required();
  keygen->add_option("--seed-w", w_seed, "base-word seed (default 0)");
  keygen->add_option("--role", role, "alice or bob")
      ->check(CLI::IsMember({"alice", "bob"}));

  // kex demo/serve/connect
  auto* kex = app.add_subcommand("kex", "run the key exchange");
  kex->require_subcommand(1);
  std::uint64_t seed_alice = 0;
  std::uint64_t seed_bob = 0;
  auto* demo = kex->add_subcommand("demo", "run both parties in-process");
  demo->add_option("--s", s, "subgroup parameter")->required();
  demo->add_option("--M", M, "target normal-form length")->required();
  demo->add_option("--seed-alice", seed_alice, "Alice's key seed")->required();
  demo->add_option("--seed-bob", seed_bob, "Bob's key seed")->required();
  demo->add_option("--seed-w", w_seed, "base-word seed (default 0)");

  std::uint16_t port = 0;
  std::string host = "127.0.0.1";
  auto* serve = kex->add_subcommand("serve", "answer one exchange over TCP");
  serve->add_option("--port", port, "TCP port (0 picks one)")->required();
  serve->add_option("--seed", seed, "key seed")->required();

  auto* connect = kex->add_subcommand("connect", "start an exchange over TCP");
  connect->add_option("--host", host, "server host");
  connect->add_option("--port", port, "TCP port")->required();
  connect->add_option("--s", s, "subgroup parameter")->required();
  connect->add_option("--M", M, "target normal-form length")->required();
  connect->add_option("--seed", seed, "key seed")->required();
  connect->add_option("--seed-w", w_seed, "base-word seed (default 0)");

  // attack
  std::uint64_t max_nodes = 1'000'000;
  double max_seconds = 3600.0;
  bool require_success = false;
  auto* attack = app.add_subcommand(
      "attack", "length-based attack against a fresh Alice token");
  attack->add_option("--s", s, "subgroup parameter")->required();
  attack->add_option("--M", M, "target normal-form length")->required();
  attack->add_option("--seed", seed, "key/parameter seed")->required();
  attack->add_option("--max-nodes", max_nodes,
                     "stored-vertex budget across both search sides");
  attack->add_option("--max-seconds", max_seconds, "wall-clock budget");
  attack->add_flag("--require-success", require_success,
                   "exit 2 when the budget runs out first");

  // attack-sweep
  std::string grid_path;
  std::uint32_t trials = 1;
  unsigned parallel = 1;
  auto* sweep = app.add_subcommand(
      "attack-sweep", "attack trials over an (s, M) grid; CSV on stdout");
  sweep->add_option("--grid", grid_path, "JSON array of {\"s\":N,\"M\":N}")
      ->required();
  sweep->add_option("--trials", trials, "trials per grid point")->required();
  sweep->add_option("--seed", seed, "base seed")->required();
  sweep->add_option("--max-nodes", max_nodes, "stored-vertex budget");
  sweep->add_option("--max-seconds", max_seconds, "wall-clock budget");
  sweep->add_option("--parallel", parallel, "worker threads");

  // bench-nf
  unsigned min_exp = 10;
  unsigned max_exp = 20;
  auto* bench = app.add_subcommand(
      "bench-nf", "normal-form cost on random words; CSV on stdout");
  bench->add_option("--min-exp", min_exp, "smallest length as a power of two");
  bench->add_option("--max-exp", max_exp, "largest length as a power of two");
  bench->add_option("--seed", seed, "word seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // 0 is --help
  }

  try {
    if (*nf) {
      return cmd_nf(opt, nf_input, nf_oracle);
    }
    if (*keygen) {
      return cmd_keygen(s, M, seed, w_seed, role);
    }
    if (*demo) {
      return cmd_kex_demo(opt, s, M, seed_alice, seed_bob, w_seed);
    }
    if (*serve) {
      return cmd_kex_serve(opt, port, seed);
    }
    if (*connect) {
      return cmd_kex_connect(opt, host, port, s, M, seed, w_seed);
    }
    if (*attack) {
      return cmd_attack(s, M, seed, max_nodes, max_seconds, require_success);
    }
    if (*sweep) {
      return cmd_attack_sweep(opt, grid_path, trials, max_nodes, max_seconds,
                              seed, parallel);
    }
    if (*bench) {
      return cmd_bench_nf(min_exp, max_exp, seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
