#include "thompson/attack.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <queue>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "thompson/normal_form.hpp"

namespace thompson {

const char* to_string(AttackOutcome outcome) {
  return outcome == AttackOutcome::Success ? "success" : "budget_exhausted";
}

namespace {

using Clock = std::chrono::steady_clock;

// 128-bit content hash of a canonical word; vertex identity in the search.
struct WordKey {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const WordKey&) const = default;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const { return k.a; }
};

WordKey key_of(const SeminormalWord& w) {
  WordKey k{0x9e3779b97f4a7c15ull, 0xd1b54a32d192ed03ull};
  auto feed = [&k](std::uint64_t v) {
    k.a = mix64(k.a ^ v);
    k.b = mix64(k.b + v + 0x2545f4914f6cdd1dull);
  };
  feed(w.pos.size());
  for (Index i : w.pos) {
    feed(i);
  }
  feed(~w.neg.size());
  for (Index i : w.neg) {
    feed(i);
  }
  return k;
}

// Edge labels: [0, 2s) multiply on the left by x_0 x_k^{-1} (k = 1 + l/2,
// inverted when l is odd); [2s, 4s) multiply on the right by x_k
// (k = s + 1 + (l - 2s)/2, inverted when l is odd).
struct Moves {
  std::vector<SeminormalWord> left;   // 2s signed S_A generators
  std::vector<SeminormalWord> right;  // 2s signed S_B generators

  explicit Moves(std::uint32_t s) {
    for (const NormalWord& g : a_generators(s)) {
      left.push_back(g.body());
      left.push_back(inverse(g.body()));
    }
    for (const NormalWord& g : b_generators(s)) {
      right.push_back(g.body());
      right.push_back(inverse(g.body()));
    }
  }

  std::size_t count() const { return left.size() + right.size(); }

  NormalWord apply(std::size_t label, const NormalWord& u) const {
    if (label < left.size()) {
      return normal_product({&left[label], &u.body()});
    }
    return normal_product({&u.body(), &right[label - left.size()]});
  }

  /// The label's generator as a plain word (for path reconstruction).
  Word label_word(std::size_t label) const {
    const SeminormalWord& g =
        label < left.size() ? left[label] : right[label - left.size()];
    return as_word(g);
  }

  bool is_left(std::size_t label) const { return label < left.size(); }
};

constexpr std::int32_t kRootLabel = -1;

struct Node {
  std::uint32_t parent = 0;
  std::int32_t label = kRootLabel;
};

// (normal-form length, insertion sequence, node id); FIFO among equal lengths
using FrontierEntry = std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>;

// Node words are not stored (a million token-sized words would dominate
// memory); they are replayed from the label path. Every expanded node at a
// depth divisible by kCacheStride keeps its word, so a replay runs at most
// kCacheStride products.
constexpr std::uint32_t kCacheStride = 8;

struct Side {
  const NormalWord* root = nullptr;
  std::vector<Node> nodes;
  std::vector<std::uint32_t> depth;
  std::unordered_map<WordKey, std::uint32_t, WordKeyHash> seen;
  std::unordered_map<std::uint32_t, NormalWord> waypoint_words;
  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>,
                      std::greater<>>
      frontier;
  std::uint64_t seq = 0;
  std::uint64_t expanded = 0;

  void init(const NormalWord& r) {
    root = &r;
    nodes.push_back(Node{});
    depth.push_back(0);
    seen.emplace(key_of(r.body()), 0);
    frontier.emplace(r.length(), seq++, 0);
  }

  std::uint64_t frontier_size() const { return frontier.size(); }

  std::vector<std::int32_t> labels_to_root(std::uint32_t id) const {
    std::vector<std::int32_t> labels;
    for (std::uint32_t cur = id; nodes[cur].label != kRootLabel;
         cur = nodes[cur].parent) {
      labels.push_back(nodes[cur].label);
    }
    return labels;
  }

  void note_expanded(std::uint32_t id, const NormalWord& word) {
    ++expanded;
    if (depth[id] % kCacheStride == 0 && nodes[id].label != kRootLabel) {
      waypoint_words.emplace(id, word);
    }
  }

  /// Replays labels from the nearest stored ancestor word.
  NormalWord materialize(std::uint32_t id, const Moves& moves) const {
    std::vector<std::int32_t> labels;
    std::uint32_t cur = id;
    const NormalWord* base = nullptr;
    while (nodes[cur].label != kRootLabel) {
      if (const auto hit = waypoint_words.find(cur);
          hit != waypoint_words.end()) {
        base = &hit->second;
        break;
      }
      labels.push_back(nodes[cur].label);
      cur = nodes[cur].parent;
    }
    NormalWord u = (base != nullptr) ? *base : *root;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      u = moves.apply(static_cast<std::size_t>(*it), u);
    }
    return u;
  }

  /// Left and right products accumulated along root -> id.
  std::pair<Word, Word> path_products(std::uint32_t id,
                                      const Moves& moves) const {
    const auto labels = labels_to_root(id);
    Word left_product;
    Word right_product;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      const auto label = static_cast<std::size_t>(*it);
      if (moves.is_left(label)) {
        left_product = concat(moves.label_word(label), left_product);
      } else {
        right_product = concat(right_product, moves.label_word(label));
      }
    }
    return {left_product, right_product};
  }
};

struct Meeting {
  std::uint32_t source_id = 0;
  std::uint32_t target_id = 0;
};

bool verified_success(const NormalWord& w, const NormalWord& w_prime,
                      const Moves& moves, const Side& source,
                      const Side& target, const Meeting& meet,
                      AttackReport& report) {
  const auto [source_left, source_right] =
      source.path_products(meet.source_id, moves);
  const auto [target_left, target_right] =
      target.path_products(meet.target_id, moves);
  // meet = L_s w R_s = L_t w' R_t, so w' = L_t^{-1} L_s w R_s R_t^{-1}
  const Word x1 = concat(invert(target_left), source_left);
  const Word x2 = concat(source_right, invert(target_right));
  const SeminormalWord sx1 = seminormal_form(x1);
  const SeminormalWord sx2 = seminormal_form(x2);
  const NormalWord check = normal_product({&sx1, &w.body(), &sx2});
  if (!(check == w_prime)) {
    return false;  // 128-bit key collision; treat as a non-match
  }
  report.outcome = AttackOutcome::Success;
  report.left_factor = x1;
  report.right_factor = x2;
  return true;
}

}  // namespace

AttackReport length_attack(const NormalWord& w, const NormalWord& w_prime,
                           std::uint32_t s, const AttackBudget& budget) {
  if (s < 2) {
    throw Error("attack requires s >= 2");
  }
  const auto start = Clock::now();
  const Moves moves(s);
  AttackReport report;
  auto wall = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  if (w == w_prime) {
    // the start sets already intersect; empty factors
    report.outcome = AttackOutcome::Success;
    report.nodes_stored = 1;
    report.wall_seconds = wall();
    return report;
  }

  Side source;  // rooted at w
  Side target;  // rooted at w'
  source.init(w);
  target.init(w_prime);
  report.nodes_stored = 2;

  // Expands the shortest unexpanded vertex of one side; returns true when a
  // verified meeting point ends the search.
  auto expand_one = [&](Side& self, const Side& other,
                        bool self_is_source) -> bool {
    if (self.frontier.empty()) {
      return false;
    }
    const std::uint32_t id = std::get<2>(self.frontier.top());
    self.frontier.pop();
    const NormalWord u = self.materialize(id, moves);
    self.note_expanded(id, u);
    ++report.nodes_expanded;
    for (std::size_t label = 0; label < moves.count(); ++label) {
      const NormalWord v = moves.apply(label, u);
      const WordKey key = key_of(v.body());
      if (self.seen.contains(key)) {
        continue;
      }
      const auto node_id = static_cast<std::uint32_t>(self.nodes.size());
      self.nodes.push_back(Node{id, static_cast<std::int32_t>(label)});
      self.depth.push_back(self.depth[id] + 1);
      self.seen.emplace(key, node_id);
      self.frontier.emplace(v.length(), self.seq++, node_id);
      ++report.nodes_stored;
      if (const auto hit = other.seen.find(key); hit != other.seen.end()) {
        const Meeting meet = self_is_source
                                 ? Meeting{node_id, hit->second}
                                 : Meeting{hit->second, node_id};
        const auto& src = self_is_source ? self : other;
        const auto& tgt = self_is_source ? other : self;
        if (verified_success(w, w_prime, moves, src, tgt, meet, report)) {
          return true;
        }
      }
      if (report.nodes_stored >= budget.max_nodes) {
        return false;
      }
    }
    return false;
  };

  while (report.nodes_stored < budget.max_nodes &&
         wall() < budget.max_seconds) {
    if (source.frontier.empty() && target.frontier.empty()) {
      break;
    }
    if (expand_one(source, target, true)) {
      break;
    }
    if (report.nodes_stored >= budget.max_nodes) {
      break;
    }
    if (expand_one(target, source, false)) {
      break;
    }
    report.frontier_sizes.emplace_back(source.frontier_size(),
                                       target.frontier_size());
  }

  report.expanded_from_source = source.expanded;
  report.expanded_from_target = target.expanded;
  report.wall_seconds = wall();
  return report;
}

double frontier_growth_exponent(const AttackReport& report) {
  // slope of ln(frontier) over rounds, by least squares
  std::vector<double> ys;
  for (const auto& [a, b] : report.frontier_sizes) {
    const auto total = a + b;
    if (total > 0) {
      ys.push_back(std::log(static_cast<double>(total)));
    }
  }
  if (ys.size() < 2) {
    return 0.0;
  }
  const double n = static_cast<double>(ys.size());
  double sum_x = 0;
  double sum_y = 0;
  double sum_xx = 0;
  double sum_xy = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double x = static_cast<double>(i);
    sum_x += x;
    sum_y += ys[i];
    sum_xx += x * x;
    sum_xy += x * ys[i];
  }
  const double denom = n * sum_xx - sum_x * sum_x;
  if (denom == 0) {
    return 0.0;
  }
  return (n * sum_xy - sum_x * sum_y) / denom;
}

std::vector<SweepRow> attack_sweep(std::span<const SweepPoint> grid,
                                   std::uint32_t trials,
                                   const AttackBudget& budget,
                                   std::uint64_t base_seed,
                                   unsigned parallel) {
  struct Task {
    SweepPoint point;
    std::uint32_t trial;
  };
  std::vector<Task> tasks;
  for (const SweepPoint& point : grid) {
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
      tasks.push_back({point, trial});
    }
  }
  std::vector<SweepRow> rows(tasks.size());

  auto run_task = [&](std::size_t i) {
    const auto& [point, trial] = tasks[i];
    const ProtocolParams params = make_params(
        point.s, point.M, derive_seed(base_seed, point.s, point.M, trial));
    const PrivateKey alice = generate_private_key(
        params, derive_seed(base_seed, point.s, point.M, trial ^ 0xa11ceull));
    const PublicToken token = alice_token(params, alice);
    const AttackReport report =
        length_attack(params.w, token.u, point.s, budget);
    rows[i] = {point.s,
               point.M,
               trial,
               report.outcome,
               report.nodes_stored,
               report.wall_seconds,
               frontier_growth_exponent(report)};
  };

  if (parallel <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      run_task(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const auto n_workers = static_cast<unsigned>(
        std::min<std::size_t>(parallel, tasks.size()));
    workers.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) {
            return;
          }
          run_task(i);
        }
      });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "s,M,trial,outcome,nodes,seconds\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.s) + "," + std::to_string(row.M) + "," +
           std::to_string(row.trial) + "," + to_string(row.outcome) + "," +
           std::to_string(row.nodes) + "," + std::to_string(row.seconds) +
           "\n";
  }
  return out;
}

std::vector<SweepSummary> summarize_sweep(std::span<const SweepRow> rows) {
  std::vector<SweepSummary> out;
  std::vector<std::vector<std::uint64_t>> success_nodes;
  auto index_of = [&](std::uint32_t s, std::uint64_t M) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].s == s && out[i].M == M) {
        return i;
      }
    }
    out.push_back(SweepSummary{s, M});
    success_nodes.emplace_back();
    return out.size() - 1;
  };
  for (const SweepRow& row : rows) {
    const std::size_t i = index_of(row.s, row.M);
    ++out[i].trials;
    out[i].mean_growth_exponent += row.growth_exponent;
    if (row.outcome == AttackOutcome::Success) {
      ++out[i].successes;
      success_nodes[i].push_back(row.nodes);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].trials > 0) {
      out[i].mean_growth_exponent /= out[i].trials;
    }
    if (!success_nodes[i].empty()) {
      std::sort(success_nodes[i].begin(), success_nodes[i].end());
      out[i].median_nodes_to_success =
          success_nodes[i][success_nodes[i].size() / 2];
    }
  }
  return out;
}

std::string summary_text(std::span<const SweepSummary> summaries) {
  std::string out;
  for (const SweepSummary& summary : summaries) {
    std::ostringstream line;
    line << "s=" << summary.s << " M=" << summary.M << ": " << summary.successes
         << "/" << summary.trials << " succeeded";
    if (summary.successes > 0) {
      line << ", median nodes to success " << summary.median_nodes_to_success;
    }
    line << ", mean frontier growth exp " << summary.mean_growth_exponent
         << "\n";
    out += line.str();
  }
  return out;
}

}  // namespace thompson
