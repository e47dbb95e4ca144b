#include "sortlab/networks.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <functional>
#include <ostream>
#include <queue>
#include <unordered_set>

#include "sortlab/error.hpp"

namespace sortlab {

const char* to_string(NetworkKind kind) noexcept {
  switch (kind) {
    case NetworkKind::SequentialStacks: return "sequential-stacks";
    case NetworkKind::ParallelStacks: return "parallel-stacks";
    case NetworkKind::ParallelQueues: return "parallel-queues";
  }
  return "unknown";
}

// --- replay ------------------------------------------------------------------

std::vector<std::uint32_t> replay(const NetworkTrace& trace, const Permutation& input) {
  if (trace.device_count == 0) throw InvalidArgument("trace has no devices");
  const bool queues = trace.kind == NetworkKind::ParallelQueues;
  const bool sequential = trace.kind == NetworkKind::SequentialStacks;
  std::vector<std::deque<std::uint32_t>> devices(trace.device_count);
  std::vector<std::uint32_t> output;
  std::size_t cursor = 0;
  // Sequential transfers: the element popped from S_{j} waiting to land on S_{j-1}.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> in_hand;

  for (std::size_t step = 0; step < trace.ops.size(); ++step) {
    const NetworkOp op = trace.ops[step];
    if (op.device >= trace.device_count) {
      throw IllegalMove(step, "device " + std::to_string(op.device) + " does not exist");
    }
    auto& dev = devices[op.device];
    if (op.kind == OpKind::Push) {
      std::uint32_t x;
      if (in_hand) {
        if (op.device + 1 != in_hand->second) {
          throw IllegalMove(step, "element popped from stack " + std::to_string(in_hand->second) +
                                      " must land on stack " + std::to_string(in_hand->second - 1));
        }
        x = in_hand->first;
        in_hand.reset();
      } else {
        if (sequential && op.device + 1 != trace.device_count) {
          throw IllegalMove(step, "input enters only the last stack");
        }
        if (cursor == input.size()) throw IllegalMove(step, "push with exhausted input");
        x = input[cursor++];
      }
      dev.push_back(x);
    } else {
      if (in_hand) throw IllegalMove(step, "pop while a transferred element is in hand");
      if (dev.empty()) throw IllegalMove(step, "pop of empty device " + std::to_string(op.device));
      std::uint32_t x;
      if (queues) {
        x = dev.front();
        dev.pop_front();
      } else {
        x = dev.back();
        dev.pop_back();
      }
      if (sequential && op.device > 0) {
        in_hand.emplace(x, op.device);
      } else {
        output.push_back(x);
      }
    }
  }
  if (in_hand) throw IllegalMove(trace.ops.size(), "trace ends mid-transfer");
  return output;
}

void write_network_trace_csv(const NetworkTrace& trace, std::ostream& out) {
  out << "step,op,device\n";
  for (std::size_t step = 0; step < trace.ops.size(); ++step) {
    const auto& op = trace.ops[step];
    out << step << ',' << (op.kind == OpKind::Push ? "push" : "pop") << ',' << op.device << '\n';
  }
}

// --- parallel devices ----------------------------------------------------------

namespace {

// Phase 2 shared by stacks and queues: keep emitting the smallest exposed
// element. `exposed(d)` is the top (stack) or front (queue) of device d.
template <typename Devices, typename Exposed, typename Remove>
void drain_in_order(Devices& devices, NetworkTrace& trace, std::vector<std::uint32_t>& out,
                    Exposed exposed, Remove remove) {
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (value, device)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::uint32_t d = 0; d < devices.size(); ++d) {
    if (!devices[d].empty()) heap.emplace(exposed(devices[d]), d);
  }
  while (!heap.empty()) {
    const auto [value, d] = heap.top();
    heap.pop();
    remove(devices[d]);
    trace.ops.push_back({OpKind::Pop, d});
    out.push_back(value);
    if (!devices[d].empty()) heap.emplace(exposed(devices[d]), d);
  }
}

}  // namespace

ParallelSortResult parallel_stack_sort(const Permutation& pi) {
  NetworkTrace trace{NetworkKind::ParallelStacks, 0, pi.size(), {}};
  trace.ops.reserve(2 * pi.size());
  std::vector<std::vector<std::uint32_t>> stacks;
  for (std::uint32_t x : pi.values()) {
    std::size_t j = 0;
    while (j < stacks.size() && stacks[j].back() < x) ++j;
    if (j == stacks.size()) stacks.emplace_back();
    stacks[j].push_back(x);
    trace.ops.push_back({OpKind::Push, static_cast<std::uint32_t>(j)});
  }
  const std::size_t used = stacks.size();
  trace.device_count = used;
  std::vector<std::uint32_t> out;
  out.reserve(pi.size());
  drain_in_order(
      stacks, trace, out, [](const auto& s) { return s.back(); }, [](auto& s) { s.pop_back(); });
  return {used, std::move(trace), Permutation(std::move(out))};
}

ParallelSortResult parallel_queue_sort(const Permutation& pi) {
  NetworkTrace trace{NetworkKind::ParallelQueues, 0, pi.size(), {}};
  trace.ops.reserve(2 * pi.size());
  std::vector<std::deque<std::uint32_t>> queues;
  for (std::uint32_t x : pi.values()) {
    std::size_t j = 0;
    while (j < queues.size() && queues[j].back() > x) ++j;
    if (j == queues.size()) queues.emplace_back();
    queues[j].push_back(x);
    trace.ops.push_back({OpKind::Push, static_cast<std::uint32_t>(j)});
  }
  const std::size_t used = queues.size();
  trace.device_count = used;
  std::vector<std::uint32_t> out;
  out.reserve(pi.size());
  drain_in_order(
      queues, trace, out, [](const auto& q) { return q.front(); }, [](auto& q) { q.pop_front(); });
  return {used, std::move(trace), Permutation(std::move(out))};
}

// --- sequential stacks -----------------------------------------------------------

SequentialMachine::SequentialMachine(const Permutation& input, std::size_t stacks)
    : input_(input.values().begin(), input.values().end()), stacks_(stacks) {
  if (stacks == 0) throw InvalidArgument("sequential stack machine needs k >= 1");
  trace_.kind = NetworkKind::SequentialStacks;
  trace_.device_count = stacks;
  trace_.n = input_.size();
}

std::optional<std::uint32_t> SequentialMachine::top(std::size_t j) const noexcept {
  if (stacks_[j].empty()) return std::nullopt;
  return stacks_[j].back();
}

bool SequentialMachine::sorted_output() const noexcept {
  for (std::size_t i = 0; i < output_.size(); ++i) {
    if (output_[i] != i + 1) return false;
  }
  return true;
}

void SequentialMachine::apply(SequentialMove move, std::size_t step) {
  const auto last = static_cast<std::uint32_t>(stacks_.size() - 1);
  if (move.kind == SequentialMove::Kind::PushInput) {
    if (cursor_ == input_.size()) throw IllegalMove(step, "push with exhausted input");
    stacks_[last].push_back(input_[cursor_++]);
    trace_.ops.push_back({OpKind::Push, last});
    return;
  }
  const std::uint32_t j = move.stack;
  if (j > last) throw IllegalMove(step, "stack " + std::to_string(j) + " does not exist");
  if (stacks_[j].empty()) throw IllegalMove(step, "pop of empty stack " + std::to_string(j));
  const std::uint32_t x = stacks_[j].back();
  stacks_[j].pop_back();
  trace_.ops.push_back({OpKind::Pop, j});
  if (j == 0) {
    output_.push_back(x);
  } else {
    stacks_[j - 1].push_back(x);
    trace_.ops.push_back({OpKind::Push, j - 1});
  }
}

SequentialStrategy greedy_strategy() {
  return [](const SequentialMachine& m) -> std::optional<SequentialMove> {
    if (auto t = m.top(0); t && *t == m.next_expected()) return SequentialMove::pop(0);
    for (std::uint32_t j = 1; j < m.stack_count(); ++j) {
      const auto here = m.top(j);
      if (!here) continue;
      const auto below = m.top(j - 1);
      if (!below || *below > *here) return SequentialMove::pop(j);
    }
    if (m.input_remaining() > 0) return SequentialMove::push_input();
    return std::nullopt;
  };
}

SequentialStrategy scripted_strategy(std::vector<SequentialMove> moves) {
  auto script = std::make_shared<std::vector<SequentialMove>>(std::move(moves));
  auto next = std::make_shared<std::size_t>(0);
  return [script, next](const SequentialMachine&) -> std::optional<SequentialMove> {
    if (*next == script->size()) return std::nullopt;
    return (*script)[(*next)++];
  };
}

SequentialRun simulate_sequential_stacks(const Permutation& pi, std::size_t k,
                                         const SequentialStrategy& strategy) {
  SequentialMachine machine(pi, k);
  // Every element crosses each of the k stacks once, so a run has at most
  // 2kn moves; a strategy asking for more is stuck in place.
  const std::size_t limit = 2 * k * pi.size();
  std::size_t step = 0;
  while (!machine.finished()) {
    auto move = strategy(machine);
    if (!move) break;
    if (step == limit) throw IllegalMove(step, "strategy exceeded 2kn moves");
    machine.apply(*move, step++);
  }
  const bool success = machine.finished() && machine.sorted_output();
  return {success, machine.trace(),
          std::vector<std::uint32_t>(machine.output().begin(), machine.output().end())};
}

namespace {

class SortSearch {
 public:
  SortSearch(const Permutation& pi, std::size_t k, std::size_t max_states)
      : input_(pi.values().begin(), pi.values().end()), stacks_(k), max_states_(max_states) {}

  std::optional<std::vector<SequentialMove>> run() {
    if (dfs()) return moves_;
    return std::nullopt;
  }

 private:
  std::string key() const {
    std::string s;
    s.push_back(static_cast<char>(cursor_));
    for (const auto& st : stacks_) {
      for (auto v : st) s.push_back(static_cast<char>(v));
      s.push_back('\xff');
    }
    return s;
  }

  void step(SequentialMove mv) {
    moves_.push_back(mv);
    if (mv.kind == SequentialMove::Kind::PushInput) {
      stacks_.back().push_back(input_[cursor_++]);
    } else if (mv.stack == 0) {
      stacks_[0].pop_back();
      ++emitted_;
    } else {
      stacks_[mv.stack - 1].push_back(stacks_[mv.stack].back());
      stacks_[mv.stack].pop_back();
    }
  }

  void undo() {
    const SequentialMove mv = moves_.back();
    moves_.pop_back();
    if (mv.kind == SequentialMove::Kind::PushInput) {
      stacks_.back().pop_back();
      --cursor_;
    } else if (mv.stack == 0) {
      --emitted_;
      stacks_[0].push_back(static_cast<std::uint32_t>(emitted_ + 1));
    } else {
      stacks_[mv.stack].push_back(stacks_[mv.stack - 1].back());
      stacks_[mv.stack - 1].pop_back();
    }
  }

  bool dfs() {
    if (emitted_ == input_.size()) return true;
    const std::uint32_t expected = static_cast<std::uint32_t>(emitted_ + 1);
    // Emitting the needed value at once never hurts, so it is not a branch.
    if (!stacks_[0].empty() && stacks_[0].back() == expected) {
      step(SequentialMove::pop(0));
      if (dfs()) return true;
      undo();
      return false;
    }
    std::string k = key();
    if (dead_.count(k)) return false;
    if (++visited_ > max_states_) {
      throw ResourceError("sequential stack search exceeded " + std::to_string(max_states_) +
                          " states");
    }
    for (std::uint32_t j = 1; j < stacks_.size(); ++j) {
      if (stacks_[j].empty()) continue;
      const std::uint32_t x = stacks_[j].back();
      // S_0 empties in increasing order, so nothing may sit on a smaller value there.
      if (j == 1 && !stacks_[0].empty() && stacks_[0].back() < x) continue;
      step(SequentialMove::pop(j));
      if (dfs()) return true;
      undo();
    }
    if (cursor_ < input_.size()) {
      const std::uint32_t x = input_[cursor_];
      if (!(stacks_.size() == 1 && !stacks_[0].empty() && stacks_[0].back() < x)) {
        step(SequentialMove::push_input());
        if (dfs()) return true;
        undo();
      }
    }
    dead_.insert(std::move(k));
    return false;
  }

  std::vector<std::uint32_t> input_;
  std::size_t cursor_ = 0;
  std::size_t emitted_ = 0;
  std::vector<std::vector<std::uint32_t>> stacks_;
  std::vector<SequentialMove> moves_;
  std::unordered_set<std::string> dead_;
  std::size_t visited_ = 0;
  std::size_t max_states_;
};

}  // namespace

std::optional<std::vector<SequentialMove>> find_sequential_sort(const Permutation& pi,
                                                                std::size_t k,
                                                                const SearchLimits& limits) {
  if (k == 0) throw InvalidArgument("need at least one stack");
  if (pi.size() > limits.max_n) {
    throw InvalidArgument("exhaustive stack search is capped at n = " +
                          std::to_string(limits.max_n) + " (got " + std::to_string(pi.size()) + ")");
  }
  if (pi.size() > 254) throw InvalidArgument("exhaustive stack search supports n <= 254");
  return SortSearch(pi, k, limits.max_states).run();
}

std::optional<std::size_t> min_sequential_stacks(const Permutation& pi, std::size_t k_max,
                                                 const SearchLimits& limits) {
  if (k_max == 0) throw InvalidArgument("k_max must be at least 1");
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (find_sequential_sort(pi, k, limits)) return k;
  }
  return std::nullopt;
}

std::string encode_pushpop(const NetworkTrace& trace) {
  if (trace.kind != NetworkKind::SequentialStacks) {
    throw InvalidArgument(std::string("push/pop encoding needs a sequential-stacks trace, got ") +
                          to_string(trace.kind));
  }
  const std::size_t k = trace.device_count;
  const std::size_t n = trace.n;
  std::vector<std::string> blocks(k);
  for (auto& b : blocks) b.reserve(2 * n);
  for (const auto& op : trace.ops) {
    if (op.device >= k) throw InvalidArgument("trace names a stack beyond k");
    blocks[op.device].push_back(op.kind == OpKind::Push ? '0' : '1');
  }
  std::string bits;
  bits.reserve(2 * k * n);
  for (std::size_t j = 0; j < k; ++j) {
    if (blocks[j].size() != 2 * n) {
      throw InvalidArgument("stack " + std::to_string(j) + " has " +
                            std::to_string(blocks[j].size()) + " operations; a complete run has 2n = " +
                            std::to_string(2 * n));
    }
    bits += blocks[j];
  }
  return bits;
}

Permutation decode_pushpop(std::string_view bits, std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("decode_pushpop needs n >= 1 and k >= 1");
  if (bits.size() != 2 * k * n) {
    throw InvalidArgument("expected 2kn = " + std::to_string(2 * k * n) + " bits, got " +
                          std::to_string(bits.size()));
  }
  // order[i] = input position of the i-th element to reach the current stack.
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> stack;
  for (std::size_t j = k; j-- > 0;) {
    const std::string_view block = bits.substr(j * 2 * n, 2 * n);
    next.clear();
    stack.clear();
    std::size_t arrived = 0;
    for (char c : block) {
      if (c == '0') {
        if (arrived == n) throw InvalidArgument("stack " + std::to_string(j) + " pushes more than n");
        stack.push_back(order[arrived++]);
      } else if (c == '1') {
        if (stack.empty()) throw InvalidArgument("stack " + std::to_string(j) + " pops while empty");
        next.push_back(stack.back());
        stack.pop_back();
      } else {
        throw InvalidArgument("push/pop bits must be '0' or '1'");
      }
    }
    order.swap(next);
  }
  // Output slot r of a sorting run carries value r+1.
  std::vector<std::uint32_t> values(n);
  for (std::uint32_t r = 0; r < n; ++r) values[order[r]] = r + 1;
  return Permutation(std::move(values));
}

}  // namespace sortlab
