#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sortlab/permutation.hpp"

namespace sortlab {

enum class NetworkKind { SequentialStacks, ParallelStacks, ParallelQueues };

const char* to_string(NetworkKind kind) noexcept;

enum class OpKind : std::uint8_t { Push, Pop };

struct NetworkOp {
  OpKind kind;
  std::uint32_t device;

  friend bool operator==(const NetworkOp&, const NetworkOp&) = default;
};

/// Every push and pop in time order.
///
/// Parallel devices: push(j) takes the next input element onto device j and
/// pop(j) writes device j's top (stack) or front (queue) to the output.
///
/// Sequential stacks S_0..S_{k-1}: input enters S_{k-1}; pop(j) for j > 0 is
/// always followed by push(j-1) carrying the same element one stack closer to
/// the output, and pop(0) writes to the output. Each stack of a complete run
/// therefore sees exactly n pushes and n pops.
struct NetworkTrace {
  NetworkKind kind = NetworkKind::ParallelStacks;
  std::size_t device_count = 0;
  std::size_t n = 0;
  std::vector<NetworkOp> ops;

  friend bool operator==(const NetworkTrace&, const NetworkTrace&) = default;
};

/// Re-executes `trace` on `input` and returns the emitted output, which has
/// fewer than n values if the trace stops early. Throws IllegalMove on a pop
/// from an empty device, a push with no input left, or a malformed transfer.
std::vector<std::uint32_t> replay(const NetworkTrace& trace, const Permutation& input);

/// CSV with header "step,op,device"; steps are 0-based.
void write_network_trace_csv(const NetworkTrace& trace, std::ostream& out);

struct ParallelSortResult {
  std::size_t devices_used;
  NetworkTrace trace;
  Permutation output;
};

/// Phase 1 pushes each element on the leftmost stack whose top is larger,
/// opening a new stack at the right end when none is. Phase 2 repeatedly pops
/// the stack with the smallest top. devices_used equals lis_length(pi).
ParallelSortResult parallel_stack_sort(const Permutation& pi);

/// Phase 1 appends each element to the leftmost queue whose rear is smaller,
/// opening a new queue when none is. Phase 2 repeatedly dequeues the smallest
/// front. devices_used equals lds_length(pi).
ParallelSortResult parallel_queue_sort(const Permutation& pi);

// --- sequential stacks -----------------------------------------------------

struct SequentialMove {
  enum class Kind : std::uint8_t { PushInput, Pop };
  Kind kind;
  /// Stack index for Pop; ignored for PushInput (input always enters S_{k-1}).
  std::uint32_t stack = 0;

  static SequentialMove push_input() { return {Kind::PushInput, 0}; }
  static SequentialMove pop(std::uint32_t j) { return {Kind::Pop, j}; }

  friend bool operator==(const SequentialMove&, const SequentialMove&) = default;
};

/// k stacks in series with their input cursor and emitted output.
class SequentialMachine {
 public:
  SequentialMachine(const Permutation& input, std::size_t stacks);

  std::size_t stack_count() const noexcept { return stacks_.size(); }
  std::size_t n() const noexcept { return input_.size(); }
  std::size_t input_remaining() const noexcept { return input_.size() - cursor_; }
  /// Next element waiting at the input; only valid when input_remaining() > 0.
  std::uint32_t next_input() const noexcept { return input_[cursor_]; }
  std::span<const std::uint32_t> stack(std::size_t j) const noexcept { return stacks_[j]; }
  std::optional<std::uint32_t> top(std::size_t j) const noexcept;
  std::span<const std::uint32_t> output() const noexcept { return output_; }
  /// Value the output needs next for a sorted result.
  std::uint32_t next_expected() const noexcept {
    return static_cast<std::uint32_t>(output_.size() + 1);
  }
  bool finished() const noexcept { return output_.size() == input_.size(); }
  bool sorted_output() const noexcept;

  /// Executes one move; throws IllegalMove (with `step`) if it is not legal.
  void apply(SequentialMove move, std::size_t step);

  const NetworkTrace& trace() const noexcept { return trace_; }

 private:
  std::vector<std::uint32_t> input_;
  std::size_t cursor_ = 0;
  std::vector<std::vector<std::uint32_t>> stacks_;
  std::vector<std::uint32_t> output_;
  NetworkTrace trace_;
};

/// Chooses the next move, or std::nullopt to halt.
using SequentialStrategy = std::function<std::optional<SequentialMove>(const SequentialMachine&)>;

/// Emit S_0's top when it is the next needed value; else carry a top one stack
/// closer to the output when it lands on an empty stack or a larger top; else
/// push input; else halt. With one stack this is the classic stack sort and
/// succeeds exactly on the 231-avoiding permutations.
SequentialStrategy greedy_strategy();

/// Plays back a fixed move list, then halts.
SequentialStrategy scripted_strategy(std::vector<SequentialMove> moves);

struct SequentialRun {
  bool success;
  NetworkTrace trace;
  std::vector<std::uint32_t> output;
};

/// Runs `strategy` on k stacks in series until it halts or all n elements are
/// out. success iff the output is 1..n in order.
SequentialRun simulate_sequential_stacks(const Permutation& pi, std::size_t k,
                                         const SequentialStrategy& strategy);

inline constexpr std::size_t kDefaultSearchStates = 20'000'000;
inline constexpr std::size_t kDefaultSearchMaxN = 10;

struct SearchLimits {
  std::size_t max_states = kDefaultSearchStates;
  /// Larger inputs are refused with InvalidArgument; raise knowingly.
  std::size_t max_n = kDefaultSearchMaxN;
};

/// Exhaustive depth-first search for a move list that sorts pi on k stacks.
/// Dead states are memoized on (input cursor, stack contents), which fixes the
/// output length. Throws ResourceError past limits.max_states visited states.
std::optional<std::vector<SequentialMove>> find_sequential_sort(const Permutation& pi,
                                                                std::size_t k,
                                                                const SearchLimits& limits = {});

/// Smallest k <= k_max with which pi can be sorted; std::nullopt if none.
std::optional<std::size_t> min_sequential_stacks(const Permutation& pi, std::size_t k_max,
                                                 const SearchLimits& limits = {});

/// k blocks of 2n characters, block j holding stack S_j's operations in time
/// order, '0' for push and '1' for pop. Requires a complete sequential trace.
std::string encode_pushpop(const NetworkTrace& trace);

/// Recovers the input of a sorting run from its push/pop blocks by passing
/// position tokens through each stack in turn. Throws InvalidArgument when the
/// bits are not k well-formed blocks.
Permutation decode_pushpop(std::string_view bits, std::size_t n, std::size_t k);

}  // namespace sortlab
