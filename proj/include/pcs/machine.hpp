#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcs/word.hpp"

namespace pcs {

enum class RuleOp { Read, Write };

// Declarative machine description; names as they appear in model files.
struct Rule {
  std::string from;
  std::string channel;
  RuleOp op = RuleOp::Write;
  Letter letter = 0;
  std::string to;
};

struct Pcs {
  int level = 0;
  std::vector<std::string> channels;
  std::vector<std::string> states;
  std::optional<std::string> initial;
  std::vector<Rule> rules;
};

// All invariant violations, empty when the model is well-formed.
std::vector<std::string> validate(const Pcs& model);

// Validated, index-based form used by every algorithm.
class Machine {
 public:
  explicit Machine(Pcs model);  // throws ModelError

  struct CompiledRule {
    int from;
    int channel;
    RuleOp op;
    Letter letter;
    int to;
  };

  int level() const { return model_.level; }
  int num_states() const { return static_cast<int>(model_.states.size()); }
  int num_channels() const { return static_cast<int>(model_.channels.size()); }
  const std::vector<CompiledRule>& rules() const { return rules_; }
  const Pcs& source() const { return model_; }

  const std::string& state_name(int i) const { return model_.states[i]; }
  const std::string& channel_name(int i) const { return model_.channels[i]; }
  int state_index(const std::string& name) const;    // -1 when unknown
  int channel_index(const std::string& name) const;  // -1 when unknown
  int initial_state() const { return initial_; }     // -1 when unset

 private:
  Pcs model_;
  std::vector<CompiledRule> rules_;
  int initial_ = -1;
};

struct Config {
  int state = 0;
  std::vector<Word> chans;

  bool operator==(const Config&) const = default;
};

struct ConfigHash {
  size_t operator()(const Config& c) const {
    size_t h = std::hash<int>()(c.state);
    for (const auto& w : c.chans) {
      h = h * 1315423911u + std::hash<std::string>()(w);
    }
    return h;
  }
};

bool config_less(const Config& a, const Config& b);

// Same control state and channelwise priority embedding.
bool config_leq(const Config& a, const Config& b);

enum class Semantics { Reliable, WriteSuperseding, InternalSuperseding, Strict };

struct StepLabel {
  enum class Kind { Rule, Internal } kind = Kind::Rule;
  int rule = -1;     // Kind::Rule
  int dropped = 0;   // suffix length erased by a superseding write
  int channel = -1;  // Kind::Internal
  int position = 0;  // 1-based position of the superseded message

  bool operator==(const StepLabel&) const = default;
};

struct Step {
  StepLabel label;
  Config to;
};

// Enabled steps in canonical order: rules by index (write drops ascending),
// then internal steps by (channel, position).
std::vector<Step> successors(const Machine& m, const Config& c, Semantics sem);

struct Run {
  Semantics semantics = Semantics::Reliable;
  Config initial;
  std::vector<Step> steps;
  bool deadlocked = false;

  const Config& final_config() const { return steps.empty() ? initial : steps.back().to; }
  // Config at position i of the run (0 = initial).
  const Config& config_at(size_t i) const { return i == 0 ? initial : steps[i - 1].to; }
  size_t num_configs() const { return steps.size() + 1; }
};

// Index of the first invalid step, or nullopt when the run replays cleanly.
std::optional<size_t> validate_run(const Machine& m, const Run& run);

// Pseudorandom run of at most max_steps steps, reproducible from the seed.
Run run_simulate(const Machine& m, const Config& c0, Semantics sem, int max_steps, uint64_t seed);

struct EnumBounds {
  size_t max_configs = 100000;
  size_t max_channel_len = 64;
};

struct EnumResult {
  std::vector<Config> configs;  // sorted by config_less
  bool truncated = false;

  bool contains(const Config& c) const;
};

// Breadth-first closure of successors within bounds; the flag records that a
// bound was hit.  The parallel variant expands frontiers with OpenMP but
// returns the identical set.
EnumResult enumerate_reachable(const Machine& m, const Config& c0, Semantics sem,
                               const EnumBounds& bounds);
EnumResult enumerate_reachable_serial(const Machine& m, const Config& c0, Semantics sem,
                                      const EnumBounds& bounds);

// Checks that c conforms to m (arity, letter range, state index).
void check_config(const Machine& m, const Config& c);

}  // namespace pcs
