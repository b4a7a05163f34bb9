#include "pcs/machine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcs/error.hpp"

namespace pcs {

std::vector<std::string> validate(const Pcs& model) {
  std::vector<std::string> issues;
  if (model.level < 0) {
    issues.push_back("negative level");
  }
  std::set<std::string> states(model.states.begin(), model.states.end());
  if (states.size() != model.states.size()) {
    issues.push_back("duplicate state name");
  }
  std::set<std::string> channels(model.channels.begin(), model.channels.end());
  if (channels.size() != model.channels.size()) {
    issues.push_back("duplicate channel name");
  }
  if (model.initial && !states.count(*model.initial)) {
    issues.push_back("unknown initial state \"" + *model.initial + "\"");
  }
  for (size_t i = 0; i < model.rules.size(); ++i) {
    const Rule& r = model.rules[i];
    std::string at = "rule #" + std::to_string(i) + ": ";
    if (!states.count(r.from)) {
      issues.push_back(at + "unknown state \"" + r.from + "\"");
    }
    if (!states.count(r.to)) {
      issues.push_back(at + "unknown state \"" + r.to + "\"");
    }
    if (!channels.count(r.channel)) {
      issues.push_back(at + "unknown channel \"" + r.channel + "\"");
    }
    if (r.letter < 0 || r.letter > model.level) {
      issues.push_back(at + "letter " + std::to_string(r.letter) + " out of range 0.." +
                       std::to_string(model.level));
    }
  }
  return issues;
}

Machine::Machine(Pcs model) : model_(std::move(model)) {
  auto issues = validate(model_);
  if (!issues.empty()) {
    throw ModelError(std::move(issues));
  }
  std::map<std::string, int> sidx, cidx;
  for (size_t i = 0; i < model_.states.size(); ++i) {
    sidx[model_.states[i]] = static_cast<int>(i);
  }
  for (size_t i = 0; i < model_.channels.size(); ++i) {
    cidx[model_.channels[i]] = static_cast<int>(i);
  }
  for (const Rule& r : model_.rules) {
    rules_.push_back({sidx.at(r.from), cidx.at(r.channel), r.op, r.letter, sidx.at(r.to)});
  }
  if (model_.initial) {
    initial_ = sidx.at(*model_.initial);
  }
}

int Machine::state_index(const std::string& name) const {
  for (size_t i = 0; i < model_.states.size(); ++i) {
    if (model_.states[i] == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int Machine::channel_index(const std::string& name) const {
  for (size_t i = 0; i < model_.channels.size(); ++i) {
    if (model_.channels[i] == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

bool config_less(const Config& a, const Config& b) {
  if (a.state != b.state) {
    return a.state < b.state;
  }
  return a.chans < b.chans;
}

bool config_leq(const Config& a, const Config& b) {
  if (a.state != b.state) {
    return false;
  }
  if (a.chans.size() != b.chans.size()) {
    throw InputError("config_leq: channel arity mismatch");
  }
  for (size_t i = 0; i < a.chans.size(); ++i) {
    if (!pleq(a.chans[i], b.chans[i])) {
      return false;
    }
  }
  return true;
}

void check_config(const Machine& m, const Config& c) {
  if (c.state < 0 || c.state >= m.num_states()) {
    throw InputError("config state index out of range");
  }
  if (static_cast<int>(c.chans.size()) != m.num_channels()) {
    throw InputError("config channel arity mismatch");
  }
  for (const Word& w : c.chans) {
    if (height(w) > m.level()) {
      throw InputError("config letter exceeds machine level");
    }
  }
}

std::vector<Step> successors(const Machine& m, const Config& c, Semantics sem) {
  check_config(m, c);
  std::vector<Step> out;
  const auto& rules = m.rules();
  for (size_t ri = 0; ri < rules.size(); ++ri) {
    const auto& r = rules[ri];
    if (r.from != c.state) {
      continue;
    }
    const Word& x = c.chans[r.channel];
    if (r.op == RuleOp::Read) {
      if (!x.empty() && x[0] == r.letter) {
        Config next = c;
        next.state = r.to;
        next.chans[r.channel] = x.substr(1);
        out.push_back({StepLabel{StepLabel::Kind::Rule, static_cast<int>(ri), 0, -1, 0},
                       std::move(next)});
      }
      continue;
    }
    if (sem == Semantics::WriteSuperseding) {
      // One successor per erased suffix of letters <= a, shortest drop first.
      int max_drop = 0;
      while (max_drop < static_cast<int>(x.size()) &&
             x[x.size() - 1 - max_drop] <= r.letter) {
        ++max_drop;
      }
      for (int drop = 0; drop <= max_drop; ++drop) {
        Config next = c;
        next.state = r.to;
        next.chans[r.channel] = x.substr(0, x.size() - drop) + static_cast<char>(r.letter);
        out.push_back({StepLabel{StepLabel::Kind::Rule, static_cast<int>(ri), drop, -1, 0},
                       std::move(next)});
      }
    } else {
      Config next = c;
      next.state = r.to;
      next.chans[r.channel] = x + static_cast<char>(r.letter);
      out.push_back(
          {StepLabel{StepLabel::Kind::Rule, static_cast<int>(ri), 0, -1, 0}, std::move(next)});
    }
  }
  if (sem == Semantics::InternalSuperseding || sem == Semantics::Strict) {
    bool strict = sem == Semantics::Strict;
    for (int ch = 0; ch < m.num_channels(); ++ch) {
      for (int k : supersede_positions(c.chans[ch], strict)) {
        Config next = c;
        next.chans[ch] = apply_supersede(c.chans[ch], k);
        out.push_back({StepLabel{StepLabel::Kind::Internal, -1, 0, ch, k}, std::move(next)});
      }
    }
  }
  return out;
}

std::optional<size_t> validate_run(const Machine& m, const Run& run) {
  Config cur = run.initial;
  for (size_t i = 0; i < run.steps.size(); ++i) {
    auto succ = successors(m, cur, run.semantics);
    bool ok = false;
    for (const Step& s : succ) {
      if (s.label == run.steps[i].label && s.to == run.steps[i].to) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      return i;
    }
    cur = run.steps[i].to;
  }
  return std::nullopt;
}

Run run_simulate(const Machine& m, const Config& c0, Semantics sem, int max_steps,
                 uint64_t seed) {
  Run run;
  run.semantics = sem;
  run.initial = c0;
  std::mt19937_64 rng(seed);
  Config cur = c0;
  for (int i = 0; i < max_steps; ++i) {
    auto succ = successors(m, cur, sem);
    if (succ.empty()) {
      run.deadlocked = true;
      break;
    }
    size_t pick = std::uniform_int_distribution<size_t>(0, succ.size() - 1)(rng);
    run.steps.push_back(succ[pick]);
    cur = succ[pick].to;
  }
  return run;
}

bool EnumResult::contains(const Config& c) const {
  return std::binary_search(configs.begin(), configs.end(), c, config_less);
}

namespace {

EnumResult enumerate_impl(const Machine& m, const Config& c0, Semantics sem,
                          const EnumBounds& bounds, bool parallel) {
  EnumResult res;
  check_config(m, c0);
  std::unordered_set<Config, ConfigHash> visited;
  std::vector<Config> frontier;

  auto fits = [&](const Config& c) {
    for (const Word& w : c.chans) {
      if (w.size() > bounds.max_channel_len) {
        return false;
      }
    }
    return true;
  };

  if (!fits(c0)) {
    res.truncated = true;
    res.configs = {c0};
    return res;
  }
  visited.insert(c0);
  frontier.push_back(c0);

  while (!frontier.empty()) {
    std::vector<std::vector<Config>> batches(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && frontier.size() > 64)
#endif
    for (size_t i = 0; i < frontier.size(); ++i) {
      auto succ = successors(m, frontier[i], sem);
      batches[i].reserve(succ.size());
      for (auto& s : succ) {
        batches[i].push_back(std::move(s.to));
      }
    }
    std::vector<Config> next;
    for (auto& batch : batches) {
      for (auto& c : batch) {
        if (!fits(c)) {
          res.truncated = true;
          continue;
        }
        if (visited.size() >= bounds.max_configs && !visited.count(c)) {
          res.truncated = true;
          continue;
        }
        if (visited.insert(c).second) {
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  res.configs.assign(visited.begin(), visited.end());
  std::sort(res.configs.begin(), res.configs.end(), config_less);
  return res;
}

}  // namespace

EnumResult enumerate_reachable(const Machine& m, const Config& c0, Semantics sem,
                               const EnumBounds& bounds) {
  return enumerate_impl(m, c0, sem, bounds, true);
}

EnumResult enumerate_reachable_serial(const Machine& m, const Config& c0, Semantics sem,
                                      const EnumBounds& bounds) {
  return enumerate_impl(m, c0, sem, bounds, false);
}

}  // namespace pcs
