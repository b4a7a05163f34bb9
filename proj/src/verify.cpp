#include "pcs/verify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pcs/error.hpp"

namespace pcs {

UpwardClosedSet make_upward(std::vector<Config> basis) {
  UpwardClosedSet set;
  for (auto& c : basis) {
    bool dominated = false;
    for (const auto& b : set.basis) {
      if (config_leq(b, c)) {
        dominated = true;
        break;
      }
    }
    if (dominated) {
      continue;
    }
    std::erase_if(set.basis, [&](const Config& b) { return config_leq(c, b); });
    set.basis.push_back(std::move(c));
  }
  std::sort(set.basis.begin(), set.basis.end(), config_less);
  return set;
}

bool upward_member(const UpwardClosedSet& set, const Config& c) {
  for (const auto& b : set.basis) {
    if (config_leq(b, c)) {
      return true;
    }
  }
  return false;
}

namespace {

// Strictly decreasing words over {0..a}, shortest first: one per subset.
std::vector<Word> strictly_decreasing_words(int a) {
  std::vector<Word> out;
  int n = a + 1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Word w;
    for (int letter = a; letter >= 0; --letter) {
      if (mask & (1 << letter)) {
        w.push_back(static_cast<char>(letter));
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace

std::vector<Config> pre_basis(const Machine& m, int rule, const Config& target) {
  check_config(m, target);
  const auto& r = m.rules().at(rule);
  if (r.to != target.state) {
    return {};
  }
  const Word& y = target.chans[r.channel];
  if (r.op == RuleOp::Read) {
    Config pre = target;
    pre.state = r.from;
    pre.chans[r.channel] = Word(1, static_cast<char>(r.letter)) + y;
    return {pre};
  }
  // Write of a: x a must dominate y, so y is empty-impossible or ends with a,
  // and then x = u z with u the stem of y and z in a finite set of
  // representatives (strictly decreasing words over {0..a}).
  if (y.empty() || y.back() != r.letter) {
    return {};
  }
  Word u = y.substr(0, y.size() - 1);
  std::vector<Config> candidates;
  for (const Word& z : strictly_decreasing_words(r.letter)) {
    Config pre = target;
    pre.state = r.from;
    pre.chans[r.channel] = u + z;
    candidates.push_back(std::move(pre));
  }
  return make_upward(std::move(candidates)).basis;
}

std::vector<Step> internal_steps_down(const Machine& m, const Config& from, const Config& to) {
  if (!config_leq(to, from)) {
    throw InputError("internal_steps_down: target does not embed into source");
  }
  std::vector<Step> steps;
  Config cur = from;
  for (int ch = 0; ch < m.num_channels(); ++ch) {
    while (cur.chans[ch] != to.chans[ch]) {
      auto gaps = pleq_witness(to.chans[ch], cur.chans[ch]);
      // Erase the last letter of the first nonempty gap: it precedes a
      // matched letter that is at least as high.
      size_t pos = 0;
      bool advanced = false;
      for (size_t gi = 0; gi < gaps->size() && !advanced; ++gi) {
        pos += (*gaps)[gi].size();
        if (!(*gaps)[gi].empty()) {
          Config next = cur;
          next.chans[ch] = apply_supersede(cur.chans[ch], static_cast<int>(pos));
          steps.push_back({StepLabel{StepLabel::Kind::Internal, -1, 0, ch,
                                     static_cast<int>(pos)},
                           next});
          cur = std::move(next);
          advanced = true;
        }
        ++pos;  // the matched letter after the gap
      }
      if (!advanced) {
        throw Error("internal_steps_down: no progress");
      }
    }
  }
  return steps;
}

namespace {

// Unique reliable successor of `c` through rule index `ri`.
Config reliable_successor(const Machine& m, const Config& c, int ri) {
  for (const Step& s : successors(m, c, Semantics::Reliable)) {
    if (s.label.kind == StepLabel::Kind::Rule && s.label.rule == ri) {
      return s.to;
    }
  }
  throw Error("reliable_successor: rule not enabled");
}

struct BackLink {
  int rule;
  Config next;
};

Run assemble_witness(const Machine& m, const Config& c0, const Config& found,
                     const std::unordered_map<Config, BackLink, ConfigHash>& parents) {
  Run run;
  run.semantics = Semantics::InternalSuperseding;
  run.initial = c0;
  for (Step& s : internal_steps_down(m, c0, found)) {
    run.steps.push_back(std::move(s));
  }
  Config cur = found;
  auto it = parents.find(cur);
  while (it != parents.end()) {
    const BackLink& link = it->second;
    Config succ = reliable_successor(m, cur, link.rule);
    run.steps.push_back(
        {StepLabel{StepLabel::Kind::Rule, link.rule, 0, -1, 0}, succ});
    for (Step& s : internal_steps_down(m, succ, link.next)) {
      run.steps.push_back(std::move(s));
    }
    cur = link.next;
    it = parents.find(cur);
  }
  return run;
}

}  // namespace

Verdict cover(const Machine& m, const Config& c0, const UpwardClosedSet& target) {
  check_config(m, c0);
  for (const auto& b : target.basis) {
    check_config(m, b);
  }
  // Superseding steps only descend, so the upward closure absorbs them and
  // backward saturation needs the reliable rules only.
  std::vector<Config> basis;
  std::unordered_map<Config, BackLink, ConfigHash> parents;
  std::deque<Config> work;
  std::optional<Config> found;

  auto insert = [&](Config c, int via_rule, const Config* from) {
    for (const auto& b : basis) {
      if (config_leq(b, c)) {
        return;
      }
    }
    std::erase_if(basis, [&](const Config& b) { return config_leq(c, b); });
    if (from != nullptr) {
      parents[c] = BackLink{via_rule, *from};
    }
    if (!found && config_leq(c, c0)) {
      found = c;
    }
    work.push_back(c);
    basis.push_back(std::move(c));
  };

  for (const auto& b : make_upward(target.basis).basis) {
    insert(b, -1, nullptr);
  }

  Verdict v;
  while (!work.empty() && !found) {
    // One generation at a time; pre-images are independent and merged in a
    // fixed order.
    std::vector<Config> batch(work.begin(), work.end());
    work.clear();
    std::vector<std::vector<Config>> pres(batch.size() * m.rules().size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (batch.size() * m.rules().size() > 32)
#endif
    for (size_t t = 0; t < batch.size(); ++t) {
      for (size_t ri = 0; ri < m.rules().size(); ++ri) {
        pres[t * m.rules().size() + ri] = pre_basis(m, static_cast<int>(ri), batch[t]);
      }
    }
    for (size_t t = 0; t < batch.size(); ++t) {
      for (size_t ri = 0; ri < m.rules().size(); ++ri) {
        for (Config& c : pres[t * m.rules().size() + ri]) {
          insert(std::move(c), static_cast<int>(ri), &batch[t]);
        }
      }
    }
  }

  if (found) {
    v.answer = true;
    v.cert = Verdict::CertKind::Run;
    v.run = assemble_witness(m, c0, *found, parents);
    return v;
  }
  v.answer = false;
  v.cert = Verdict::CertKind::Basis;
  std::sort(basis.begin(), basis.end(), config_less);
  v.basis = std::move(basis);
  return v;
}

Verdict reach_exact(const Machine& m, const Config& c0, const Config& d) {
  UpwardClosedSet target;
  target.basis = {d};
  Verdict v = cover(m, c0, target);
  if (v.answer) {
    // Descend from the covering endpoint to d itself.
    const Config& end = v.run.final_config();
    for (Step& s : internal_steps_down(m, end, d)) {
      v.run.steps.push_back(std::move(s));
    }
  }
  return v;
}

namespace {

struct TreeSearch {
  const Machine& m;
  // Configs whose full subtree has already been proven clean; anything that
  // embeds into one of them is clean too, since the larger config simulates
  // every run of the smaller one.
  std::vector<Config> clean;
  std::vector<Config> ancestors;
  std::vector<Step> path;

  bool is_clean(const Config& c) const {
    for (const auto& M : clean) {
      if (config_leq(c, M)) {
        return true;
      }
    }
    return false;
  }

  bool dominated_by_ancestor(const Config& c, size_t* dom_i) const {
    for (size_t i = 0; i < ancestors.size(); ++i) {
      if (config_leq(ancestors[i], c)) {
        *dom_i = i;
        return true;
      }
    }
    return false;
  }
};

// Depth-first search for an ancestor-dominated node.  Returns true when a
// domination pair was found; ts.path then leads to the dominated node.
bool dfs_domination(TreeSearch& ts, const Config& cur, size_t* dom_i) {
  if (ts.dominated_by_ancestor(cur, dom_i)) {
    return true;
  }
  if (ts.is_clean(cur)) {
    return false;
  }
  ts.ancestors.push_back(cur);
  for (const Step& s : successors(ts.m, cur, Semantics::InternalSuperseding)) {
    ts.path.push_back(s);
    if (dfs_domination(ts, s.to, dom_i)) {
      return true;
    }
    ts.path.pop_back();
  }
  ts.ancestors.pop_back();
  ts.clean.push_back(cur);
  return false;
}

}  // namespace

Verdict terminate(const Machine& m, const Config& c0) {
  check_config(m, c0);
  TreeSearch ts{m, {}, {}, {}};
  size_t dom_i = 0;
  Verdict v;
  if (dfs_domination(ts, c0, &dom_i)) {
    v.answer = false;
    v.cert = Verdict::CertKind::Domination;
    v.run.semantics = Semantics::InternalSuperseding;
    v.run.initial = c0;
    v.run.steps = std::move(ts.path);
    v.dom_i = dom_i;
    v.dom_j = v.run.num_configs() - 1;
    return v;
  }
  v.answer = true;
  v.cert = Verdict::CertKind::None;
  return v;
}

namespace {

enum class InevResult { Ok, Deadlock, Dominated };

// The path explored so far avoids the goal; goal successors discharge their
// branch immediately.
InevResult dfs_inevitable(TreeSearch& ts, const std::vector<char>& is_goal, const Config& cur,
                          size_t* dom_i) {
  if (ts.dominated_by_ancestor(cur, dom_i)) {
    return InevResult::Dominated;
  }
  if (ts.is_clean(cur)) {
    return InevResult::Ok;
  }
  auto succ = successors(ts.m, cur, Semantics::InternalSuperseding);
  if (succ.empty()) {
    return InevResult::Deadlock;
  }
  ts.ancestors.push_back(cur);
  for (const Step& s : succ) {
    if (is_goal[s.to.state]) {
      continue;
    }
    ts.path.push_back(s);
    InevResult r = dfs_inevitable(ts, is_goal, s.to, dom_i);
    if (r != InevResult::Ok) {
      return r;
    }
    ts.path.pop_back();
  }
  ts.ancestors.pop_back();
  ts.clean.push_back(cur);
  return InevResult::Ok;
}

}  // namespace

Verdict inevitable_states(const Machine& m, const Config& c0, const std::vector<int>& goals) {
  check_config(m, c0);
  std::vector<char> is_goal(m.num_states(), 0);
  for (int g : goals) {
    if (g < 0 || g >= m.num_states()) {
      throw InputError("inevitable_states: goal state out of range");
    }
    is_goal[g] = 1;
  }
  Verdict v;
  if (is_goal[c0.state]) {
    v.answer = true;
    v.cert = Verdict::CertKind::None;
    return v;
  }
  TreeSearch ts{m, {}, {}, {}};
  size_t dom_i = 0;
  InevResult r = dfs_inevitable(ts, is_goal, c0, &dom_i);
  if (r == InevResult::Ok) {
    v.answer = true;
    v.cert = Verdict::CertKind::None;
    return v;
  }
  v.answer = false;
  v.run.semantics = Semantics::InternalSuperseding;
  v.run.initial = c0;
  v.run.steps = std::move(ts.path);
  if (r == InevResult::Deadlock) {
    v.cert = Verdict::CertKind::Deadlock;
  } else {
    v.cert = Verdict::CertKind::Domination;
    v.dom_i = dom_i;
    v.dom_j = v.run.num_configs() - 1;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Run normalization

namespace {

// Channel contents right before step `idx` of `steps` applied from `initial`.
const std::vector<Word>& contents_before(const Config& initial, const std::vector<Step>& steps,
                                         size_t idx) {
  return idx == 0 ? initial.chans : steps[idx - 1].to.chans;
}

int step_channel(const Machine& m, const StepLabel& l) {
  return l.kind == StepLabel::Kind::Internal ? l.channel : m.rules().at(l.rule).channel;
}

// Recompute the configs of steps[from..] given the config before steps[from].
void replay_from(const Machine& m, const Config& initial, std::vector<Step>& steps,
                 size_t from) {
  Config cur = from == 0 ? initial : steps[from - 1].to;
  for (size_t i = from; i < steps.size(); ++i) {
    const StepLabel& l = steps[i].label;
    Config next = cur;
    if (l.kind == StepLabel::Kind::Internal) {
      next.chans[l.channel] = apply_supersede(cur.chans[l.channel], l.position);
    } else {
      const auto& r = m.rules().at(l.rule);
      if (r.op == RuleOp::Read) {
        if (cur.chans[r.channel].empty() || cur.chans[r.channel][0] != r.letter) {
          throw Error("normalize_run: commuted read became invalid");
        }
        next.chans[r.channel] = cur.chans[r.channel].substr(1);
      } else {
        next.chans[r.channel] = cur.chans[r.channel] + static_cast<char>(r.letter);
      }
      next.state = r.to;
    }
    steps[i].to = next;
    cur = std::move(next);
  }
}

}  // namespace

Run normalize_run(const Machine& m, const Run& run) {
  if (run.semantics != Semantics::InternalSuperseding) {
    throw InputError("normalize_run: expects an internal-superseding run");
  }
  for (const Word& w : run.initial.chans) {
    if (!w.empty()) {
      throw InputError("normalize_run: run must start from empty channels");
    }
  }
  if (auto bad = validate_run(m, run)) {
    throw InputError("normalize_run: input run invalid at step " + std::to_string(*bad));
  }

  // Insert steps one by one; superseding steps bubble left through the
  // already-normalized prefix until they rest against their write.
  std::vector<Step> steps;
  for (const Step& incoming : run.steps) {
    steps.push_back(incoming);
    if (incoming.label.kind != StepLabel::Kind::Internal) {
      replay_from(m, run.initial, steps, steps.size() - 1);
      continue;
    }
    size_t idx = steps.size() - 1;
    while (idx > 0) {
      StepLabel& prev = steps[idx - 1].label;
      StepLabel& mov = steps[idx].label;
      int mch = mov.channel;
      if (step_channel(m, prev) != mch) {
        std::swap(steps[idx - 1], steps[idx]);
        --idx;
        continue;
      }
      if (prev.kind == StepLabel::Kind::Rule) {
        const auto& r = m.rules().at(prev.rule);
        if (r.op == RuleOp::Read) {
          // read then #k  ==  #(k+1) then read
          mov.position += 1;
          std::swap(steps[idx - 1], steps[idx]);
          --idx;
          continue;
        }
        size_t before = contents_before(run.initial, steps, idx - 1)[mch].size();
        if (mov.position < static_cast<int>(before)) {
          std::swap(steps[idx - 1], steps[idx]);
          --idx;
          continue;
        }
        break;  // position == |x|: rests right after its write
      }
      // Two superseding steps on the same channel.
      int k1 = prev.position, k2 = mov.position;
      if (k1 <= k2) {
        // #k1 #k2  ==  #(k2+1) #k1
        mov.position = k2 + 1;
        std::swap(steps[idx - 1], steps[idx]);
        --idx;
        continue;
      }
      if (k1 == k2 + 1) {
        break;  // extends a decreasing block
      }
      // k1 > k2 + 1:  #k1 #k2  ==  #k2 #(k1-1)
      prev.position = k1 - 1;
      std::swap(steps[idx - 1], steps[idx]);
      --idx;
    }
    if (idx == 0 && steps[0].label.kind == StepLabel::Kind::Internal) {
      throw Error("normalize_run: superseding step escaped to the run start");
    }
    replay_from(m, run.initial, steps, idx);
  }

  // Fold each write plus its superseding block into one superseding write.
  Run out;
  out.semantics = Semantics::WriteSuperseding;
  out.initial = run.initial;
  for (size_t i = 0; i < steps.size(); ++i) {
    const StepLabel& l = steps[i].label;
    if (l.kind == StepLabel::Kind::Internal) {
      throw Error("normalize_run: unfolded superseding step survived");
    }
    const auto& r = m.rules().at(l.rule);
    if (r.op == RuleOp::Read) {
      out.steps.push_back(steps[i]);
      continue;
    }
    size_t j = i;
    while (j + 1 < steps.size() && steps[j + 1].label.kind == StepLabel::Kind::Internal &&
           steps[j + 1].label.channel == r.channel) {
      ++j;
    }
    Step folded;
    folded.label = StepLabel{StepLabel::Kind::Rule, l.rule, static_cast<int>(j - i), -1, 0};
    folded.to = steps[j].to;
    out.steps.push_back(std::move(folded));
    i = j;
  }
  if (auto bad = validate_run(m, out)) {
    throw Error("normalize_run: folded run invalid at step " + std::to_string(*bad));
  }
  if (!(out.final_config() == run.final_config())) {
    throw Error("normalize_run: endpoint changed");
  }
  return out;
}

}  // namespace pcs
