#include "pcs/io.hpp"

#include "pcs/error.hpp"

namespace pcs {

Json pcs_to_json(const Pcs& model) {
  Json j;
  j["level"] = model.level;
  j["channels"] = model.channels;
  j["states"] = model.states;
  if (model.initial) {
    j["initial"] = *model.initial;
  }
  Json rules = Json::array();
  for (const Rule& r : model.rules) {
    rules.push_back({{"from", r.from},
                     {"channel", r.channel},
                     {"op", r.op == RuleOp::Write ? "!" : "?"},
                     {"letter", r.letter},
                     {"to", r.to}});
  }
  j["rules"] = std::move(rules);
  return j;
}

Pcs pcs_from_json(const Json& j) {
  Pcs model;
  try {
    model.level = j.at("level").get<int>();
    model.channels = j.at("channels").get<std::vector<std::string>>();
    model.states = j.at("states").get<std::vector<std::string>>();
    if (j.contains("initial")) {
      model.initial = j.at("initial").get<std::string>();
    }
    for (const Json& rj : j.at("rules")) {
      Rule r;
      r.from = rj.at("from").get<std::string>();
      r.channel = rj.at("channel").get<std::string>();
      std::string op = rj.at("op").get<std::string>();
      if (op != "!" && op != "?") {
        throw InputError("rule op must be \"!\" or \"?\"");
      }
      r.op = op == "!" ? RuleOp::Write : RuleOp::Read;
      r.letter = rj.at("letter").get<int>();
      r.to = rj.at("to").get<std::string>();
      model.rules.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad model json: ") + e.what());
  }
  return model;
}

Json config_to_json(const Machine& m, const Config& c) {
  Json j;
  j["state"] = m.state_name(c.state);
  Json chans = Json::object();
  for (int i = 0; i < m.num_channels(); ++i) {
    chans[m.channel_name(i)] = word_to_digits(c.chans[i], m.level());
  }
  j["channels"] = std::move(chans);
  return j;
}

Config config_from_json(const Machine& m, const Json& j) {
  Config c;
  std::string state;
  try {
    state = j.at("state").get<std::string>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad config json: ") + e.what());
  }
  c.state = m.state_index(state);
  if (c.state < 0) {
    throw InputError("unknown state \"" + state + "\"");
  }
  c.chans.assign(m.num_channels(), Word{});
  if (j.contains("channels")) {
    for (const auto& [name, wj] : j.at("channels").items()) {
      int idx = m.channel_index(name);
      if (idx < 0) {
        throw InputError("unknown channel \"" + name + "\"");
      }
      c.chans[idx] = word_from_digits(wj.get<std::string>(), m.level());
    }
  }
  return c;
}

Config config_from_literal(const Machine& m, const std::string& text) {
  Config c;
  size_t colon = text.find(':');
  std::string state = text.substr(0, colon == std::string::npos ? text.size() : colon);
  c.state = m.state_index(state);
  if (c.state < 0) {
    throw InputError("unknown state \"" + state + "\"");
  }
  c.chans.assign(m.num_channels(), Word{});
  if (colon == std::string::npos) {
    return c;
  }
  std::string rest = text.substr(colon + 1);
  size_t channel = 0;
  size_t start = 0;
  while (true) {
    size_t comma = rest.find(',', start);
    std::string part =
        comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
    if (channel >= c.chans.size()) {
      throw InputError("config literal has more words than channels");
    }
    c.chans[channel++] = word_from_digits(part, m.level());
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return c;
}

namespace {

Json label_to_json(const Machine& m, const StepLabel& l) {
  Json j;
  if (l.kind == StepLabel::Kind::Internal) {
    j["kind"] = "internal";
    j["channel"] = m.channel_name(l.channel);
    j["position"] = l.position;
    return j;
  }
  const auto& r = m.source().rules.at(l.rule);
  j["kind"] = "rule";
  j["rule"] = {{"from", r.from},
               {"channel", r.channel},
               {"op", r.op == RuleOp::Write ? "!" : "?"},
               {"letter", r.letter},
               {"to", r.to}};
  if (l.dropped > 0) {
    j["dropped"] = l.dropped;
  }
  return j;
}

StepLabel label_from_json(const Machine& m, const Json& j) {
  StepLabel l;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "internal") {
    l.kind = StepLabel::Kind::Internal;
    l.channel = m.channel_index(j.at("channel").get<std::string>());
    if (l.channel < 0) {
      throw InputError("unknown channel in run label");
    }
    l.position = j.at("position").get<int>();
    return l;
  }
  if (kind != "rule") {
    throw InputError("unknown step label kind \"" + kind + "\"");
  }
  l.kind = StepLabel::Kind::Rule;
  const Json& rj = j.at("rule");
  Rule want;
  want.from = rj.at("from").get<std::string>();
  want.channel = rj.at("channel").get<std::string>();
  want.op = rj.at("op").get<std::string>() == "!" ? RuleOp::Write : RuleOp::Read;
  want.letter = rj.at("letter").get<int>();
  want.to = rj.at("to").get<std::string>();
  l.rule = -1;
  const auto& rules = m.source().rules;
  for (size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    if (r.from == want.from && r.channel == want.channel && r.op == want.op &&
        r.letter == want.letter && r.to == want.to) {
      l.rule = static_cast<int>(i);
      break;
    }
  }
  if (l.rule < 0) {
    throw InputError("run label references a rule absent from the model");
  }
  l.dropped = j.value("dropped", 0);
  return l;
}

}  // namespace

Json run_to_json(const Machine& m, const Run& run) {
  Json j;
  j["semantics"] = semantics_name(run.semantics);
  j["initial"] = config_to_json(m, run.initial);
  j["deadlocked"] = run.deadlocked;
  Json steps = Json::array();
  for (const Step& s : run.steps) {
    steps.push_back({{"label", label_to_json(m, s.label)}, {"config", config_to_json(m, s.to)}});
  }
  j["steps"] = std::move(steps);
  return j;
}

Run run_from_json(const Machine& m, const Json& j) {
  Run run;
  try {
    run.semantics = semantics_from_name(j.at("semantics").get<std::string>());
    run.initial = config_from_json(m, j.at("initial"));
    run.deadlocked = j.value("deadlocked", false);
    for (const Json& sj : j.at("steps")) {
      Step s;
      s.label = label_from_json(m, sj.at("label"));
      s.to = config_from_json(m, sj.at("config"));
      run.steps.push_back(std::move(s));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad run json: ") + e.what());
  }
  return run;
}

Json verdict_to_json(const Machine& m, const Verdict& v) {
  Json j;
  j["answer"] = v.answer;
  switch (v.cert) {
    case Verdict::CertKind::None:
      break;
    case Verdict::CertKind::Run:
      j["certificate"] = {{"kind", "run"}, {"run", run_to_json(m, v.run)}};
      break;
    case Verdict::CertKind::Basis: {
      Json basis = Json::array();
      for (const Config& c : v.basis) {
        basis.push_back(config_to_json(m, c));
      }
      j["certificate"] = {{"kind", "basis"}, {"basis", std::move(basis)}};
      break;
    }
    case Verdict::CertKind::Domination:
      j["certificate"] = {{"kind", "domination"},
                          {"run", run_to_json(m, v.run)},
                          {"i", v.dom_i},
                          {"j", v.dom_j}};
      break;
    case Verdict::CertKind::Deadlock:
      j["certificate"] = {{"kind", "deadlock"}, {"run", run_to_json(m, v.run)}};
      break;
  }
  return j;
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Reliable:
      return "reliable";
    case Semantics::WriteSuperseding:
      return "write";
    case Semantics::InternalSuperseding:
      return "internal";
    case Semantics::Strict:
      return "strict";
  }
  return "?";
}

Semantics semantics_from_name(const std::string& name) {
  if (name == "reliable") {
    return Semantics::Reliable;
  }
  if (name == "write") {
    return Semantics::WriteSuperseding;
  }
  if (name == "internal") {
    return Semantics::InternalSuperseding;
  }
  if (name == "strict") {
    return Semantics::Strict;
  }
  throw InputError("unknown semantics \"" + name + "\" (reliable|write|internal|strict)");
}

}  // namespace pcs
