#include "hdts/document.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

namespace hdts {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0, 0);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text_of(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = text_of(it.value(), where + "." + it.key());
  return out;
}

const json* optional_object(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) return nullptr;
  if (!it->is_object()) fail(key, "expected an object");
  return &*it;
}

TransitionSystem parse_system(const Alphabet& sigma, const json& j, const std::string& where) {
  auto states = strings(field(j, "states", where), where + ".states");
  std::vector<ActionDecl> actions;
  const json& acts = field(j, "actions", where);
  if (!acts.is_array()) fail(where + ".actions", "expected an array");
  for (std::size_t i = 0; i < acts.size(); ++i) {
    std::string w = where + ".actions[" + std::to_string(i) + "]";
    actions.push_back({text_of(field(acts[i], "id", w), w + ".id"), text_of(field(acts[i], "label", w), w + ".label")});
  }
  std::vector<TransitionDecl> transitions;
  const json& ts = field(j, "transitions", where);
  if (!ts.is_array()) fail(where + ".transitions", "expected an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string w = where + ".transitions[" + std::to_string(i) + "]";
    auto acts_i = strings(field(ts[i], "acts", w), w + ".acts");
    if (acts_i.empty()) fail(w, "a transition needs at least one action");
    transitions.push_back({text_of(field(ts[i], "from", w), w + ".from"), std::move(acts_i),
                           text_of(field(ts[i], "to", w), w + ".to")});
  }
  try {
    return TransitionSystem(sigma, std::move(states), std::move(actions), transitions);
  } catch (const StructuralError& e) {
    fail(where, e.what());
  }
}

json emit_system(const TransitionSystem& x) {
  json j;
  j["states"] = x.state_names();
  json acts = json::array();
  for (Index a = 0; a < x.action_count(); ++a)
    acts.push_back({{"id", x.action_name(a)}, {"label", x.action_label_name(a)}});
  j["actions"] = std::move(acts);
  using Row = std::tuple<std::string, std::vector<std::string>, std::string>;
  std::vector<Row> rows;
  for (const auto& t : x.transitions()) {
    Row r{x.state_name(t.source), {}, x.state_name(t.target)};
    for (Index a : t.actions) std::get<1>(r).push_back(x.action_name(a));
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  json ts = json::array();
  for (auto& [from, acts_r, to] : rows) ts.push_back({{"from", from}, {"acts", acts_r}, {"to", to}});
  j["transitions"] = std::move(ts);
  return j;
}

json emit_map(const Morphism& f) {
  json j;
  json states = json::object(), actions = json::object();
  for (Index s = 0; s < f.source.state_count(); ++s)
    states[f.source.state_name(s)] = f.target.state_name(f.state_map[s]);
  for (Index a = 0; a < f.source.action_count(); ++a)
    actions[f.source.action_name(a)] = f.target.action_name(f.action_map[a]);
  j["states"] = std::move(states);
  j["actions"] = std::move(actions);
  return j;
}

}  // namespace

const TransitionSystem& Document::system(const std::string& name) const {
  auto it = systems.find(name);
  if (it == systems.end()) throw ArgumentError("no system named '" + name + "'");
  return it->second;
}

const MorphismEntry& Document::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw ArgumentError("no morphism named '" + name + "'");
  return it->second;
}

PointedSystem Document::pointed_system(const std::string& name) const {
  auto it = pointed.find(name);
  if (it == pointed.end()) throw ArgumentError("no pointed system named '" + name + "'");
  const TransitionSystem& x = system(it->second.system);
  return PointedSystem{x, x.state_index(it->second.base)};
}

void Document::put(const std::string& name, const TransitionSystem& x) {
  if (!(x.alphabet() == sigma)) throw StructuralError("system '" + name + "' uses another alphabet");
  systems.insert_or_assign(name, x);
}

void Document::put(const std::string& name, const std::string& source, const std::string& target,
                   const Morphism& f) {
  if (!(system(source) == f.source) || !(system(target) == f.target))
    throw StructuralError("morphism '" + name + "' does not match its named ends");
  morphisms.insert_or_assign(name, MorphismEntry{source, target, f});
}

Document parse_document(std::string_view text) {
  // Duplicate keys are rejected: the callback sees every key in order.
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open.emplace_back(); break;
      case json::parse_event_t::object_end: open.pop_back(); break;
      case json::parse_event_t::key:
        if (!open.back().insert(parsed.get<std::string>()).second && duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto k = msg.find("syntax error"); k != std::string::npos) msg = msg.substr(k);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg, line, col);
  }
  if (!duplicate.empty()) fail("document", "duplicate name '" + duplicate + "'");
  if (!root.is_object()) fail("document", "expected an object");

  Document doc;
  if (auto it = root.find("version"); it != root.end()) doc.version = text_of(*it, "version");
  try {
    doc.sigma = Alphabet(strings(field(root, "sigma", "document"), "sigma"));
  } catch (const ArgumentError& e) {
    fail("sigma", e.what());
  }
  if (auto* systems = optional_object(root, "systems"))
    for (auto it = systems->begin(); it != systems->end(); ++it)
      doc.systems.emplace(it.key(), parse_system(doc.sigma, it.value(), "systems." + it.key()));
  if (auto* morphisms = optional_object(root, "morphisms"))
    for (auto it = morphisms->begin(); it != morphisms->end(); ++it) {
      std::string w = "morphisms." + it.key();
      const json& j = it.value();
      std::string src = text_of(field(j, "source", w), w + ".source");
      std::string tgt = text_of(field(j, "target", w), w + ".target");
      if (!doc.systems.contains(src)) fail(w, "unknown system '" + src + "'");
      if (!doc.systems.contains(tgt)) fail(w, "unknown system '" + tgt + "'");
      auto states = string_map(field(j, "states", w), w + ".states");
      auto actions = string_map(field(j, "actions", w), w + ".actions");
      try {
        doc.morphisms.emplace(it.key(), MorphismEntry{src, tgt,
                                                      resolve_morphism(doc.systems.at(src), doc.systems.at(tgt),
                                                                       states, actions)});
      } catch (const StructuralError& e) {
        fail(w, e.what());
      }
    }
  if (auto* pointed = optional_object(root, "pointed"))
    for (auto it = pointed->begin(); it != pointed->end(); ++it) {
      std::string w = "pointed." + it.key();
      PointedEntry p{text_of(field(it.value(), "system", w), w + ".system"),
                     text_of(field(it.value(), "base", w), w + ".base")};
      auto sys = doc.systems.find(p.system);
      if (sys == doc.systems.end()) fail(w, "unknown system '" + p.system + "'");
      if (!sys->second.find_state(p.base)) fail(w, "unknown state '" + p.base + "'");
      doc.pointed.emplace(it.key(), std::move(p));
    }
  if (auto* decs = optional_object(root, "decompositions"))
    for (auto it = decs->begin(); it != decs->end(); ++it) {
      std::string w = "decompositions." + it.key();
      const json& j = it.value();
      DecompositionEntry d;
      d.base = text_of(field(j, "base", w), w + ".base");
      if (!doc.systems.contains(d.base)) fail(w, "unknown system '" + d.base + "'");
      try {
        d.family = parse_family(text_of(field(j, "family", w), w + ".family"));
      } catch (const ArgumentError& e) {
        fail(w, e.what());
      }
      const json& cells = field(j, "cells", w);
      if (!cells.is_array()) fail(w + ".cells", "expected an array");
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string wc = w + ".cells[" + std::to_string(i) + "]";
        CellEntry c;
        c.generator = text_of(field(cells[i], "generator", wc), wc + ".generator");
        if (!doc.morphisms.contains(c.generator)) fail(wc, "unknown morphism '" + c.generator + "'");
        c.states = string_map(field(cells[i], "states", wc), wc + ".states");
        c.actions = string_map(field(cells[i], "actions", wc), wc + ".actions");
        d.cells.push_back(std::move(c));
      }
      doc.decompositions.emplace(it.key(), std::move(d));
    }
  return doc;
}

std::string emit_document(const Document& doc) {
  json root;
  root["version"] = doc.version;
  root["sigma"] = doc.sigma.labels();
  json systems = json::object();
  for (const auto& [name, x] : doc.systems) systems[name] = emit_system(x);
  root["systems"] = std::move(systems);
  json morphisms = json::object();
  for (const auto& [name, m] : doc.morphisms) {
    json j = emit_map(m.map);
    j["source"] = m.source;
    j["target"] = m.target;
    morphisms[name] = std::move(j);
  }
  root["morphisms"] = std::move(morphisms);
  json pointed = json::object();
  for (const auto& [name, p] : doc.pointed) pointed[name] = {{"system", p.system}, {"base", p.base}};
  root["pointed"] = std::move(pointed);
  if (!doc.decompositions.empty()) {
    json decs = json::object();
    for (const auto& [name, d] : doc.decompositions) {
      json cells = json::array();
      for (const auto& c : d.cells)
        cells.push_back({{"generator", c.generator}, {"states", c.states}, {"actions", c.actions}});
      decs[name] = {{"base", d.base}, {"family", to_string(d.family)}, {"cells", std::move(cells)}};
    }
    root["decompositions"] = std::move(decs);
  }
  return root.dump(2) + "\n";
}

CellularDecomposition resolve_decomposition(const Document& doc, const std::string& name) {
  auto it = doc.decompositions.find(name);
  if (it == doc.decompositions.end()) throw ArgumentError("no decomposition named '" + name + "'");
  const DecompositionEntry& e = it->second;
  CellularDecomposition d{doc.system(e.base), e.family, {}};
  TransitionSystem stage = d.base;
  for (std::size_t k = 0; k < e.cells.size(); ++k) {
    const Morphism& g = doc.morphism(e.cells[k].generator).map;
    Morphism at = [&] {
      try {
        return resolve_morphism(g.source, stage, e.cells[k].states, e.cells[k].actions);
      } catch (const StructuralError& err) {
        throw ArgumentError("cell " + std::to_string(k + 1) + ": " + err.what());
      }
    }();
    d.cells.push_back(Cell{g, at});
    stage = attach(stage, d.cells.back(), std::to_string(k + 1)).system;
  }
  return d;
}

}  // namespace hdts
