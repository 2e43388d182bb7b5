#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "khoform/pipeline.hpp"

namespace khoform {

using nlohmann::json;

namespace {

const char* kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::Rotate: return "rotate";
    case TransformKind::Reverse: return "reverse";
    case TransformKind::Involution: return "involution";
    case TransformKind::Mirror: return "mirror";
  }
  return "?";
}

TransformKind kind_from(const std::string& s) {
  if (s == "rotate") return TransformKind::Rotate;
  if (s == "reverse") return TransformKind::Reverse;
  if (s == "involution") return TransformKind::Involution;
  if (s == "mirror") return TransformKind::Mirror;
  throw std::invalid_argument("unknown transform " + s);
}

json letter_json(const BraidLetter& l) { return {{"id", l.id}, {"gen", l.gen * l.sign}}; }

BraidLetter letter_from(const json& j) {
  int g = j.at("gen").get<int>();
  return {j.at("id").get<LetterId>(), std::abs(g), g < 0 ? -1 : 1};
}

json step_json(const TraceStep& s) {
  json j{{"rule", s.rule}, {"witness", s.witness}};
  if (s.transform)
    j["transform"] = {{"kind", kind_name(s.transform->kind)}, {"offset", s.transform->offset}};
  if (!s.removed.empty()) j["removed"] = s.removed;
  if (!s.inserted.empty()) {
    json ins = json::array();
    for (const auto& i : s.inserted) {
      json ls = json::array();
      for (const auto& l : i.letters) ls.push_back(letter_json(l));
      ins.push_back({{"after", i.after}, {"letters", ls}});
    }
    j["inserted"] = ins;
  }
  if (!s.marked.empty()) j["marked"] = s.marked;
  if (!s.unmarked.empty()) j["unmarked"] = s.unmarked;
  if (s.suspensions) j["suspensions"] = s.suspensions;
  if (s.contractible) j["contractible"] = true;
  return j;
}

template <class T>
std::vector<T> vec_or_empty(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<T>>() : std::vector<T>{};
}

TraceStep step_from(const json& j) {
  TraceStep s;
  s.rule = j.at("rule").get<std::string>();
  s.witness = vec_or_empty<LetterId>(j, "witness");
  if (j.contains("transform")) {
    const auto& t = j.at("transform");
    s.transform = Transform{kind_from(t.at("kind").get<std::string>()),
                            t.value("offset", std::size_t{0})};
  }
  s.removed = vec_or_empty<LetterId>(j, "removed");
  if (j.contains("inserted"))
    for (const auto& i : j.at("inserted")) {
      Insertion ins{i.at("after").get<LetterId>(), {}};
      for (const auto& l : i.at("letters")) ins.letters.push_back(letter_from(l));
      s.inserted.push_back(std::move(ins));
    }
  s.marked = vec_or_empty<LetterId>(j, "marked");
  s.unmarked = vec_or_empty<LetterId>(j, "unmarked");
  s.suspensions = j.value("suspensions", 0);
  s.contractible = j.value("contractible", false);
  return s;
}

}  // namespace

std::string ReductionTrace::to_json() const {
  json j;
  j["suspensions"] = suspensions;
  j["deleted"] = std::vector<LetterId>(deleted.begin(), deleted.end());
  json terms = json::array();
  for (const auto& t : wedge_terms) terms.push_back(json::parse(t.to_json()));
  j["wedge_terms"] = terms;
  json steps = json::array();
  for (const auto& s : log) steps.push_back(step_json(s));
  j["log"] = steps;
  j["graph_log"] = graph_log;
  j["contractible"] = contractible;
  return j.dump();
}

ReductionTrace ReductionTrace::from_json(const std::string& text) {
  json j = json::parse(text);
  ReductionTrace t;
  t.suspensions = j.at("suspensions").get<int>();
  for (LetterId id : j.at("deleted").get<std::vector<LetterId>>()) t.deleted.insert(id);
  for (const auto& w : j.at("wedge_terms")) t.wedge_terms.push_back(HomotopyType::from_json(w.dump()));
  for (const auto& s : j.at("log")) t.log.push_back(step_from(s));
  t.graph_log = j.value("graph_log", std::vector<std::string>{});
  t.contractible = j.value("contractible", false);
  return t;
}

void apply_step(ReplayState& st, const TraceStep& s) {
  if (s.transform) st.word = transform(st.word, *s.transform);
  for (LetterId id : s.removed)
    if (st.word.index_of(id) < 0)
      throw std::invalid_argument(s.rule + ": letter " + std::to_string(id) + " is absent");
  if (!s.removed.empty()) st.word = st.word.without(s.removed);
  for (const auto& ins : s.inserted) {
    std::size_t pos = 0;
    if (ins.after >= 0) {
      auto i = st.word.index_of(ins.after);
      if (i < 0)
        throw std::invalid_argument(s.rule + ": anchor " + std::to_string(ins.after) + " is absent");
      pos = static_cast<std::size_t>(i) + 1;
    }
    st.word = st.word.with_inserted(pos, ins.letters);
  }
  for (LetterId id : s.marked) st.deleted.insert(id);
  for (LetterId id : s.unmarked) st.deleted.erase(id);
  st.suspensions += s.suspensions;
  st.contractible = st.contractible || s.contractible;
}

ReplayState replay(const BraidWord& input, const ReductionTrace& trace) {
  ReplayState st{input, {}, 0, false};
  for (const auto& s : trace.log) apply_step(st, s);
  return st;
}

}  // namespace khoform
