#include "regsep/io.hpp"

#include <cctype>
#include <fstream>
#include <map>

#include "regsep/errors.hpp"

namespace regsep {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string");
}

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

}  // namespace

BuchiVass instance_from_json(const json& j, std::vector<std::string>* diagnostics) {
  std::vector<std::string> diags;
  BuchiVass v;
  try {
    v.dimension = j.at("dimension").get<int>();
    const json& ja = j.at("alphabet");
    if (ja.contains("dyck"))
      v.alphabet = Alphabet::dyck(ja.at("dyck").get<int>());
    else
      v.alphabet = Alphabet::named(ja.at("letters").get<std::vector<std::string>>());

    std::map<std::string, int> state_ids;
    for (const auto& s : j.at("states")) {
      std::string name = s.get<std::string>();
      if (state_ids.count(name)) diags.push_back("DuplicateState " + name);
      state_ids[name] = v.add_state(name);
    }
    std::string init = j.at("initial").get<std::string>();
    if (!state_ids.count(init)) {
      diags.push_back("UnknownInitialState " + init);
    } else {
      v.initial = state_ids[init];
    }
    for (const auto& f : j.at("finals")) {
      std::string name = f.get<std::string>();
      if (!state_ids.count(name)) {
        diags.push_back("UnknownFinalState " + name);
        continue;
      }
      v.finals[state_ids[name]] = true;
    }
    for (const auto& t : j.at("transitions")) {
      Transition tr;
      std::string from = t.at("from").get<std::string>();
      std::string to = t.at("to").get<std::string>();
      if (!state_ids.count(from) || !state_ids.count(to)) {
        diags.push_back("UnknownTransitionEndpoint " + from + " -> " + to);
        continue;
      }
      tr.source = state_ids[from];
      tr.target = state_ids[to];
      if (t.contains("word"))
        for (const auto& run : t.at("word")) {
          std::string letter = run.at(0).get<std::string>();
          int id = v.alphabet.find(letter);
          if (id < 0) {
            diags.push_back("UnknownLetter " + letter);
            continue;
          }
          tr.label.append(id, int_from_json(run.at(1)));
        }
      if (t.contains("update"))
        for (const auto& u : t.at("update")) tr.update.push_back(int_from_json(u));
      if (static_cast<int>(tr.update.size()) != v.dimension) {
        // tolerate omitted updates for 0-dimensional automata
        if (tr.update.empty() && v.dimension == 0)
          ;
        else
          diags.push_back("ArityMismatch in transition " + from + " -> " + to);
      }
      tr.update.resize(v.dimension, Int(0));
      v.transitions.push_back(std::move(tr));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  for (const auto& d : validate(v)) diags.push_back(d);
  if (diagnostics)
    *diagnostics = diags;
  else if (!diags.empty())
    throw ParseError("invalid instance: " + diags.front());
  return v;
}

json instance_to_json(const BuchiVass& v) {
  json j;
  j["dimension"] = v.dimension;
  if (v.alphabet.is_dyck())
    j["alphabet"] = {{"dyck", v.alphabet.pairs()}};
  else {
    std::vector<std::string> letters;
    for (int i = 0; i < v.alphabet.size(); ++i) letters.push_back(v.alphabet.name(i));
    j["alphabet"] = {{"letters", letters}};
  }
  j["states"] = v.state_names;
  j["initial"] = v.state_names.at(v.initial);
  std::vector<std::string> finals;
  for (int i = 0; i < v.num_states(); ++i)
    if (v.finals[i]) finals.push_back(v.state_names[i]);
  j["finals"] = finals;
  json ts = json::array();
  for (const auto& t : v.transitions) {
    json jt;
    jt["from"] = v.state_names[t.source];
    jt["to"] = v.state_names[t.target];
    json word = json::array();
    for (const auto& r : t.label.runs())
      word.push_back(json::array({v.alphabet.name(r.letter), int_to_json(r.count)}));
    jt["word"] = word;
    json update = json::array();
    for (const auto& u : t.update) update.push_back(int_to_json(u));
    jt["update"] = update;
    ts.push_back(jt);
  }
  j["transitions"] = ts;
  return j;
}

BuchiVass load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const BuchiVass& v, const std::string& path) {
  std::ofstream out(path);
  out << instance_to_json(v).dump(2) << "\n";
}

namespace {

RleWord parse_word_part(const std::string& text, const Alphabet& ab) {
  RleWord w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text.compare(i, 3, "eps") == 0) {
      i += 3;
      skip_space();
      continue;
    }
    std::size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a letter at '" + text.substr(i) + "'");
    // Longest alphabetic+digit chunk that names a letter; Dyck names are a
    // single letter plus digits, which also permits juxtaposition.
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string name = text.substr(start, i - start);
    int id = ab.find(name);
    if (id < 0) throw ParseError("unknown letter '" + name + "'");
    Int count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t d0 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (d0 == i) throw ParseError("missing count after '^'");
      count = Int(text.substr(d0, i - d0));
    }
    w.append(id, count);
    skip_space();
  }
  return w;
}

}  // namespace

UPWord parse_upword(const std::string& text, const Alphabet& alphabet) {
  std::size_t at = text.find('@');
  if (at == std::string::npos) throw ParseError("UP word needs a '@' divider");
  if (text.find('@', at + 1) != std::string::npos)
    throw ParseError("UP word has more than one '@'");
  RleWord u = parse_word_part(text.substr(0, at), alphabet);
  RleWord v = parse_word_part(text.substr(at + 1), alphabet);
  if (v.empty()) throw EmptyPeriod();
  return {u, v};
}

std::string upword_to_string(const UPWord& w, const Alphabet& alphabet) {
  return w.to_string(alphabet);
}

json verdict_to_json(const Verdict& v) {
  json j;
  if (v.separable) {
    j["verdict"] = "separable";
    json cover = json::array();
    for (const auto& atom : v.cover) {
      if (atom.is_p) {
        cover.push_back({{"P", {{"i", atom.i}, {"k", int_to_json(atom.k)}}}});
      } else {
        json xs = json::array();
        for (const auto& e : atom.x) xs.push_back(int_to_json(e));
        cover.push_back({{"S", {{"x", xs}, {"k", int_to_json(atom.k)}}}});
      }
    }
    j["cover"] = cover;
  } else {
    j["verdict"] = "inseparable";
    j["profile"] = {{"edges", v.failing_profile->edges}};
    json ys = json::array();
    for (const auto& e : v.farkas_y) ys.push_back(int_to_json(e));
    j["farkas_y"] = ys;
    if (v.flower) {
      j["flower"] = {{"anchor", v.flower->anchor},
                     {"alpha", v.flower->alpha},
                     {"beta", v.flower->beta},
                     {"gamma", v.flower->gamma}};
    }
  }
  return j;
}

json report_to_json(const DecideTrace& tr, double seconds) {
  json j = verdict_to_json(tr.verdict);
  j["stats"] = {{"km_nodes", tr.km.nodes.size()},
                {"km_edges", tr.km.edges.size()},
                {"km_vbar_nodes", tr.pump.km_vbar.nodes.size()},
                {"profiles", tr.profiles.size()},
                {"pump_k", int_to_json(tr.pump.k)},
                {"seconds", seconds}};
  return j;
}

std::string km_dump(const KarpMillerGraph& km) {
  std::string s;
  for (std::size_t i = 0; i < km.nodes.size(); ++i) {
    s += "node " + std::to_string(i) + ": " + km.node_to_string(static_cast<int>(i));
    if (km.node_final(static_cast<int>(i))) s += " (final)";
    if (static_cast<int>(i) == km.initial) s += " (initial)";
    s += "\n";
  }
  for (std::size_t e = 0; e < km.edges.size(); ++e) {
    const KmEdge& ed = km.edges[e];
    const Transition& t = km.vass.transitions[ed.trans];
    s += "edge " + std::to_string(e) + ": " + std::to_string(ed.src) + " -" +
         t.label.to_string(km.vass.alphabet) + "|" + vec_to_string(t.update) + "-> " +
         std::to_string(ed.tgt) + "\n";
  }
  return s;
}

std::string profiles_dump(const KarpMillerGraph& km, const std::vector<Profile>& profiles) {
  std::string s = "profiles: " + std::to_string(profiles.size()) + "\n";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const Profile& p = profiles[i];
    s += "profile " + std::to_string(i) + ": edges {";
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
      if (e) s += ",";
      s += std::to_string(p.edges[e]);
    }
    s += "} anchor " + std::to_string(p.witness.anchor);
    s += " primitive-cycles " + std::to_string(primitive_cycles(km, p.edges).size());
    s += "\n";
  }
  return s;
}

std::string pump_dump(const PumpArtifacts& pa) {
  std::string s = "vbar dimension " + std::to_string(pa.vbar.dimension) + ", k = " +
                  pa.k.get_str() + "\n";
  s += "km(vbar) nodes " + std::to_string(pa.km_vbar.nodes.size()) + ", edges " +
       std::to_string(pa.km_vbar.edges.size()) + "\n";
  s += "pump states " + std::to_string(pa.pump_v.num_states()) + ", transitions " +
       std::to_string(pa.pump_v.transitions.size()) + "\n";
  for (int i = 0; i < pa.pump_v.num_states(); ++i) {
    s += "state " + std::to_string(i) + ": " + pa.pump_v.state_names[i];
    if (pa.pump_v.finals[i]) s += " (final)";
    s += "\n";
  }
  for (std::size_t t = 0; t < pa.pump_v.transitions.size(); ++t) {
    const Transition& tr = pa.pump_v.transitions[t];
    s += "trans " + std::to_string(t) + ": " + std::to_string(tr.source) + " -" +
         tr.label.to_string(pa.pump_v.alphabet) + "|" + vec_to_string(tr.update) + "-> " +
         std::to_string(tr.target) + "\n";
  }
  return s;
}

}  // namespace regsep
