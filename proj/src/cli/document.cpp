#include <json.hpp>
#include <set>

#include "kumlift/cli.hpp"

namespace kumlift::cli {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Op> kOps = {{"check-sp", Op::check_sp},       {"check-hodge", Op::check_hodge},
                                        {"check-lift", Op::check_lift},   {"kummer-split", Op::kummer_split},
                                        {"pd-square", Op::pd_square},     {"restrict", Op::restrict}};

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ValidationError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

Rational parse_entry(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw ValidationError(where + ": matrix entries must be rational strings");
}

RatMatrix parse_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ValidationError(where + ": matrix must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty()) throw ValidationError(where + ": matrix rows must be non-empty arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(parse_entry(x, where));
    if (!rows.empty() && r.size() != rows.front().size()) throw ValidationError(where + ": ragged matrix");
    rows.push_back(std::move(r));
  }
  return RatMatrix::from_rows(rows);
}

class Resolver {
 public:
  explicit Resolver(const json& doc) : doc_(doc) {}

  Problem resolve() {
    if (!doc_.is_object()) throw ValidationError("document must be a JSON object");
    for (const auto& key : {"tori", "homs", "block_maps"})
      if (doc_.contains(key) && !doc_.at(key).is_object()) throw ValidationError(std::string("'") + key + "' must be an object");
    if (doc_.contains("tori"))
      for (const auto& [label, _] : doc_.at("tori").items()) torus(label);
    if (doc_.contains("homs"))
      for (const auto& [label, entry] : doc_.at("homs").items()) hom(label, entry);
    if (doc_.contains("block_maps"))
      for (const auto& [label, entry] : doc_.at("block_maps").items()) block_map(label, entry);
    const json& tasks = field(doc_, "tasks", "document");
    if (!tasks.is_array()) throw ValidationError("'tasks' must be an array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      Task t = task(tasks[i], i);
      if (!ids.insert(t.id).second) throw ValidationError("duplicate task id '" + t.id + "'");
      out_.tasks.push_back(std::move(t));
    }
    return std::move(out_);
  }

 private:
  const ComplexTorus& torus(const std::string& label) {
    if (auto it = out_.tori.find(label); it != out_.tori.end()) return it->second;
    if (!doc_.contains("tori") || !doc_.at("tori").contains(label)) throw ValidationError("unknown torus '" + label + "'");
    if (!pending_.insert(label).second) throw ValidationError("torus '" + label + "' is defined in terms of itself");
    const json& entry = doc_.at("tori").at(label);
    const std::string where = "torus '" + label + "'";
    ComplexTorus t;
    try {
      if (entry.contains("dual_of")) {
        t = dual_torus(torus(string_field(entry, "dual_of", where)));
      } else if (entry.contains("product")) {
        const json& parts = entry.at("product");
        if (!parts.is_array() || parts.empty()) throw ValidationError(where + ": 'product' must list tori");
        std::vector<ComplexTorus> factors;
        for (const auto& p : parts) {
          if (!p.is_string()) throw ValidationError(where + ": product factors must be labels");
          factors.push_back(torus(p.get<std::string>()));
        }
        t = product_torus(factors);
      } else {
        const json& g = field(entry, "g", where);
        if (!g.is_number_integer() || g.get<long>() < 1 || g.get<long>() > 8)
          throw ValidationError(where + ": 'g' must be an integer in 1..8");
        t = make_torus(g.get<int>(), parse_matrix(field(entry, "J", where), where), label);
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
    t.label = label;
    pending_.erase(label);
    return out_.tori.emplace(label, std::move(t)).first->second;
  }

  void hom(const std::string& label, const json& entry) {
    const std::string where = "hom '" + label + "'";
    const ComplexTorus& s = torus(string_field(entry, "source", where));
    const ComplexTorus& t = torus(string_field(entry, "target", where));
    try {
      out_.homs.emplace(label, make_hom(s, t, parse_matrix(field(entry, "matrix", where), where)));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  void block_map(const std::string& label, const json& entry) {
    const std::string where = "block map '" + label + "'";
    if (out_.symplectic.count(label) || out_.mukai.count(label)) throw ValidationError(where + ": duplicate label");
    const std::string kind = string_field(entry, "kind", where);
    const ComplexTorus& s = torus(string_field(entry, "source", where));
    const ComplexTorus& t = torus(string_field(entry, "target", where));
    const RatMatrix m = parse_matrix(field(entry, "matrix", where), where);
    try {
      if (kind == "symplectic") {
        SymplecticMap g = make_block_map(s, t, m);
        if (!g.g.is_square() || g.g.determinant() == 0) throw ValidationError(where + ": assembled map is singular");
        out_.symplectic.emplace(label, std::move(g));
      } else if (kind == "mukai") {
        out_.mukai.emplace(label, make_block_iso(mukai_space(s), mukai_space(t), m));
      } else {
        throw ValidationError(where + ": kind must be 'symplectic' or 'mukai'");
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  const TorusHom& isogeny(const std::string& label, const std::string& where) {
    const auto it = out_.homs.find(label);
    if (it == out_.homs.end()) throw ValidationError(where + ": unknown hom '" + label + "'");
    const TorusHom& q = it->second;
    if (!q.integral() || !q.M.is_square() || q.M.determinant() == 0)
      throw ValidationError(where + ": hom '" + label + "' is not an integral isogeny");
    return q;
  }

  // Mukai spaces a map acts between, whichever kind it is.
  std::pair<MukaiSpace, MukaiSpace> spaces(const std::string& label, const std::string& where) {
    if (auto it = out_.symplectic.find(label); it != out_.symplectic.end())
      return {mukai_space(it->second.source), mukai_space(it->second.target)};
    if (auto it = out_.mukai.find(label); it != out_.mukai.end()) return {it->second.source, it->second.target};
    throw ValidationError(where + ": unknown block map '" + label + "'");
  }

  Task task(const json& entry, std::size_t index) {
    std::string where = "task " + std::to_string(index);
    if (!entry.is_object()) throw ValidationError(where + ": must be an object");
    Task t;
    t.id = entry.contains("id") ? string_field(entry, "id", where) : "task" + std::to_string(index);
    where = "task '" + t.id + "'";
    const std::string op = string_field(entry, "op", where);
    const auto op_it = kOps.find(op);
    if (op_it == kOps.end()) throw ValidationError(where + ": unknown op '" + op + "'");
    t.op = op_it->second;

    if (t.op == Op::pd_square) {
      t.hom_label = string_field(entry, "isogeny", where);
      isogeny(t.hom_label, where);
      return t;
    }
    t.map_label = string_field(entry, "map", where);
    const auto [src, tgt] = spaces(t.map_label, where);
    switch (t.op) {
      case Op::check_sp:
        if (!out_.symplectic.count(t.map_label)) throw ValidationError(where + ": check-sp needs a symplectic map");
        break;
      case Op::check_hodge:
        break;
      case Op::kummer_split: {
        const auto it = out_.symplectic.find(t.map_label);
        if (it == out_.symplectic.end()) throw ValidationError(where + ": kummer-split needs a symplectic map");
        const json& n = field(entry, "n", where);
        if (!n.is_number_integer() || n.get<long>() < 2 || n.get<long>() > 12)
          throw ValidationError(where + ": 'n' must be an integer in 2..12");
        t.n = n.get<long>();
        if (it->second.source.g != 2 || it->second.target.g != 2)
          throw ValidationError(where + ": kummer-split needs abelian surfaces");
        break;
      }
      case Op::check_lift:
      case Op::restrict: {
        t.hom_label = string_field(entry, "isogeny", where);
        t.hom2_label = entry.contains("isogeny_target") ? string_field(entry, "isogeny_target", where) : t.hom_label;
        const TorusHom& q = isogeny(t.hom_label, where);
        const TorusHom& q2 = isogeny(t.hom2_label, where);
        if (t.op == Op::restrict) {
          t.on_cover = true;
        } else if (entry.contains("on")) {
          const std::string on = string_field(entry, "on", where);
          if (on != "base" && on != "cover") throw ValidationError(where + ": 'on' must be 'base' or 'cover'");
          t.on_cover = on == "cover";
        }
        const MukaiSpace want_src = mukai_space(t.on_cover ? q.source : q.target);
        const MukaiSpace want_tgt = mukai_space(t.on_cover ? q2.source : q2.target);
        if (!(src == want_src) || !(tgt == want_tgt))
          throw ValidationError(where + ": map does not act on the Mukai spaces of the isogenies");
        if (t.on_cover && !out_.mukai.count(t.map_label))
          throw ValidationError(where + ": maps on the cover must be given as mukai block maps");
        if (t.on_cover && !out_.mukai.at(t.map_label).F.is_integral())
          throw ValidationError(where + ": maps on the cover must be integral");
        break;
      }
      case Op::pd_square:
        break;
    }
    return t;
  }

  const json& doc_;
  Problem out_;
  std::set<std::string> pending_;
};

}  // namespace

std::string op_name(Op op) {
  for (const auto& [name, value] : kOps)
    if (value == op) return name;
  return "?";
}

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return Resolver(doc).resolve();
}

}  // namespace kumlift::cli
