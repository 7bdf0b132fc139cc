#include "bollobas/io.hpp"

#include "bollobas/errors.hpp"

#include <string>

namespace bollobas {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

int int_field(const Json& j, const char* name, const std::string& where) {
  const Json& v = field(j, name, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + name + ": expected an integer");
  return v.get<int>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

Json pair_json(const PairIndex& p) { return Json{{"i", p.i + 1}, {"j", p.j + 1}}; }

} // namespace

Json to_json(const DTuple& t) {
  Json parts = Json::array();
  for (int p = 0; p < t.arity(); ++p) parts.push_back(t.elements(p));
  return parts;
}

Json to_json(const Family& f) {
  Json tuples = Json::array();
  for (const auto& t : f) tuples.push_back(to_json(t));
  return Json{{"n", f.n()}, {"d", f.arity()}, {"tuples", std::move(tuples)}};
}

Family family_from_json(const Json& j) {
  const int n = int_field(j, "n", "family");
  const int d = int_field(j, "d", "family");
  const Json& tuples = array_at(field(j, "tuples", "family"), "family.tuples");
  const GroundSet ground(n);
  Family f(ground, d);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string where = "family.tuples[" + std::to_string(i) + "]";
    const Json& parts = array_at(tuples[i], where);
    if (parts.size() != static_cast<std::size_t>(d)) {
      throw ParseError(where + ": expected " + std::to_string(d) + " parts, got " +
                       std::to_string(parts.size()));
    }
    std::vector<std::vector<int>> lists;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::string pw = where + "[" + std::to_string(p) + "]";
      std::vector<int> elems;
      for (const auto& e : array_at(parts[p], pw)) {
        if (!e.is_number_integer()) throw ParseError(pw + ": elements must be integers");
        const int v = e.get<int>();
        if (!elems.empty() && v <= elems.back()) {
          throw ParseError(pw + ": elements must be strictly ascending");
        }
        elems.push_back(v);
      }
      lists.push_back(std::move(elems));
    }
    try {
      f.push_back(validate_tuple(lists, ground));
    } catch (const RangeError& e) {
      throw RangeError(where + ": " + e.what());
    }
  }
  return f;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rational_array(m.row(r)));
  return rows;
}

Json to_json(const SubspaceFamily& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries()) {
    Json parts = Json::array();
    for (const auto& part : e) parts.push_back(to_json(part.basis()));
    entries.push_back(std::move(parts));
  }
  return Json{{"n", f.ambient_dim()}, {"d", f.arity()}, {"entries", std::move(entries)}};
}

SubspaceFamily subspace_family_from_json(const Json& j) {
  const int n = int_field(j, "n", "subspace family");
  const int d = int_field(j, "d", "subspace family");
  if (n < 0) throw ParseError("subspace family.n: must be nonnegative");
  const Json& entries = array_at(field(j, "entries", "subspace family"), "entries");
  SubspaceFamily f(n, d);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    SubspaceFamily::Entry entry;
    for (std::size_t p = 0; p < array_at(entries[i], where).size(); ++p) {
      const std::string pw = where + "[" + std::to_string(p) + "]";
      std::vector<RationalVector> rows;
      for (const auto& row : array_at(entries[i][p], pw)) {
        RationalVector v;
        for (const auto& x : array_at(row, pw)) {
          if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
          else if (x.is_number_integer()) v.push_back(Rational(x.get<long long>()));
          else throw ParseError(pw + ": coordinates must be rational strings");
        }
        if (v.size() != static_cast<std::size_t>(n)) {
          throw ParseError(pw + ": row length " + std::to_string(v.size()) + " != n");
        }
        rows.push_back(std::move(v));
      }
      try {
        entry.emplace_back(RationalMatrix::from_rows(rows, static_cast<std::size_t>(n)));
      } catch (const DimensionError& e) {
        throw DimensionError(pw + ": " + e.what());
      }
    }
    f.push_back(std::move(entry));
  }
  return f;
}

Json to_json(const Blade& b) {
  return Json{{"n", b.ambient_dim()}, {"k", b.grade()}, {"coords", rational_array(b.coords())}};
}

Json to_json(const SystemCheck& c) {
  Json j{{"holds", c.holds}};
  j["violation"] = c.violation ? pair_json(*c.violation) : Json(nullptr);
  return j;
}

Json to_json(const SearchResult& r) {
  return Json{{"max_size", r.max_size},
              {"bound", r.bound.str()},
              {"nodes_explored", r.nodes_explored},
              {"complete", r.complete},
              {"witness", to_json(r.witness)}};
}

const char* to_string(EventMode mode) {
  switch (mode) {
    case EventMode::skew: return "skew";
    case EventMode::d3: return "d3";
    case EventMode::general: return "general";
  }
  return "?";
}

EventMode event_mode_from_string(std::string_view s) {
  if (s == "skew") return EventMode::skew;
  if (s == "d3") return EventMode::d3;
  if (s == "general") return EventMode::general;
  throw ParseError("unknown event mode '" + std::string(s) + "'");
}

Json to_json(const EventReport& r) {
  Json tuples = Json::array();
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    tuples.push_back(Json{{"index", i + 1},
                          {"hits", r.hits[i]},
                          {"estimate", to_decimal(r.estimate(i), 9)},
                          {"formula", to_string(r.formula_values[i])}});
  }
  return Json{{"mode", to_string(r.mode)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"max_simultaneous_hits", r.max_simultaneous_hits},
              {"cross_tuple_collisions", r.cross_tuple_collisions},
              {"variant_overlaps", r.variant_overlaps},
              {"tuples", std::move(tuples)}};
}

Json to_json(const GeneralPositionMap& m) {
  return Json{{"rows", m.matrix.rows()},
              {"cols", m.matrix.cols()},
              {"matrix", to_json(m.matrix)},
              {"retries", m.retries},
              {"entry_bound", m.entry_bound},
              {"constraints_verified", m.verified_constraints.size()}};
}

Json to_json(const Certificate& c) {
  Json phis = Json::array();
  for (const auto& p : c.phis) {
    Json j = to_json(p.map);
    j["k"] = p.k;
    j["intersections_preserved"] = p.intersections_preserved;
    j["pairs_checked"] = p.preserved_checked;
    j["direct_sums_span"] = p.direct_sums_span;
    phis.push_back(std::move(j));
  }
  Json eval = Json::array();
  for (const auto& row : c.evaluation) eval.push_back(rational_array(row));
  Json violations = Json::array();
  for (const auto& v : c.violations) violations.push_back(Json{{"i", v.i + 1}, {"j", v.j + 1}});
  return Json{{"m", c.m},
              {"type", c.type},
              {"skew", to_json(c.skew)},
              {"maps", std::move(phis)},
              {"evaluation", std::move(eval)},
              {"violations", std::move(violations)},
              {"verdict", c.pass ? "pass" : "fail"},
              {"bound", c.bound.str()},
              {"within_bound", c.within_bound}};
}

} // namespace bollobas
