#include "sl2swc_cli/json_io.hpp"

#include "sl2swc/error.hpp"
#include "sl2swc/graded_ring.hpp"

namespace sl2swc::cli {
namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::CacheError, what); }

json value_coeffs(const Cyclo& v, int m) {
  const Cyclo l = v.order() == m ? v : v.lift(m);
  return json(l.coeffs());
}

json matrix_json(const Group& g, std::size_t element) {
  const auto& f = *g.field();
  const auto m = std::get<Mat2>(g.element(element));
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(f.element_string(m.e[static_cast<std::size_t>(2 * r + c)]));
    rows.push_back(row);
  }
  return rows;
}

json matrix_indices(const Group& g, std::size_t element) {
  const auto m = std::get<Mat2>(g.element(element));
  return json(std::vector<std::uint32_t>(m.e.begin(), m.e.end()));
}

}  // namespace

std::string group_kind(const Group& g) {
  switch (g.family()) {
    case GroupFamily::SL2:
      return "sl2";
    case GroupFamily::GL2:
      return "gl2";
    default:
      fail(ErrorKind::InvalidArgument, "only SL(2,q) and GL(2,q) tables are serialized");
  }
}

GroupPtr make_group(const std::string& kind, int q) {
  if (kind == "sl2") return Group::sl2(q);
  if (kind == "gl2") return Group::gl2(q);
  fail(ErrorKind::InvalidArgument, "unknown group kind '" + kind + "'");
}

json table_json(const CharacterTable& t) {
  const Group& g = *t.group();
  const auto& cd = g.classes();
  const int m = t.cyclotomic_order();
  json j;
  j["schema"] = kSchema;
  j["group"] = group_kind(g);
  j["q"] = g.q();
  j["field_modulus"] = g.field()->modulus_string();
  j["order"] = g.order();
  j["exponent"] = m;
  j["dixon_prime"] = t.dixon_prime();
  json classes = json::array();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    json cj;
    cj["representative"] = matrix_json(g, cd.representative[c]);
    cj["representative_indices"] = matrix_indices(g, cd.representative[c]);
    cj["size"] = cd.size[c];
    cj["element_order"] = cd.rep_order[c];
    classes.push_back(cj);
  }
  j["classes"] = classes;
  json chars = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& chi = t.irreducible(i);
    json cj;
    cj["label"] = "X" + std::to_string(i + 1);
    cj["degree"] = t.degree(i);
    cj["indicator"] = t.indicator(i);
    cj["dual"] = "X" + std::to_string(t.dual(i) + 1);
    if (auto s = t.central_sign(i)) {
      cj["central_sign"] = *s;
    } else {
      cj["central_sign"] = nullptr;
    }
    json coeffs = json::array();
    json shown = json::array();
    for (const auto& v : chi.values()) {
      coeffs.push_back(value_coeffs(v, m));
      shown.push_back((v.order() == m ? v : v.lift(m)).to_string());
    }
    cj["values"] = coeffs;
    cj["display"] = shown;
    chars.push_back(cj);
  }
  j["characters"] = chars;
  return j;
}

TablePtr table_from_json(const json& j, const GroupPtr& group) {
  try {
    if (j.at("schema").get<std::string>() != kSchema) bad("schema mismatch");
    if (j.at("group").get<std::string>() != group_kind(*group)) bad("group kind mismatch");
    if (j.at("q").get<int>() != group->q()) bad("q mismatch");
    const auto& cd = group->classes();
    const int m = j.at("exponent").get<int>();
    if (m != static_cast<int>(cd.exponent)) bad("exponent mismatch");
    const auto& classes = j.at("classes");
    if (classes.size() != cd.count()) bad("class count mismatch");
    for (std::size_t c = 0; c < cd.count(); ++c) {
      const json& cj = classes[c];
      if (cj.at("size").get<std::size_t>() != cd.size[c] ||
          cj.at("representative_indices") != matrix_indices(*group, cd.representative[c])) {
        bad("class " + std::to_string(c) + " does not match the group");
      }
    }
    const auto phi = static_cast<std::size_t>(euler_phi(m));
    std::vector<ClassFunction> chars;
    for (const auto& cj : j.at("characters")) {
      std::vector<Cyclo> values;
      for (const auto& v : cj.at("values")) {
        auto coeffs = v.get<std::vector<std::int64_t>>();
        if (coeffs.size() != phi) bad("value vector length differs from phi(m)");
        values.push_back(Cyclo::from_power_basis(m, coeffs));
      }
      if (values.size() != cd.count()) bad("character length mismatch");
      chars.emplace_back(group, std::move(values));
    }
    auto t = CharacterTable::assemble(group, std::move(chars), j.at("dixon_prime").get<std::int64_t>());
    const auto& cj = j.at("characters");
    for (std::size_t i = 0; i < t->size(); ++i) {
      if (cj[i].at("degree").get<std::int64_t>() != t->degree(i) || cj[i].at("indicator").get<int>() != t->indicator(i)) {
        bad("stored metadata disagrees with the values");
      }
    }
    return t;
  } catch (const json::exception& e) {
    bad(std::string("malformed table document: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheError) throw;
    bad("invalid table: " + e.detail());
  }
}

json terms_json(const GradedClass& c) {
  json j = json::object();
  for (const auto& [d, ms] : c.terms()) j[std::to_string(d)] = ms;
  return j;
}

json swc_json(const SwcReport& r, const std::string& rep) {
  json j;
  j["schema"] = kSchema;
  j["q"] = r.q;
  j["rep"] = rep;
  j["parity"] = std::string(to_string(r.parity));
  j["degree"] = r.degree;
  j["genuine"] = r.genuine;
  j["r_or_m"] = r.r_or_m;
  if (r.ell) {
    j["ell"] = *r.ell;
  } else {
    j["ell"] = nullptr;
  }
  j["truncation"] = r.total.max_degree;
  j["ring"] = r.total.cls.ring()->name();
  j["total"] = r.total.cls.to_string();
  j["total_terms"] = terms_json(r.total.cls);
  j["degree_truncated"] = r.total.degree_truncated;
  j["consistent"] = r.total.consistent;
  if (r.total_v) {
    j["total_v"] = r.total_v->to_string();
    j["total_v_terms"] = terms_json(*r.total_v);
    j["total_v_truncation"] = r.total_v->ring()->max_degree();
  }
  if (r.obstruction.degree) {
    j["obstruction_degree"] = *r.obstruction.degree;
    j["obstruction_class"] = r.obstruction.class_string;
  } else {
    j["obstruction_degree"] = "infinity";
    j["obstruction_class"] = nullptr;
  }
  j["obstruction_verified"] = r.obstruction.verified;
  if (r.top) {
    j["top_nonzero"] = r.top->nonzero;
    j["criterion"] = r.top->criterion;
    j["top_checked"] = r.top->checked;
  } else {
    j["top_nonzero"] = nullptr;
    j["criterion"] = nullptr;
  }
  return j;
}

json case_json(const CaseResult& c) {
  json j;
  j["rep"] = c.rep;
  j["degree"] = c.degree;
  j["check"] = c.check;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  if (c.first_difference) {
    j["first_difference"] = *c.first_difference;
  } else {
    j["first_difference"] = nullptr;
  }
  return j;
}

json suite_json(const SuiteReport& r, std::size_t max_failures) {
  json j;
  j["schema"] = kSchema;
  j["suite"] = r.suite;
  j["q"] = r.q;
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["passes"] = r.passes;
  j["failure_count"] = r.cases - r.passes;
  json f = json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) f.push_back(case_json(r.failures[i]));
  j["failures"] = f;
  return j;
}

json dickson_json(const DicksonResult& d, int rank) {
  json j;
  j["schema"] = kSchema;
  j["rank"] = rank;
  j["truncation"] = d.ring->max_degree();
  j["degrees"] = d.degrees;
  json inv = json::array();
  for (std::size_t i = 0; i < d.d.size(); ++i) {
    json e;
    e["name"] = "d" + std::to_string(i + 1);
    e["degree"] = d.degrees[i];
    e["polynomial"] = d.d[i].to_string();
    inv.push_back(e);
  }
  j["invariants"] = inv;
  j["product"] = d.product.to_string();
  j["product_terms"] = terms_json(d.product);
  return j;
}

json cohomology_json(const std::string& group, const RingPresentation& p, int max_degree) {
  const auto ring = cached_ring(p, max_degree);
  json j;
  j["schema"] = kSchema;
  j["group"] = group;
  j["ring"] = p.name;
  j["max_degree"] = max_degree;
  json gens = json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    json g;
    g["name"] = p.generators[i];
    g["degree"] = p.degrees[i];
    gens.push_back(g);
  }
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(to_string(r, p.generators));
  j["relations"] = rels;
  j["dimensions"] = ring->dimensions();
  json basis = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    json b = json::array();
    for (auto k : ring->basis(d)) b.push_back(ring->monomial_string(k));
    basis.push_back(b);
  }
  j["basis"] = basis;
  return j;
}

json error_json(const std::string& kind, const std::string& detail) {
  json j;
  j["error"] = kind;
  j["detail"] = detail;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sl2swc::cli
