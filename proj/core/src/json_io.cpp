#include "skeinrep/json_io.hpp"

#include <stdexcept>

namespace skeinrep {

json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

mpz_class json_to_mpz(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or string for big integer");
}

json cyc_to_json(const Cyc& v) {
  json num = json::array(), den = json::array();
  for (const mpq_class& c : v.coeffs()) {
    num.push_back(mpz_to_json(c.get_num()));
    den.push_back(mpz_to_json(c.get_den()));
  }
  return json{{"num", num}, {"den", den}};
}

Cyc parse_cyc(const CycField& F, const json& j) {
  if (j.is_number_integer()) return F.integer(j.get<long>());
  if (j.is_object()) {
    if (j.contains("zeta")) return F.zeta(j.at("zeta").get<long>());
    if (j.contains("q")) return F.q(j.at("q").get<long>());
    if (j.contains("num") && j.contains("den")) {
      const json& num = j.at("num");
      const json& den = j.at("den");
      if (num.size() != den.size())
        throw std::invalid_argument("scalar num/den length mismatch");
      std::vector<mpq_class> coeffs;
      for (size_t i = 0; i < num.size(); ++i) {
        mpq_class c(json_to_mpz(num[i]), json_to_mpz(den[i]));
        c.canonicalize();
        coeffs.push_back(c);
      }
      return F.from_coeffs(std::move(coeffs));
    }
  }
  throw std::invalid_argument("cannot parse scalar: " + j.dump());
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(cyc_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat parse_mat(const CycField& F, const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be an array");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j[0].size());
  Mat m(&F, rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (static_cast<long>(j[i].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (long c = 0; c < cols; ++c) m.at(i, c) = parse_cyc(F, j[i][c]);
  }
  return m;
}

json nf_to_json(const NFElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms) {
    json mono = json::array();
    for (int e : m) mono.push_back(e);
    terms.push_back(json{{"monomial", mono}, {"coeff", cyc_to_json(c)}});
  }
  return json{{"algebra", algebra_name(x.alg)}, {"terms", terms}};
}

json proj_point_to_json(const ProjPoint& p) {
  if (p.infinite) return json("inf");
  return cyc_to_json(p.value);
}

ProjPoint parse_proj_point(const CycField& F, const json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity"))
    return ProjPoint::inf();
  return ProjPoint::finite(parse_cyc(F, j));
}

json family_spec_to_json(const FamilySpec& s) {
  json out{{"family", family_name(s.family)}, {"eps", s.eps}, {"n", s.n}, {"k", s.k}};
  auto put = [&](const char* key, const Cyc& v) {
    if (v.field()) out[key] = cyc_to_json(v);
  };
  put("lambda", s.lambda);
  put("mu", s.mu);
  put("a", s.a);
  put("b", s.b);
  put("c", s.c);
  if (s.family == Family::Mfam) out["lambda_point"] = proj_point_to_json(s.point);
  return out;
}

FamilySpec parse_family_spec(const CycField& F, const json& j) {
  FamilySpec s;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "V") s.family = Family::V;
  else if (fam == "Vtilde") s.family = Family::Vtilde;
  else if (fam == "S") s.family = Family::S;
  else if (fam == "P") s.family = Family::P;
  else if (fam == "Ptilde") s.family = Family::Ptilde;
  else if (fam == "Pproj") s.family = Family::Pproj;
  else if (fam == "OmegaPlus") s.family = Family::OmegaPlus;
  else if (fam == "OmegaMinus") s.family = Family::OmegaMinus;
  else if (fam == "M") s.family = Family::Mfam;
  else throw std::invalid_argument("unknown family: " + fam);
  if (j.contains("lambda")) s.lambda = parse_cyc(F, j.at("lambda"));
  if (j.contains("mu")) s.mu = parse_cyc(F, j.at("mu"));
  if (j.contains("a")) s.a = parse_cyc(F, j.at("a"));
  if (j.contains("b")) s.b = parse_cyc(F, j.at("b"));
  if (j.contains("c")) s.c = parse_cyc(F, j.at("c"));
  if (j.contains("eps")) s.eps = j.at("eps").get<int>();
  if (j.contains("n")) s.n = j.at("n").get<long>();
  if (j.contains("k")) s.k = j.at("k").get<long>();
  if (j.contains("lambda_point")) s.point = parse_proj_point(F, j.at("lambda_point"));
  // default the unspecified scalars that families require to be present
  if (!s.mu.field()) s.mu = F.one();
  if (!s.lambda.field()) s.lambda = F.one();
  if (!s.a.field()) s.a = F.zero();
  if (!s.b.field()) s.b = F.zero();
  if (!s.c.field()) s.c = F.zero();
  return s;
}

json shadow_to_json(const ShadowDqB& sh) {
  return json{{"g_plus", mat_to_json(sh.g_plus)},
              {"g_minus", mat_to_json(sh.g_minus)},
              {"h_p", cyc_to_json(sh.h_p)},
              {"h_boundary", cyc_to_json(sh.h_bdry)}};
}

ShadowSpec parse_shadow_spec(const CycField& F, const json& j) {
  ShadowSpec spec;
  for (const json& pj : j.at("punctures")) {
    PunctureSpec p;
    std::string cls = pj.at("class").get<std::string>();
    if (cls == "P0") p.cls = PunctureClass::P0;
    else if (cls == "P1") p.cls = PunctureClass::P1;
    else if (cls == "P2") p.cls = PunctureClass::P2;
    else throw std::invalid_argument("unknown puncture class: " + cls);
    if (pj.contains("sign")) p.sign = pj.at("sign").get<int>();
    if (pj.contains("eps")) p.eps = pj.at("eps").get<int>();
    if (pj.contains("n")) p.n = pj.at("n").get<long>();
    p.mu = pj.contains("mu") ? parse_cyc(F, pj.at("mu")) : F.one();
    if (pj.contains("h_p") && !(pj.at("h_p").is_string() &&
                                pj.at("h_p").get<std::string>() == "auto")) {
      p.h_p = parse_cyc(F, pj.at("h_p"));
    } else {
      // the canonical value at the instantiation data
      p.h_p = -F.integer(p.eps) * (F.q(p.n + 1) + F.q(-(p.n + 1)));
    }
    spec.punctures.push_back(std::move(p));
  }
  return spec;
}

json relation_report_to_json(const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"relation", c.name}, {"pass", c.pass}};
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  return json{{"all_pass", r.all_pass}, {"checks", checks}};
}

json morphism_report_to_json(const MorphismReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"relation", c.relation}, {"pass", c.pass}};
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  return json{{"all_pass", r.all_pass}, {"checks", checks}};
}

}  // namespace skeinrep
