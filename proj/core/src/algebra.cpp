#include "skeinrep/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skeinrep {

std::string algebra_name(AlgebraId a) {
  switch (a) {
    case AlgebraId::DqB: return "DqB";
    case AlgebraId::OqSL2: return "OqSL2";
    case AlgebraId::BqSL2: return "BqSL2";
    case AlgebraId::UqSl2Small: return "UqSl2Small";
    case AlgebraId::HeisenbergData: return "HeisenbergData";
  }
  return "?";
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::F: return "F";
    case Gen::L2: return "L1/2";
    case Gen::L2i: return "L-1/2";
    case Gen::K2: return "K1/2";
    case Gen::K2i: return "K-1/2";
    case Gen::E: return "E";
    case Gen::k2: return "k1/2";
    case Gen::k2i: return "k-1/2";
    case Gen::Oa: return "a";
    case Gen::Ob: return "b";
    case Gen::Oc: return "c";
    case Gen::Od: return "d";
  }
  return "?";
}

std::vector<Gen> algebra_generators(AlgebraId a) {
  switch (a) {
    case AlgebraId::DqB:
      return {Gen::K2, Gen::K2i, Gen::L2, Gen::L2i, Gen::E, Gen::F};
    case AlgebraId::UqSl2Small:
      return {Gen::k2, Gen::k2i, Gen::E, Gen::F};
    case AlgebraId::OqSL2:
    case AlgebraId::BqSL2:
      return {Gen::Oa, Gen::Ob, Gen::Oc, Gen::Od};
    case AlgebraId::HeisenbergData:
      return {};
  }
  return {};
}

namespace {

bool has_normal_forms(AlgebraId a) {
  return a == AlgebraId::DqB || a == AlgebraId::UqSl2Small || a == AlgebraId::OqSL2;
}

int letter_class(AlgebraId alg, Gen g) {
  switch (alg) {
    case AlgebraId::DqB:
      switch (g) {
        case Gen::F: return 0;
        case Gen::L2: case Gen::L2i: return 1;
        case Gen::K2: case Gen::K2i: return 2;
        case Gen::E: return 3;
        default: break;
      }
      break;
    case AlgebraId::UqSl2Small:
      switch (g) {
        case Gen::F: return 0;
        case Gen::k2: case Gen::k2i: return 1;
        case Gen::E: return 2;
        default: break;
      }
      break;
    case AlgebraId::OqSL2:
      switch (g) {
        case Gen::Oa: return 0;
        case Gen::Ob: return 1;
        case Gen::Oc: return 2;
        case Gen::Od: return 3;
        default: break;
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("letter " + gen_name(g) + " not in algebra " +
                              algebra_name(alg));
}

struct Term {
  Cyc coeff;
  Word word;
};

// Replacement terms for the two-letter word "x y" with class(x) > class(y).
std::vector<Term> rewrite_pair(const CycField& F, AlgebraId alg, Gen x, Gen y) {
  const Cyc one = F.one();
  const Cyc qp = F.q(1), qm = F.q(-1);
  auto sw = [&](const Cyc& c) { return std::vector<Term>{{c, {y, x}}}; };
  if (alg == AlgebraId::DqB) {
    if (x == Gen::E && y == Gen::F) {
      Cyc c1 = F.q_minus_qinv().inverse();
      return {{one, {Gen::F, Gen::E}},
              {c1, {Gen::K2, Gen::K2}},
              {-c1, {Gen::L2, Gen::L2}}};
    }
    if (x == Gen::E && y == Gen::L2) return sw(qp);
    if (x == Gen::E && y == Gen::L2i) return sw(qm);
    if (x == Gen::E && y == Gen::K2) return sw(qm);
    if (x == Gen::E && y == Gen::K2i) return sw(qp);
    if (x == Gen::L2 && y == Gen::F) return sw(qp);
    if (x == Gen::L2i && y == Gen::F) return sw(qm);
    if (x == Gen::K2 && y == Gen::F) return sw(qm);
    if (x == Gen::K2i && y == Gen::F) return sw(qp);
    // Cartan letters commute
    return sw(one);
  }
  if (alg == AlgebraId::UqSl2Small) {
    if (x == Gen::E && y == Gen::F) {
      Cyc c1 = F.q_minus_qinv().inverse();
      return {{one, {Gen::F, Gen::E}},
              {c1, {Gen::k2, Gen::k2}},
              {-c1, {Gen::k2i, Gen::k2i}}};
    }
    if (x == Gen::E && y == Gen::k2) return sw(qm);
    if (x == Gen::E && y == Gen::k2i) return sw(qp);
    if (x == Gen::k2 && y == Gen::F) return sw(qm);
    if (x == Gen::k2i && y == Gen::F) return sw(qp);
    return sw(one);
  }
  // OqSL2
  if (x == Gen::Ob && y == Gen::Oa) return sw(qp);
  if (x == Gen::Oc && y == Gen::Oa) return sw(qp);
  if (x == Gen::Oc && y == Gen::Ob) return sw(one);
  if (x == Gen::Od && y == Gen::Oa)
    return {{one, {}}, {qp, {Gen::Ob, Gen::Oc}}};
  if (x == Gen::Od && y == Gen::Ob) return sw(qp);
  if (x == Gen::Od && y == Gen::Oc) return sw(qp);
  throw std::logic_error("unhandled rewrite pair");
}

// a^{m} b^n c^s d^{r} with both m,r > 0 reduces through ad = 1 + q^{-1}bc;
// recursion on the monomial key.
void oq_accumulate(const CycField& F, const Monomial& key, const Cyc& coeff,
                   std::map<Monomial, Cyc>& out) {
  long m = key[0], n = key[1], s = key[2], r = key[3];
  if (m > 0 && r > 0) {
    Cyc base = coeff * F.q(-(n + s));
    oq_accumulate(F, {static_cast<int>(m - 1), static_cast<int>(n),
                      static_cast<int>(s), static_cast<int>(r - 1)},
                  base, out);
    oq_accumulate(F, {static_cast<int>(m - 1), static_cast<int>(n + 1),
                      static_cast<int>(s + 1), static_cast<int>(r - 1)},
                  base * F.q(-1), out);
    return;
  }
  auto it = out.find(key);
  if (it == out.end())
    out.emplace(key, coeff);
  else
    it->second += coeff;
}

void tally_word(const CycField& F, AlgebraId alg, const Term& t,
                std::map<Monomial, Cyc>& out) {
  long N = F.order();
  if (alg == AlgebraId::DqB) {
    int a = 0, l = 0, k = 0, b = 0;
    for (Gen g : t.word) {
      switch (g) {
        case Gen::F: ++a; break;
        case Gen::L2: ++l; break;
        case Gen::L2i: --l; break;
        case Gen::K2: ++k; break;
        case Gen::K2i: --k; break;
        case Gen::E: ++b; break;
        default: throw std::logic_error("bad letter");
      }
    }
    Monomial key = {a, l, k, b};
    auto it = out.find(key);
    if (it == out.end()) out.emplace(key, t.coeff);
    else it->second += t.coeff;
    return;
  }
  if (alg == AlgebraId::UqSl2Small) {
    long a = 0, i = 0, b = 0;
    for (Gen g : t.word) {
      switch (g) {
        case Gen::F: ++a; break;
        case Gen::k2: ++i; break;
        case Gen::k2i: --i; break;
        case Gen::E: ++b; break;
        default: throw std::logic_error("bad letter");
      }
    }
    if (a >= N || b >= N) return;  // E^N = F^N = 0
    i = ((i % N) + N) % N;         // k^{N/2} = 1
    Monomial key = {static_cast<int>(a), static_cast<int>(i), static_cast<int>(b)};
    auto it = out.find(key);
    if (it == out.end()) out.emplace(key, t.coeff);
    else it->second += t.coeff;
    return;
  }
  // OqSL2
  int m = 0, n = 0, s = 0, r = 0;
  for (Gen g : t.word) {
    switch (g) {
      case Gen::Oa: ++m; break;
      case Gen::Ob: ++n; break;
      case Gen::Oc: ++s; break;
      case Gen::Od: ++r; break;
      default: throw std::logic_error("bad letter");
    }
  }
  oq_accumulate(F, {m, n, s, r}, t.coeff, out);
}

void drop_zeros(std::map<Monomial, Cyc>& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
}

}  // namespace

bool NFElement::operator==(const NFElement& o) const {
  return alg == o.alg && terms == o.terms;
}

std::string NFElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << "  +  ";
    os << "(" << c.str() << ")*[";
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

NFElement nf_zero(const CycField& F, AlgebraId alg) {
  return NFElement{alg, &F, {}};
}

NFElement nf_one(const CycField& F, AlgebraId alg) {
  return nf_monomial(F, alg, F.one(), {});
}

NFElement nf_gen(const CycField& F, AlgebraId alg, Gen g) {
  return nf_monomial(F, alg, F.one(), {g});
}

NFElement nf_monomial(const CycField& F, AlgebraId alg, const Cyc& coeff,
                      const Word& word) {
  return normal_form(F, alg, {{coeff, word}});
}

NFElement normal_form(const CycField& F, AlgebraId alg, const WordSum& sum,
                      ReduceStrategy strategy) {
  if (!has_normal_forms(alg))
    throw std::invalid_argument("algebra " + algebra_name(alg) +
                                " does not support normal forms");
  NFElement out{alg, &F, {}};
  std::vector<Term> work;
  for (const auto& [c, w] : sum) {
    for (Gen g : w) letter_class(alg, g);  // validate letters
    work.push_back({c, w});
  }
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (t.coeff.is_zero()) continue;
    // locate a reducible adjacent pair
    long pos = -1;
    long n = static_cast<long>(t.word.size());
    if (strategy == ReduceStrategy::LeftmostInnermost) {
      for (long i = 0; i + 1 < n; ++i)
        if (letter_class(alg, t.word[i]) > letter_class(alg, t.word[i + 1])) {
          pos = i;
          break;
        }
    } else {
      for (long i = n - 2; i >= 0; --i)
        if (letter_class(alg, t.word[i]) > letter_class(alg, t.word[i + 1])) {
          pos = i;
          break;
        }
    }
    if (pos < 0) {
      tally_word(F, alg, t, out.terms);
      continue;
    }
    auto reps = rewrite_pair(F, alg, t.word[pos], t.word[pos + 1]);
    for (auto& rep : reps) {
      Term nt;
      nt.coeff = t.coeff * rep.coeff;
      nt.word.reserve(t.word.size() - 2 + rep.word.size());
      nt.word.insert(nt.word.end(), t.word.begin(), t.word.begin() + pos);
      nt.word.insert(nt.word.end(), rep.word.begin(), rep.word.end());
      nt.word.insert(nt.word.end(), t.word.begin() + pos + 2, t.word.end());
      work.push_back(std::move(nt));
    }
  }
  drop_zeros(out.terms);
  return out;
}

NFElement nf_add(const NFElement& x, const NFElement& y) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch in nf_add");
  NFElement out = x;
  for (const auto& [m, c] : y.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end())
      out.terms.emplace(m, c);
    else
      it->second += c;
  }
  drop_zeros(out.terms);
  return out;
}

NFElement nf_sub(const NFElement& x, const NFElement& y) {
  NFElement neg = nf_scale(y, y.field->integer(-1));
  return nf_add(x, neg);
}

NFElement nf_scale(const NFElement& x, const Cyc& c) {
  NFElement out{x.alg, x.field, {}};
  if (c.is_zero()) return out;
  for (const auto& [m, v] : x.terms) out.terms.emplace(m, v * c);
  drop_zeros(out.terms);
  return out;
}

Word monomial_to_word(AlgebraId alg, const Monomial& m) {
  Word w;
  auto rep = [&w](Gen g, long count) {
    for (long i = 0; i < count; ++i) w.push_back(g);
  };
  switch (alg) {
    case AlgebraId::DqB:
      rep(Gen::F, m[0]);
      rep(m[1] >= 0 ? Gen::L2 : Gen::L2i, std::abs(m[1]));
      rep(m[2] >= 0 ? Gen::K2 : Gen::K2i, std::abs(m[2]));
      rep(Gen::E, m[3]);
      break;
    case AlgebraId::UqSl2Small:
      rep(Gen::F, m[0]);
      rep(Gen::k2, m[1]);
      rep(Gen::E, m[2]);
      break;
    case AlgebraId::OqSL2:
      rep(Gen::Oa, m[0]);
      rep(Gen::Ob, m[1]);
      rep(Gen::Oc, m[2]);
      rep(Gen::Od, m[3]);
      break;
    default:
      throw std::invalid_argument("no monomials for " + algebra_name(alg));
  }
  return w;
}

NFElement multiply(const NFElement& x, const NFElement& y) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch in multiply");
  const CycField& F = *x.field;
  WordSum sum;
  for (const auto& [mx, cx] : x.terms) {
    Word wx = monomial_to_word(x.alg, mx);
    for (const auto& [my, cy] : y.terms) {
      Word w = wx;
      Word wy = monomial_to_word(y.alg, my);
      w.insert(w.end(), wy.begin(), wy.end());
      sum.push_back({cx * cy, std::move(w)});
    }
  }
  return normal_form(F, x.alg, sum);
}

bool is_central_symbolic(const NFElement& x) {
  for (Gen g : algebra_generators(x.alg)) {
    NFElement gx = multiply(nf_gen(*x.field, x.alg, g), x);
    NFElement xg = multiply(x, nf_gen(*x.field, x.alg, g));
    if (!(gx == xg)) return false;
  }
  return true;
}

std::vector<Relation> algebra_relations(const CycField& F, AlgebraId alg) {
  const Cyc one = F.one();
  const Cyc qp = F.q(1), qm = F.q(-1);
  Cyc c1 = F.q_minus_qinv().inverse();
  std::vector<Relation> rels;
  auto add = [&rels](std::string name, WordSum s) {
    rels.push_back({std::move(name), std::move(s)});
  };
  switch (alg) {
    case AlgebraId::DqB: {
      add("E K1/2 = q^-1 K1/2 E", {{one, {Gen::E, Gen::K2}}, {-qm, {Gen::K2, Gen::E}}});
      add("E L1/2 = q L1/2 E", {{one, {Gen::E, Gen::L2}}, {-qp, {Gen::L2, Gen::E}}});
      add("F K1/2 = q K1/2 F", {{one, {Gen::F, Gen::K2}}, {-qp, {Gen::K2, Gen::F}}});
      add("F L1/2 = q^-1 L1/2 F", {{one, {Gen::F, Gen::L2}}, {-qm, {Gen::L2, Gen::F}}});
      std::vector<Gen> cart = {Gen::K2, Gen::K2i, Gen::L2, Gen::L2i};
      for (size_t i = 0; i < cart.size(); ++i)
        for (size_t j = i + 1; j < cart.size(); ++j)
          add(gen_name(cart[i]) + " " + gen_name(cart[j]) + " commute",
              {{one, {cart[i], cart[j]}}, {-one, {cart[j], cart[i]}}});
      add("K1/2 K-1/2 = 1", {{one, {Gen::K2, Gen::K2i}}, {-one, {}}});
      add("L1/2 L-1/2 = 1", {{one, {Gen::L2, Gen::L2i}}, {-one, {}}});
      add("EF - FE = (K-L)/(q-q^-1)",
          {{one, {Gen::E, Gen::F}},
           {-one, {Gen::F, Gen::E}},
           {-c1, {Gen::K2, Gen::K2}},
           {c1, {Gen::L2, Gen::L2}}});
      break;
    }
    case AlgebraId::UqSl2Small: {
      long N = F.order();
      add("E k1/2 = q^-1 k1/2 E", {{one, {Gen::E, Gen::k2}}, {-qm, {Gen::k2, Gen::E}}});
      add("F k1/2 = q k1/2 F", {{one, {Gen::F, Gen::k2}}, {-qp, {Gen::k2, Gen::F}}});
      add("k1/2 k-1/2 = 1", {{one, {Gen::k2, Gen::k2i}}, {-one, {}}});
      add("F^N = 0", {{one, Word(static_cast<size_t>(N), Gen::F)}});
      add("E^N = 0", {{one, Word(static_cast<size_t>(N), Gen::E)}});
      add("k^{N/2} = 1", {{one, Word(static_cast<size_t>(N), Gen::k2)}, {-one, {}}});
      add("EF - FE = (k-k^-1)/(q-q^-1)",
          {{one, {Gen::E, Gen::F}},
           {-one, {Gen::F, Gen::E}},
           {-c1, {Gen::k2, Gen::k2}},
           {c1, {Gen::k2i, Gen::k2i}}});
      break;
    }
    case AlgebraId::OqSL2: {
      add("ab = q^-1 ba", {{one, {Gen::Oa, Gen::Ob}}, {-qm, {Gen::Ob, Gen::Oa}}});
      add("ac = q^-1 ca", {{one, {Gen::Oa, Gen::Oc}}, {-qm, {Gen::Oc, Gen::Oa}}});
      add("db = q bd", {{one, {Gen::Od, Gen::Ob}}, {-qp, {Gen::Ob, Gen::Od}}});
      add("dc = q cd", {{one, {Gen::Od, Gen::Oc}}, {-qp, {Gen::Oc, Gen::Od}}});
      add("ad = 1 + q^-1 bc",
          {{one, {Gen::Oa, Gen::Od}}, {-one, {}}, {-qm, {Gen::Ob, Gen::Oc}}});
      add("da = 1 + q bc",
          {{one, {Gen::Od, Gen::Oa}}, {-one, {}}, {-qp, {Gen::Ob, Gen::Oc}}});
      add("bc = cb", {{one, {Gen::Ob, Gen::Oc}}, {-one, {Gen::Oc, Gen::Ob}}});
      break;
    }
    case AlgebraId::BqSL2: {
      Cyc q2 = F.q(2), q2i = F.q(-2);
      Cyc u = one - q2i;  // 1 - q^{-2}
      add("ba = q^2 ab", {{one, {Gen::Ob, Gen::Oa}}, {-q2, {Gen::Oa, Gen::Ob}}});
      add("ca = q^-2 ac", {{one, {Gen::Oc, Gen::Oa}}, {-q2i, {Gen::Oa, Gen::Oc}}});
      add("da = ad", {{one, {Gen::Od, Gen::Oa}}, {-one, {Gen::Oa, Gen::Od}}});
      add("bc = cb + (1-q^-2) a(d-a)",
          {{one, {Gen::Ob, Gen::Oc}},
           {-one, {Gen::Oc, Gen::Ob}},
           {-u, {Gen::Oa, Gen::Od}},
           {u, {Gen::Oa, Gen::Oa}}});
      add("db = bd + (1-q^-2) ab",
          {{one, {Gen::Od, Gen::Ob}},
           {-one, {Gen::Ob, Gen::Od}},
           {-u, {Gen::Oa, Gen::Ob}}});
      add("cd = dc + (1-q^-2) ca",
          {{one, {Gen::Oc, Gen::Od}},
           {-one, {Gen::Od, Gen::Oc}},
           {-u, {Gen::Oc, Gen::Oa}}});
      add("ad - q^2 cb = 1",
          {{one, {Gen::Oa, Gen::Od}}, {-q2, {Gen::Oc, Gen::Ob}}, {-one, {}}});
      break;
    }
    case AlgebraId::HeisenbergData:
      break;
  }
  return rels;
}

NFElement casimir_element(const CycField& F) {
  Cyc c2 = F.q_minus_qinv().pow(2).inverse();
  return normal_form(F, AlgebraId::DqB,
                     {{F.one(), {Gen::E, Gen::F}},
                      {F.q(1) * c2, {Gen::L2, Gen::L2}},
                      {F.q(-1) * c2, {Gen::K2, Gen::K2}}});
}

NFElement h_boundary_element(const CycField& F) {
  return nf_monomial(F, AlgebraId::DqB, F.one(), {Gen::K2i, Gen::L2i});
}

NFElement gamma_p_element(const CycField& F) {
  NFElement ch = multiply(casimir_element(F), h_boundary_element(F));
  return nf_scale(ch, -F.q_minus_qinv().pow(2));
}

bool casimir_identity_check(const CycField& F) {
  Cyc c2 = F.q_minus_qinv().pow(2).inverse();
  NFElement lhs = normal_form(F, AlgebraId::DqB,
                              {{F.one(), {Gen::E, Gen::F}},
                               {F.q(1) * c2, {Gen::L2, Gen::L2}},
                               {F.q(-1) * c2, {Gen::K2, Gen::K2}}});
  NFElement rhs = normal_form(F, AlgebraId::DqB,
                              {{F.one(), {Gen::F, Gen::E}},
                               {F.q(1) * c2, {Gen::K2, Gen::K2}},
                               {F.q(-1) * c2, {Gen::L2, Gen::L2}}});
  return lhs == rhs;
}

MorphismReport verify_morphism(const GeneratorImageMap& m) {
  const CycField& F = *m.images.begin()->second.field;
  MorphismReport report;
  for (const Relation& rel : algebra_relations(F, m.source)) {
    NFElement acc = nf_zero(F, m.target);
    for (const auto& [coeff, word] : rel.sum) {
      NFElement prod = nf_one(F, m.target);
      for (Gen g : word) {
        auto it = m.images.find(g);
        if (it == m.images.end())
          throw std::invalid_argument("missing image for generator " + gen_name(g));
        prod = multiply(prod, it->second);
      }
      acc = nf_add(acc, nf_scale(prod, coeff));
    }
    bool pass = acc.is_zero();
    report.checks.push_back({rel.name, pass, pass ? "" : acc.str()});
    if (!pass) report.all_pass = false;
  }
  return report;
}

GeneratorImageMap majid_map(const CycField& F) {
  const AlgebraId D = AlgebraId::DqB;
  Cyc qmq = F.q_minus_qinv();
  // The images are products of the corner arcs of the double, which fixes
  // their monomial shapes:
  //   a ~ L^{-1/2}K^{1/2},  b ~ F L^{-1/2}K^{1/2},  c ~ L^{-1/2}K^{-1/2}E,
  //   d ~ combination of F L^{-1/2}K^{-1/2}E, L^{1/2}K^{-1/2}, L^{-1/2}K^{1/2}.
  // The scalar normalization is pinned by the braided determinant
  // ad - q^2 cb = 1 together with the peripheral identity
  // -q^{-1} a - q d = gamma_p; the residual b <-> c rescaling freedom is
  // resolved symmetrically.  The stated-arc stacking conventions do not
  // survive text extraction, so the normalization is derived rather than
  // copied; verify_morphism remains the arbiter.
  GeneratorImageMap m;
  m.source = AlgebraId::BqSL2;
  m.target = D;
  m.images[Gen::Oa] = nf_monomial(F, D, F.one(), {Gen::L2i, Gen::K2});
  Cyc bc_coeff = -F.zeta(-6) * qmq;  // -A^{-3} (q - q^{-1})
  m.images[Gen::Ob] = nf_monomial(F, D, bc_coeff, {Gen::F, Gen::L2i, Gen::K2});
  m.images[Gen::Oc] = nf_monomial(F, D, bc_coeff, {Gen::L2i, Gen::K2i, Gen::E});
  NFElement d = normal_form(
      F, D,
      {{F.q(-1) * qmq * qmq, {Gen::F, Gen::L2i, Gen::K2i, Gen::E}},
       {F.q(-2), {Gen::L2, Gen::K2i}},
       {F.q(-1) * qmq, {Gen::L2i, Gen::K2}}});
  m.images[Gen::Od] = d;
  return m;
}

bool omega_image_check(const CycField& F) {
  GeneratorImageMap m = majid_map(F);
  NFElement omega_img = nf_add(nf_scale(m.images[Gen::Oa], -F.q(-1)),
                               nf_scale(m.images[Gen::Od], -F.q(1)));
  return omega_img == gamma_p_element(F);
}

Mat heisenberg_r_matrix(const CycField& F) {
  Mat R(&F, 4, 4);
  R.at(0, 0) = F.A(1);
  R.at(1, 2) = F.A(-1);
  R.at(2, 1) = F.A(-1);
  R.at(2, 2) = F.A(1) - F.A(-3);
  R.at(3, 3) = F.A(1);
  return R;
}

bool yang_baxter_braid_holds(const Mat& R) {
  const CycField* F = R.field();
  Mat I2 = Mat::identity(F, 2);
  Mat R12 = R.kron(I2);
  Mat R23 = I2.kron(R);
  return R12 * R23 * R12 == R23 * R12 * R23;
}

bool yang_baxter_check(const CycField& F) {
  Mat R = heisenberg_r_matrix(F);
  if (!yang_baxter_braid_holds(R)) return false;
  CycPoly mp = minimal_polynomial(R);
  return poly_degree(mp) == 2;
}

NFElement build_phi_n(const CycField& F, long n) {
  NFElement out{AlgebraId::UqSl2Small, &F, {}};
  long N = F.order();
  for (long i = 0; i < N; ++i) {
    Monomial key = {0, static_cast<int>(i), 0};
    out.terms.emplace(key, F.q(-n * i));
  }
  return out;
}

NFElement uq_weight_projector(const CycField& F, long n) {
  // same family reindexed by A-weights: k^{1/2} acts by A^n; this is
  // phi_m for m = n (N+1)/2 since q^m = A^{2m}
  long N = F.order();
  long m = ((n % N) * ((N + 1) / 2)) % N;
  return build_phi_n(F, m);
}

long uq_monomial_index(long N, long a, long i, long b) {
  return (a * N + i) * N + b;
}

Vec uq_coordinates(const NFElement& x) {
  if (x.alg != AlgebraId::UqSl2Small)
    throw std::invalid_argument("uq_coordinates on wrong algebra");
  const CycField& F = *x.field;
  long N = F.order();
  Vec v(static_cast<size_t>(N * N * N), F.zero());
  for (const auto& [m, c] : x.terms)
    v[static_cast<size_t>(uq_monomial_index(N, m[0], m[1], m[2]))] = c;
  return v;
}

NFElement solve_gamma_n(const CycField& F, long n) {
  long N = F.order();
  if (n < 0 || n > N - 2) throw std::invalid_argument("solve_gamma_n: need 0 <= n <= N-2");
  const AlgebraId U = AlgebraId::UqSl2Small;
  long nbar = N - 2 - n;
  // x_n = E^{nbar} F^{N-1} phi_n
  Word w;
  for (long i = 0; i < nbar; ++i) w.push_back(Gen::E);
  for (long i = 0; i < N - 1; ++i) w.push_back(Gen::F);
  // the generator lives at A-weight n, so the weight projector is the
  // A-indexed member of the phi family
  NFElement xn = multiply(nf_monomial(F, U, F.one(), w), uq_weight_projector(F, n));
  // ansatz span {F^a k^{i/2} E^b : a <= N-2}; solve F*y = x_n there
  std::vector<Monomial> span;
  for (long a = 0; a <= N - 2; ++a)
    for (long i = 0; i < N; ++i)
      for (long b = 0; b < N; ++b)
        span.push_back({static_cast<int>(a), static_cast<int>(i), static_cast<int>(b)});
  long dimall = N * N * N;
  Mat A(&F, dimall, static_cast<long>(span.size()));
  NFElement Fgen = nf_gen(F, U, Gen::F);
  for (size_t j = 0; j < span.size(); ++j) {
    NFElement mono{U, &F, {{span[j], F.one()}}};
    Vec coords = uq_coordinates(multiply(Fgen, mono));
    for (long i = 0; i < dimall; ++i) A.at(i, static_cast<long>(j)) = coords[i];
  }
  if (!kernel_basis(A).empty())
    throw std::runtime_error("solve_gamma_n: solution not unique");
  auto sol = solve_linear(A, uq_coordinates(xn));
  if (!sol) throw std::runtime_error("solve_gamma_n: inconsistent system");
  NFElement out{U, &F, {}};
  for (size_t j = 0; j < span.size(); ++j)
    if (!(*sol)[j].is_zero()) out.terms.emplace(span[j], (*sol)[j]);
  return out;
}

NFElement gamma_generator(const CycField& F, long n) {
  long N = F.order();
  if (n == N - 1) {
    Word w(static_cast<size_t>(N - 1), Gen::F);
    return multiply(nf_monomial(F, AlgebraId::UqSl2Small, F.one(), w),
                    uq_weight_projector(F, N - 1));
  }
  return solve_gamma_n(F, n);
}

}  // namespace skeinrep
