#include "skeinrep/uq_structure.hpp"

#include <sstream>

namespace skeinrep {

namespace {

std::vector<Monomial> uq_monomials(long N) {
  std::vector<Monomial> out;
  for (long a = 0; a < N; ++a)
    for (long i = 0; i < N; ++i)
      for (long b = 0; b < N; ++b)
        out.push_back({static_cast<int>(a), static_cast<int>(i), static_cast<int>(b)});
  return out;
}

NFElement monomial_element(const CycField& F, const Monomial& m) {
  NFElement x{AlgebraId::UqSl2Small, &F, {}};
  x.terms.emplace(m, F.one());
  return x;
}

}  // namespace

std::vector<Mat> uq_left_regular(const CycField& F) {
  long N = F.order();
  long dim = N * N * N;
  auto monos = uq_monomials(N);
  // same order as MatRep::gen_list() for UqSl2Small modules
  std::vector<Gen> gens = {Gen::F, Gen::E, Gen::k2, Gen::k2i};
  std::vector<Mat> out;
  for (Gen g : gens) {
    Mat M(&F, dim, dim);
    NFElement ge = nf_gen(F, AlgebraId::UqSl2Small, g);
    for (long j = 0; j < dim; ++j) {
      Vec col = uq_coordinates(multiply(ge, monomial_element(F, monos[j])));
      for (long i = 0; i < dim; ++i) M.at(i, j) = col[i];
    }
    out.push_back(std::move(M));
  }
  return out;
}

bool uq_pbw_confirm(const CycField& F) {
  long N = F.order();
  auto monos = uq_monomials(N);
  if (static_cast<long>(monos.size()) != N * N * N) return false;
  for (const Relation& rel : algebra_relations(F, AlgebraId::UqSl2Small)) {
    for (const Monomial& m : monos) {
      NFElement acc = nf_zero(F, AlgebraId::UqSl2Small);
      Word mw = monomial_to_word(AlgebraId::UqSl2Small, m);
      for (const auto& [coeff, word] : rel.sum) {
        Word w = word;
        w.insert(w.end(), mw.begin(), mw.end());
        acc = nf_add(acc, nf_monomial(F, AlgebraId::UqSl2Small, coeff, w));
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

RegularDecompReport uq_regular_decomposition_check(const CycField& F) {
  long N = F.order();
  long dim = N * N * N;
  RegularDecompReport report;
  auto monos = uq_monomials(N);
  auto regular = uq_left_regular(F);

  // subspace bases of the left ideals generated by gamma_n E^h
  std::vector<std::vector<Vec>> bases;
  std::vector<std::pair<long, long>> tags;
  for (long n = 0; n < N; ++n) {
    NFElement gamma = gamma_generator(F, n);
    for (long h = 0; h <= n; ++h) {
      Word eh(static_cast<size_t>(h), Gen::E);
      NFElement w = multiply(gamma, nf_monomial(F, AlgebraId::UqSl2Small, F.one(), eh));
      // image of right multiplication by w and echelonize
      std::vector<Vec> reduced;
      std::vector<long> pivots;
      for (const Monomial& m : monos) {
        Vec v = uq_coordinates(multiply(monomial_element(F, m), w));
        for (size_t t = 0; t < reduced.size(); ++t) {
          if (v[pivots[t]].is_zero()) continue;
          Cyc c = v[pivots[t]] / reduced[t][pivots[t]];
          for (long i = 0; i < dim; ++i) v[i] -= c * reduced[t][i];
        }
        long pv = -1;
        for (long i = 0; i < dim; ++i)
          if (!v[i].is_zero()) {
            pv = i;
            break;
          }
        if (pv >= 0) {
          reduced.push_back(std::move(v));
          pivots.push_back(pv);
        }
      }
      bases.push_back(std::move(reduced));
      tags.push_back({n, h});
    }
  }

  // dimensions
  bool all_dims = true;
  for (size_t s = 0; s < bases.size(); ++s) {
    IdealSummand sum;
    sum.n = tags[s].first;
    sum.h = tags[s].second;
    sum.dim = static_cast<long>(bases[s].size());
    sum.dim_ok = (sum.n == N - 1) ? (sum.dim == N) : (sum.dim == 2 * N);
    all_dims = all_dims && sum.dim_ok;
    report.summands.push_back(sum);
  }

  // pairwise trivial intersections and total dimension
  auto stack_rank = [&](const std::vector<const std::vector<Vec>*>& parts) {
    long cols = 0;
    for (auto* p : parts) cols += static_cast<long>(p->size());
    Mat M(&F, dim, cols);
    long c = 0;
    for (auto* p : parts)
      for (const Vec& v : *p) {
        for (long i = 0; i < dim; ++i) M.at(i, c) = v[i];
        ++c;
      }
    return rank(M);
  };
  report.pairwise_trivial = true;
  for (size_t s = 0; s < bases.size(); ++s)
    for (size_t t = s + 1; t < bases.size(); ++t) {
      long r = stack_rank({&bases[s], &bases[t]});
      if (r != static_cast<long>(bases[s].size() + bases[t].size())) {
        report.pairwise_trivial = false;
        std::ostringstream os;
        os << "summands " << s << " and " << t << " intersect";
        report.detail = os.str();
      }
    }
  std::vector<const std::vector<Vec>*> all;
  long total = 0;
  for (auto& b : bases) {
    all.push_back(&b);
    total += static_cast<long>(b.size());
  }
  report.total_dimension_ok = (total == dim) && (stack_rank(all) == dim);

  // left module structure on each summand, compared with the family module
  bool all_iso = true;
  for (size_t s = 0; s < bases.size(); ++s) {
    long d = static_cast<long>(bases[s].size());
    Mat B(&F, dim, d);
    for (long j = 0; j < d; ++j)
      for (long i = 0; i < dim; ++i) B.at(i, j) = bases[s][j][i];
    std::vector<Mat> action;
    bool stable = true;
    for (const Mat& G : regular) {
      Mat GB = G * B;
      Mat act(&F, d, d);
      for (long j = 0; j < d && stable; ++j) {
        auto x = solve_linear(B, GB.col(j));
        if (!x) {
          stable = false;
          break;
        }
        for (long i = 0; i < d; ++i) act.at(i, j) = (*x)[i];
      }
      action.push_back(std::move(act));
    }
    if (!stable) {
      all_iso = false;
      report.detail = "summand not stable under left multiplication";
      continue;
    }
    FamilySpec fs;
    fs.mu = F.one();
    fs.eps = 1;
    if (tags[s].first == N - 1) {
      fs.family = Family::S;
      fs.n = N - 1;
    } else {
      fs.family = Family::Pproj;
      fs.n = tags[s].first;
    }
    MatRep fam = build_uq_module(F, fs);
    bool iso = are_isomorphic_gens(action, fam.gen_list(), d, fam.dim);
    report.summands[s].iso_ok = iso;
    all_iso = all_iso && iso;
  }

  report.ok = all_dims && report.pairwise_trivial && report.total_dimension_ok && all_iso;
  return report;
}

}  // namespace skeinrep
