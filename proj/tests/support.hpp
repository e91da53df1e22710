#ifndef IVPARETO_TESTS_SUPPORT_HPP
#define IVPARETO_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "ivpareto/error.hpp"
#include "ivpareto/generate.hpp"
#include "ivpareto/problem.hpp"
#include "oracle.hpp"

namespace support {

using namespace ivpareto;

inline Problem point_problem(const std::vector<std::vector<double>>& k) {
  Grid<double> g(k.size(), k.front().size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < k[i].size(); ++j) g(i, j) = k[i][j];
  }
  return Problem(alternative_labels(k.size()), criterion_labels(k.front().size()), PointStructure{g});
}

inline Problem interval_problem(const std::vector<std::vector<Interval>>& d,
                                DominanceMode mode = DominanceMode::Strict) {
  Grid<Interval> g(d.size(), d.front().size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d[i].size(); ++j) g(i, j) = d[i][j];
  }
  return Problem(alternative_labels(d.size()), criterion_labels(d.front().size()), IntervalStructure{g, mode});
}

/// pairs[j] lists 0-based (preferred, other) pairs for criterion j.
inline Problem relation_problem(std::size_t n, const std::vector<std::vector<Pair>>& pairs) {
  RelationStructure s;
  for (const auto& list : pairs) {
    PreferenceRelation r(n);
    for (const auto& [a, b] : list) r.add(a, b);
    s.relations.push_back(r);
  }
  return Problem(alternative_labels(n), criterion_labels(pairs.size()), std::move(s));
}

inline PreferenceRelation relation(std::size_t n, const std::vector<Pair>& pairs) {
  PreferenceRelation r(n);
  for (const auto& [a, b] : pairs) r.add(a, b);
  return r;
}

inline std::vector<std::vector<double>> raw_points(const Problem& p) {
  const auto& g = p.points().values;
  std::vector<std::vector<double>> out(g.rows(), std::vector<double>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = g(i, j);
  }
  return out;
}

inline std::vector<std::vector<oracle::Box>> raw_boxes(const Problem& p) {
  const auto& g = p.intervals().intervals;
  std::vector<std::vector<oracle::Box>> out(g.rows(), std::vector<oracle::Box>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = {g(i, j).lower(), g(i, j).upper()};
  }
  return out;
}

inline std::vector<oracle::Pairs> raw_relations(const Problem& p) {
  std::vector<oracle::Pairs> out;
  for (const auto& r : p.relations().relations) {
    oracle::Pairs s;
    for (const auto& pr : r.matrix().pairs()) s.insert(pr);
    out.push_back(std::move(s));
  }
  return out;
}

inline oracle::Pairs to_pairs(const PairMatrix& m) {
  oracle::Pairs s;
  for (const auto& pr : m.pairs()) s.insert(pr);
  return s;
}

/// Random interval on a small integer grid so that ties are frequent.
inline Interval random_interval(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> d(0, span);
  int a = d(rng);
  int b = d(rng);
  if (b < a) std::swap(a, b);
  return Interval(a, b);
}

/// Runs fn and returns the code of the ivpareto::Error it throws.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ivpareto::Error");
  return ErrorCode::SchemaError;
}

}  // namespace support

#endif  // IVPARETO_TESTS_SUPPORT_HPP
