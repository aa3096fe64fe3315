#pragma once

// Template kernels for the hexagon and rectangle data; included from slice.hpp.

#include <omp.h>

namespace ghostchar {

namespace detail {

template <class T>
std::vector<T> dense_matrix(const ArcValues<T>& p) {
  const int n = p.arcs;
  std::vector<T> x;
  x.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      x.push_back(i == 0 || j == 0 ? p.field.lift(Rational(0)) : p.at(i, j));
  return x;
}

}  // namespace detail

template <class T>
HexagonMatrix<T> hexagon_data(const ArcValues<T>& point, Execution exec) {
  const int n = point.arcs;
  HexagonMatrix<T> out;
  out.triples = arc_triples(n);
  const std::size_t size = out.triples.size();
  out.upper.assign(size * (size + 1) / 2, point.field.lift(Rational(0)));
  if (size == 0) return out;

  const std::vector<T> x = detail::dense_matrix(point);
  auto X = [&](int i, int j) -> const T& { return x[static_cast<std::size_t>(i) * (n + 1) + j]; };

  // 2x2 minors on row pairs (p,q) and column pairs (r,s).
  const std::size_t pairs = static_cast<std::size_t>(n + 1) * (n + 1);
  std::vector<T> minor(pairs * pairs, point.field.lift(Rational(0)));
  auto minor_at = [&](int p, int q, int r, int s) -> T& {
    return minor[(static_cast<std::size_t>(p) * (n + 1) + q) * pairs +
                 static_cast<std::size_t>(r) * (n + 1) + s];
  };
  std::vector<std::array<int, 2>> pair_list;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) pair_list.push_back({p, q});
  const long pair_count = static_cast<long>(pair_list.size());

#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::Parallel)
  for (long u = 0; u < pair_count; ++u) {
    const auto [p, q] = pair_list[static_cast<std::size_t>(u)];
    for (const auto& [r, s] : pair_list) minor_at(p, q, r, s) = X(p, r) * X(q, s) - X(p, s) * X(q, r);
  }

  const T half = point.field.lift(Rational(1, 2));
  const long rows = static_cast<long>(size);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::Parallel)
  for (long I = 0; I < rows; ++I) {
    const Triple& a = out.triples[static_cast<std::size_t>(I)];
    for (std::size_t J = static_cast<std::size_t>(I); J < size; ++J) {
      const Triple& b = out.triples[J];
      T d = X(a.a, b.a) * minor_at(a.b, a.c, b.b, b.c) - X(a.a, b.b) * minor_at(a.b, a.c, b.a, b.c) +
            X(a.a, b.c) * minor_at(a.b, a.c, b.a, b.b);
      out.upper[out.index(static_cast<std::size_t>(I), J)] = d * half;
    }
  }
  return out;
}

template <class T>
std::vector<RectangleValue<T>> rectangle_values(const ArcValues<T>& point, Execution exec,
                                                bool all_subsets) {
  const int n = point.arcs;
  std::vector<std::array<int, 4>> sets;
  if (all_subsets) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int e = c + 1; e <= n; ++e) sets.push_back({a, b, c, e});
  } else {
    for (int a = 3; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) sets.push_back({1, 2, a, b});
  }
  std::vector<RectangleValue<T>> out(sets.size());
  const long count = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::Parallel)
  for (long k = 0; k < count; ++k) {
    const auto& idx = sets[static_cast<std::size_t>(k)];
    std::vector<std::vector<T>> m(4, std::vector<T>(4));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[r][c] = point.at(idx[r], idx[c]);
    out[static_cast<std::size_t>(k)] = RectangleValue<T>{idx, det_cofactor(m)};
  }
  return out;
}

}  // namespace ghostchar
