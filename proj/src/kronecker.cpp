#include "quivermod/kronecker.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "quivermod/stability.hpp"

namespace quivermod {

KroneckerVector kronecker_reflect_source(std::int64_t m, KroneckerVector d) {
  if (m * d.d2 < d.d1) throw DomainError("source reflection leaves the positive cone");
  return {m * d.d2 - d.d1, d.d2};
}

KroneckerVector kronecker_reflect_sink(std::int64_t m, KroneckerVector d) {
  if (m * d.d1 < d.d2) throw DomainError("sink reflection leaves the positive cone");
  return {d.d1, m * d.d1 - d.d2};
}

KroneckerVector kronecker_dualize(KroneckerVector d) { return {d.d2, d.d1}; }

KroneckerInstance make_kronecker_instance(std::int64_t m, KroneckerVector d) {
  if (m < 0 || d.d1 < 0 || d.d2 < 0) throw InputError("negative Kronecker data");
  if (d.d1 == 0 && d.d2 == 0) throw DomainError("zero Kronecker dimension vector");
  KroneckerInstance inst{m, d, std::gcd(d.d1, d.d2), 0, 0};
  inst.p = d.d1 / inst.n;
  inst.q = d.d2 / inst.n;
  return inst;
}

std::string to_string(KroneckerMove move) {
  switch (move) {
    case KroneckerMove::dualize:
      return "dualize";
    case KroneckerMove::reflect_source:
      return "source";
    case KroneckerMove::reflect_sink:
      return "sink";
  }
  return "unknown";
}

KroneckerNormalization normalize_kronecker(std::int64_t m, KroneckerVector d) {
  if (m < 3) throw DomainError("normalization needs m >= 3");
  if (d.d1 < 0 || d.d2 < 0 || (d.d1 == 0 && d.d2 == 0)) throw DomainError("invalid Kronecker dimension vector");
  KroneckerNormalization out;
  std::set<KroneckerVector> visited;
  while (true) {
    if (d.d1 == 0 || d.d2 == 0) {
      out.degenerate_reason = "zero entry";
      return out;
    }
    if (!visited.insert(d).second) {
      out.degenerate_reason = "orbit revisits a state";
      return out;
    }
    if (d.d1 > d.d2) {
      d = kronecker_dualize(d);
      out.trace.push_back(KroneckerMove::dualize);
      continue;
    }
    if (2 * d.d2 <= m * d.d1) {
      out.normalized = d;
      return out;
    }
    if (m * d.d1 < d.d2) {
      out.degenerate_reason = "outside the reflection domain";
      return out;
    }
    d = kronecker_reflect_sink(m, d);
    out.trace.push_back(KroneckerMove::reflect_sink);
  }
}

namespace {

struct CellOutcome {
  bool candidate = false;
  std::optional<ExceptionCell> exception;
};

CellOutcome loop_cell(std::int64_t m, std::int64_t d) {
  const auto q = Quiver::loop(m);
  const DimensionVector dv{d};
  CellOutcome out;
  out.candidate = true;
  if (!check_ample_stability_criterion(q, Stability{0}, dv).pass) out.exception = ExceptionCell{m, dv};
  return out;
}

CellOutcome kronecker_cell(std::int64_t m, std::int64_t d1, std::int64_t d2) {
  CellOutcome out;
  const auto norm = normalize_kronecker(m, {d1, d2});
  if (norm.degenerate()) return out;
  const auto inst = make_kronecker_instance(m, *norm.normalized);
  if (inst.discriminant() < 0) return out;
  out.candidate = true;
  const auto dv = norm.normalized->to_dimension_vector();
  if (!check_ample_stability_criterion(Quiver::kronecker(m), Stability{1, 0}, dv).pass)
    out.exception = ExceptionCell{m, dv};
  return out;
}

template <class CellFn>
std::vector<CellOutcome> run_serial(std::size_t count, CellFn&& fn) {
  std::vector<CellOutcome> outcomes(count);
  for (std::size_t i = 0; i < count; ++i) outcomes[i] = fn(i);
  return outcomes;
}

template <class CellFn>
std::vector<CellOutcome> run_parallel(std::size_t count, int threads, CellFn&& fn) {
  std::vector<CellOutcome> outcomes(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(quivermod_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

ScanResult merge(const std::vector<CellOutcome>& outcomes) {
  ScanResult result;
  result.scanned = outcomes.size();
  std::set<ExceptionCell> unique;
  for (const auto& o : outcomes) {
    if (o.candidate) ++result.candidates;
    if (o.exception) unique.insert(*o.exception);
  }
  result.exceptions.assign(unique.begin(), unique.end());
  return result;
}

template <class CellFn>
ScanResult scan(std::size_t count, Execution exec, int threads, CellFn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const int workers = threads > 0 ? threads : configured_thread_count();
  auto outcomes = exec == Execution::serial ? run_serial(count, fn) : run_parallel(count, workers, fn);
  ScanResult result = merge(outcomes);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

ScanResult loop_criterion_exceptions(IntRange m_range, IntRange d_range, Execution exec, int threads) {
  if (m_range.size() == 0 || d_range.size() == 0) throw DomainError("empty scan range");
  if (m_range.lo < 2 || d_range.lo < 2) throw DomainError("loop scan needs m >= 2 and d >= 2");
  const auto dn = static_cast<std::size_t>(d_range.size());
  const auto count = static_cast<std::size_t>(m_range.size()) * dn;
  return scan(count, exec, threads, [&](std::size_t i) {
    return loop_cell(m_range.lo + static_cast<std::int64_t>(i / dn), d_range.lo + static_cast<std::int64_t>(i % dn));
  });
}

ScanResult kronecker_criterion_exceptions(IntRange m_range, IntRange box, Execution exec, int threads) {
  if (m_range.size() == 0 || box.size() == 0) throw DomainError("empty scan range");
  if (m_range.lo < 3) throw DomainError("Kronecker scan needs m >= 3");
  if (box.lo < 0) throw DomainError("negative box bound");
  const auto side = static_cast<std::size_t>(box.size());
  const auto per_m = side * side;
  const auto count = static_cast<std::size_t>(m_range.size()) * per_m;
  return scan(count, exec, threads, [&](std::size_t i) -> CellOutcome {
    const auto m = m_range.lo + static_cast<std::int64_t>(i / per_m);
    const auto r = i % per_m;
    const auto d1 = box.lo + static_cast<std::int64_t>(r / side);
    const auto d2 = box.lo + static_cast<std::int64_t>(r % side);
    if (d1 == 0 && d2 == 0) return {};
    return kronecker_cell(m, d1, d2);
  });
}

std::vector<ExceptionCell> expected_loop_exceptions(IntRange m_range, IntRange d_range) {
  if (m_range.contains(2) && d_range.contains(2)) return {ExceptionCell{2, DimensionVector{2}}};
  return {};
}

std::vector<ExceptionCell> expected_kronecker_exceptions(IntRange m_range, IntRange box) {
  if (m_range.contains(3) && box.contains(2)) return {ExceptionCell{3, DimensionVector{2, 2}}};
  return {};
}

KroneckerInequalityTrace kronecker_inequality_trace(std::int64_t m, KroneckerVector d, KroneckerVector e) {
  const auto inst = make_kronecker_instance(m, d);
  if (!inst.normalized()) throw DomainError("inequality trace needs a normalized vector (d1 <= d2 <= m d1 / 2)");
  if (e.d1 < 0 || e.d2 < 0 || e.d1 > d.d1 || e.d2 > d.d2) throw DomainError("summand does not fit in d");
  if ((e.d1 == 0 && e.d2 == 0) || e == d) throw DomainError("decomposition is not proper");
  KroneckerInequalityTrace t;
  t.m = m;
  t.n = inst.n;
  t.p = inst.p;
  t.q = inst.q;
  t.a = e.d1;
  t.b = e.d2;
  t.c = d.d1 - e.d1;
  t.dd = d.d2 - e.d2;
  if (t.a == 0 || t.dd == 0)
    throw DomainError("a = 0 or d = 0: the slope condition then forces the zero dimension vector");
  const Integer P = t.p, Q = t.q, N = t.n, A = t.a, D = t.dd, M = t.m;
  t.k = P * D + Q * A - N * P * Q;
  t.slope_condition = t.k >= 0;
  t.f3_lhs = P * Q;
  t.f3_rhs = (M * P * Q - P * P - Q * Q) * A * D + (P * A + Q * D) * t.k;
  t.f3_holds = t.f3_lhs >= t.f3_rhs;
  t.pairing = euler_form(Quiver::kronecker(m), DimensionVector{t.a, t.b}, DimensionVector{t.c, t.dd});
  if (m == 3) {
    t.finfty_lhs = N * A * P + N * D * Q;
    t.finfty_rhs = A * A + D * D + 3 * A * D - 1;
    t.finfty_holds = *t.finfty_lhs == *t.finfty_rhs;
  }
  return t;
}

}  // namespace quivermod
