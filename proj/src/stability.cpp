#include "quivermod/stability.hpp"

namespace quivermod {

DecompositionRange::DecompositionRange(DimensionVector d) : d_(std::move(d)) {
  if (d_.is_zero()) throw DomainError("decompositions of the zero dimension vector are undefined");
}

Integer DecompositionRange::count() const {
  Integer c = 1;
  for (auto x : d_.entries()) c *= Integer(static_cast<long>(x)) + 1;
  return c - 2;
}

DecompositionRange::iterator::iterator(const DimensionVector* d, bool done) : d_(d), done_(done) {
  if (done_) return;
  e_.assign(d_->size(), 0);
  advance_odometer();  // skip e = 0
  refresh();
}

void DecompositionRange::iterator::advance_odometer() {
  // lexicographic successor of e_ within the box [0, d], last index fastest
  std::size_t i = e_.size();
  while (i > 0) {
    --i;
    if (e_[i] < (*d_)[i]) {
      ++e_[i];
      return;
    }
    e_[i] = 0;
  }
  done_ = true;
}

void DecompositionRange::iterator::refresh() {
  if (!done_ && e_ == d_->entries()) done_ = true;  // e = d is the last box point
  if (done_) return;
  current_.e = DimensionVector(e_);
  current_.f = *d_ - current_.e;
}

DecompositionRange::iterator& DecompositionRange::iterator::operator++() {
  advance_odometer();
  refresh();
  return *this;
}

DecompositionRange enumerate_decompositions(const DimensionVector& d) { return DecompositionRange(d); }

AmpleStabilityReport check_ample_stability_criterion(const Quiver& q, const Stability& theta,
                                                     const DimensionVector& d) {
  check_sized(q, d);
  check_sized(q, theta);
  AmpleStabilityReport report;
  for (const auto& dec : enumerate_decompositions(d)) {
    if (compare_slopes(theta, dec.e, dec.f) < 0) continue;
    ++report.qualifying;
    Integer pairing = euler_form(q, dec.e, dec.f);
    if (pairing >= -1 && !report.witness) {
      report.pass = false;
      report.witness = dec;
      report.witness_pairing = pairing;
    }
    if (!report.max_pairing || pairing > *report.max_pairing) report.max_pairing = std::move(pairing);
  }
  return report;
}

namespace {

struct HNSearch {
  const Quiver& q;
  const Stability& theta;
  std::size_t max_parts;
  const SemistabilityFilter& filter;
  std::vector<HNType>& out;
  std::vector<DimensionVector> prefix;

  void extend(const DimensionVector& remaining) {
    std::vector<std::int64_t> part(remaining.size(), 0);
    // enumerate nonzero part <= remaining, lexicographically
    while (true) {
      std::size_t i = part.size();
      bool wrapped = true;
      while (i > 0) {
        --i;
        if (part[i] < remaining[i]) {
          ++part[i];
          wrapped = false;
          break;
        }
        part[i] = 0;
      }
      if (wrapped) return;
      DimensionVector p(part);
      if (!prefix.empty() && compare_slopes(theta, prefix.back(), p) <= 0) continue;
      if (filter && !filter(p)) continue;
      const bool closes = (part == remaining.entries());
      if (!closes && prefix.size() + 1 >= max_parts) continue;
      prefix.push_back(p);
      if (closes)
        out.push_back(HNType{prefix});
      else
        extend(remaining - p);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<HNType> hn_types(const Quiver& q, const Stability& theta, const DimensionVector& d,
                             std::size_t max_parts, const SemistabilityFilter& sst_filter) {
  check_sized(q, d);
  check_sized(q, theta);
  if (d.is_zero()) throw DomainError("HN types of the zero dimension vector are undefined");
  if (max_parts == 0) throw DomainError("max_parts must be at least 1");
  std::vector<HNType> out;
  HNSearch search{q, theta, max_parts, sst_filter, out, {}};
  search.extend(d);
  return out;
}

Integer hn_codimension(const Quiver& q, const HNType& t) {
  if (t.parts.empty()) throw DomainError("HN type has no parts");
  Integer s = 0;
  for (std::size_t k = 0; k < t.parts.size(); ++k)
    for (std::size_t l = k + 1; l < t.parts.size(); ++l) s -= euler_form(q, t.parts[k], t.parts[l]);
  return s;
}

std::optional<Integer> strictly_semistable_wall_codim(const Quiver& q, const Stability& theta,
                                                      const DimensionVector& d) {
  check_sized(q, d);
  check_sized(q, theta);
  std::optional<Integer> best;
  for (const auto& dec : enumerate_decompositions(d)) {
    if (compare_slopes(theta, dec.e, dec.f) != 0) continue;
    Integer codim = -euler_form(q, dec.e, dec.f);
    if (!best || codim < *best) best = std::move(codim);
  }
  return best;
}

std::string to_string(BrauerStatus status) {
  switch (status) {
    case BrauerStatus::theorem:
      return "theorem";
    case BrauerStatus::special_case:
      return "special-case";
    case BrauerStatus::conjectural:
      return "conjectural";
  }
  return "unknown";
}

bool is_special_case(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  check_sized(q, d);
  if (q == Quiver::loop(2) && d == DimensionVector{2}) return true;
  if (q == Quiver::kronecker(3) && d == DimensionVector{2, 2}) {
    check_sized(q, theta);
    return theta[0] > theta[1];
  }
  return false;
}

BrauerPrediction predict_brauer(const Quiver& q, const Stability& theta, const DimensionVector& d) {
  check_sized(q, d);
  check_sized(q, theta);
  BrauerPrediction pred;
  pred.order = gcd_of(d);
  const auto report = check_ample_stability_criterion(q, theta, d);
  if (report.pass) {
    pred.status = BrauerStatus::theorem;
    pred.generator_note = pred.order == 1 ? "trivial group"
                                          : "cyclic; the class of every P_n with n != 0 is a generator";
  } else if (is_special_case(q, theta, d)) {
    pred.status = BrauerStatus::special_case;
    pred.generator_note = "cyclic of order 2; the conic bundle P_1 has nonzero class";
  } else {
    pred.status = BrauerStatus::conjectural;
    pred.generator_note = pred.order == 1 ? "trivial group (conjectural)"
                                          : "cyclic; every P_n with n != 0 conjecturally a generator";
  }
  return pred;
}

FineModuliVerdict fine_moduli_predicate(const DimensionVector& d) {
  const Integer g = gcd_of(d);
  if (g == 1) return {true, "gcd 1: universal representation exists (twist by a character with sum a_i d_i = 1)"};
  return {false, "gcd " + g.get_str() +
                     ": no universal or tautological representation on any nonempty open subset, "
                     "conditional on the Brauer prediction status"};
}

}  // namespace quivermod
