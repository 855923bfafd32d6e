#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/quiver.hpp"

namespace quivermod {

/// A proper splitting d = e + f with e, f both nonzero.
struct Decomposition {
  DimensionVector e;
  DimensionVector f;

  bool operator==(const Decomposition&) const = default;
};

/// Input range over the proper decompositions of d, lexicographic in e.
/// Lazily generated; the range holds its own copy of d.
class DecompositionRange {
 public:
  explicit DecompositionRange(DimensionVector d);

  class iterator {
   public:
    using value_type = Decomposition;
    using difference_type = std::ptrdiff_t;
    using reference = const Decomposition&;
    using pointer = const Decomposition*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || e_ == other.e_); }

   private:
    friend class DecompositionRange;
    iterator(const DimensionVector* d, bool done);
    void advance_odometer();
    void refresh();

    const DimensionVector* d_ = nullptr;
    std::vector<std::int64_t> e_;
    Decomposition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&d_, false); }
  iterator end() const { return iterator(&d_, true); }

  /// prod(d_i + 1) - 2.
  Integer count() const;

 private:
  DimensionVector d_;
};

DecompositionRange enumerate_decompositions(const DimensionVector& d);

/// Outcome of the ample-stability sufficient criterion. A decomposition
/// qualifies when mu(e) >= mu(f); the criterion passes when every
/// qualifying decomposition has <e, f> <= -2.
struct AmpleStabilityReport {
  bool pass = true;
  /// Lexicographically first qualifying decomposition with <e, f> >= -1.
  std::optional<Decomposition> witness;
  std::optional<Integer> witness_pairing;
  /// Largest <e, f> over qualifying decompositions (the binding one);
  /// absent when nothing qualifies.
  std::optional<Integer> max_pairing;
  std::size_t qualifying = 0;
};

AmpleStabilityReport check_ample_stability_criterion(const Quiver& q, const Stability& theta,
                                                     const DimensionVector& d);

/// Ordered splitting d = d^1 + ... + d^s with strictly decreasing slopes.
struct HNType {
  std::vector<DimensionVector> parts;

  bool is_trivial() const noexcept { return parts.size() == 1; }
  bool operator==(const HNType&) const = default;
};

using SemistabilityFilter = std::function<bool(const DimensionVector&)>;

/// All tuples with strictly decreasing slopes summing to d and at most
/// max_parts parts, ordered lexicographically by their part sequences.
/// Without a filter this is a superset of the true HN types: nothing here
/// decides whether a part admits semistable representations.
std::vector<HNType> hn_types(const Quiver& q, const Stability& theta, const DimensionVector& d,
                             std::size_t max_parts, const SemistabilityFilter& sst_filter = {});

/// -sum_{k<l} <d^k, d^l>.
Integer hn_codimension(const Quiver& q, const HNType& t);

/// min over proper decompositions with mu(e) = mu(f) of -<e, f>; absent if
/// no equal-slope decomposition exists.
std::optional<Integer> strictly_semistable_wall_codim(const Quiver& q, const Stability& theta,
                                                      const DimensionVector& d);

enum class BrauerStatus { theorem, special_case, conjectural };

std::string to_string(BrauerStatus status);

struct BrauerPrediction {
  Integer order;
  std::string generator_note;
  BrauerStatus status = BrauerStatus::conjectural;
};

/// True for L_2 with d = (2), and for K_3 with d = (2, 2) under a stability
/// with Theta_0 > Theta_1 (equivalent to (1, 0)).
bool is_special_case(const Quiver& q, const Stability& theta, const DimensionVector& d);

BrauerPrediction predict_brauer(const Quiver& q, const Stability& theta, const DimensionVector& d);

struct FineModuliVerdict {
  bool fine = false;
  std::string note;
};

FineModuliVerdict fine_moduli_predicate(const DimensionVector& d);

}  // namespace quivermod
