#pragma once

#include "nwave/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nwave {

enum class TransformId {
  A2_T1,
  A2_T2,
  A2_T3,
  B2_TM,
  B2_T10,
  B2_T10_INV,
  B2_T2A2,
  G2_T1,
  G2_TA1_3A2,
};

std::string to_string(TransformId id);
Algebra algebra_of(TransformId id);
/// Accepts the full id ("B2_T10_INV") or the short name within an algebra
/// ("T10_INV"). Throws std::invalid_argument.
TransformId parse_transform(std::string_view name, Algebra algebra);
/// Every id bound to an algebra.
std::vector<TransformId> transforms_of(Algebra a);

/// Applies one discrete transformation. Throws PivotZero naming the field
/// whose vanishing blocks the map, std::invalid_argument on algebra mismatch.
FieldConfig apply(TransformId id, const FieldConfig& cfg);

/// Left-to-right composition. A PivotZero from the k-th map (counting from 1)
/// is rethrown with "step k (ID): " prepended to its message.
FieldConfig apply_chain(const std::vector<TransformId>& ids, const FieldConfig& cfg);

/// The map exactly as typeset, for the ids whose shipped form differs from
/// the typeset one (A2_T1, B2_T10_INV, G2_T1, G2_TA1_3A2); nullopt otherwise.
std::optional<FieldConfig> apply_printed(TransformId id, const FieldConfig& cfg);

/// Closed rows of the second-root map of B2 as typeset (tilde f-1.0,
/// f-1.1, f+0.1, f+1.2, f+1.1); the remaining fields come from the shipped map.
FieldConfig b2_t2a2_printed_rows(const FieldConfig& cfg);

/// Rows of the same map typeset after substituting f+1.0 = f+1.1 = f+1.2 = 0
/// (tilde f-0.1, f+0.1, f-1.2); the remaining fields come from the shipped map.
FieldConfig b2_t2a2_reduced_rows(const FieldConfig& cfg);

struct InvarianceReport {
  TransformId id;
  /// One entry per equation of the algebra, in model order.
  std::vector<std::pair<RootLabel, bool>> equations;
  bool pass = false;
};

/// Applies the map and checks every equation of the transformed config exactly.
InvarianceReport verify_invariance(TransformId id, const FieldConfig& cfg);

}  // namespace nwave
