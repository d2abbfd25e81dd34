#pragma once

#include <string>
#include <vector>

#include "sric/oracle/symbolic.hpp"

namespace sric::oracle {

/// One component equation of a derived system: the right side obtained by
/// expanding the superfield equation symbolically, next to the
/// hand-transcribed form kept for cross-checking.
struct ComponentEquation {
  std::string component;  // e.g. "y", "l", "D.g1"
  Poly derived;
  Poly transcribed;
  bool matches = false;
};

struct SystemAudit {
  std::string system;  // "riccati" or "b0-pair"
  std::vector<ComponentEquation> equations;

  bool all_match() const;
  std::vector<std::string> mismatched_components() const;
};

/// Expand the superfield right side with symbolic component coefficients and
/// extract each blade: the mechanical derivation of the component system.
/// `system` is "riccati" (a Y^2 + b Y + c) or "b0-pair" (the coupled
/// particular/reciprocal system at b = 0). Every derived right side is
/// compared against the hand-transcribed table; mismatches are flagged, never
/// silently replaced.
SystemAudit derive_component_system(const std::string& system);

/// Human-readable audit table for one or more systems (the committed
/// docs/typo-audit.txt is this text for both systems).
std::string render_audit(const std::vector<SystemAudit>& audits);

/// Convenience: both shipped systems rendered in order.
std::string render_full_audit();

}  // namespace sric::oracle
