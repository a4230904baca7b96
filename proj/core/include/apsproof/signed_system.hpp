// Signed systems: a positive (proved) side and a negative (refuted) side
// built by cross-product selection, with selection provenance.
#ifndef APSPROOF_SIGNED_SYSTEM_HPP
#define APSPROOF_SIGNED_SYSTEM_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "apsproof/system.hpp"

namespace aps {

/// One pick of the cross product: for the positive rule `positive_rule` of a
/// conclusion group, premise `premise_index` was selected; it sits at
/// `simplified_position` among the negative rule's premises.
struct SelectionEntry {
  RuleId positive_rule;
  std::size_t premise_index = 0;
  std::size_t simplified_position = 0;
  bool operator==(const SelectionEntry&) const = default;
};

/// A full selection tuple, one entry per positive rule of the group.
struct Selection {
  std::vector<SelectionEntry> entries;
  bool operator==(const Selection&) const = default;
};

/// All selections that collapse to one negative rule; the first one is the
/// one originally emitted.
struct SelectionAlternatives {
  std::vector<Selection> selections;
};

/// Rules over proved sequents plus rules over refuted sequents. Negative
/// rules carry, per surviving rule, every selection tuple that produced it.
struct SignedSystem {
  System positive;
  System negative;
  std::map<RuleId, SelectionAlternatives> selection_provenance;
};

}  // namespace aps

#endif  // APSPROOF_SIGNED_SYSTEM_HPP
