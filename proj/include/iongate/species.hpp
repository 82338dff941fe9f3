#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iongate {

/// Particle identity. Masses and charges in SI.
struct IonSpecies {
  std::string name;
  double mass = 0.0;    // kg
  double charge = 0.0;  // C, signed
  /// Hyperfine qubit splitting E0 in J; absent when the qubit is a real spin.
  std::optional<double> hyperfine_splitting_E0;
};

/// Registry of known species. Built-ins: Yb-171, Be-9, electron.
/// User-defined species can be added on top (e.g. from a config file).
class SpeciesRegistry {
 public:
  SpeciesRegistry();  // populates built-ins

  const IonSpecies& lookup(std::string_view name) const;  // throws UnknownSpeciesError
  void add(IonSpecies species);
  std::vector<std::string> names() const;

 private:
  std::vector<IonSpecies> species_;
};

/// Lookup in the immutable built-in registry.
const IonSpecies& lookup_species(std::string_view name);

}  // namespace iongate
