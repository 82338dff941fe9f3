#include "iongate/species.hpp"

#include <sstream>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

std::vector<IonSpecies> builtin_species() {
  using namespace constants;
  std::vector<IonSpecies> s;
  // Isotope masses from standard atomic mass tables.
  s.push_back({"Yb-171", 170.936 * atomic_mass_unit, elementary_charge,
               hbar * two_pi * 12.64e9});
  s.push_back({"Be-9", 9.0122 * atomic_mass_unit, elementary_charge, std::nullopt});
  s.push_back({"electron", electron_mass, -elementary_charge, std::nullopt});
  return s;
}

}  // namespace

SpeciesRegistry::SpeciesRegistry() : species_(builtin_species()) {}

const IonSpecies& SpeciesRegistry::lookup(std::string_view name) const {
  for (const auto& sp : species_) {
    if (sp.name == name) return sp;
  }
  std::ostringstream msg;
  msg << "unknown species '" << name << "'; registered:";
  for (const auto& sp : species_) msg << " " << sp.name;
  throw UnknownSpeciesError(msg.str());
}

void SpeciesRegistry::add(IonSpecies species) {
  if (species.mass <= 0.0) throw Error("species mass must be > 0");
  if (species.charge == 0.0) throw Error("species charge must be nonzero");
  for (auto& sp : species_) {
    if (sp.name == species.name) {
      sp = std::move(species);
      return;
    }
  }
  species_.push_back(std::move(species));
}

const IonSpecies& lookup_species(std::string_view name) {
  static const SpeciesRegistry registry;
  return registry.lookup(name);
}

}  // namespace iongate
