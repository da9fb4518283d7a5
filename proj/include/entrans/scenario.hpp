#pragma once

// Scenario files: a flat key = value format with [section] headers. A
// scenario names an input state (entanglement degree or explicit matrix)
// and a pair of media (explicit amplitude matrices or two plasmon films
// plus the illumination frequency).

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "entrans/biphoton.hpp"
#include "entrans/mat2.hpp"
#include "entrans/media.hpp"

namespace entrans {

struct FilmScenario {
  PlasmonFilmSpec film1;
  PlasmonFilmSpec film2;
  // Either a literal frequency or a lattice resonance to tune to,
  // one of "film1.a", "film1.b", "film2.a", "film2.b".
  std::optional<double> omega0;
  std::string tune;
};

struct Scenario {
  std::optional<double> p_in;
  std::optional<Mat2> state;
  std::optional<std::pair<Mat2, Mat2>> matrices;
  std::optional<FilmScenario> films;
};

// Parses "re", "imi", or "re+imi" with no internal spaces, e.g. "0.5-0.25i".
C64 parse_complex(const std::string& text);

Scenario parse_scenario(std::istream& in, const std::string& name);
Scenario parse_scenario_file(const std::string& path);

// Realizations of the two halves of a scenario.
TwoPhotonState scenario_state(const Scenario& sc);
std::pair<TransmissionMatrix, TransmissionMatrix> scenario_media(
    const Scenario& sc);
double scenario_omega0(const FilmScenario& films);

}  // namespace entrans
