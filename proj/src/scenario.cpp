#include "entrans/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "entrans/errors.hpp"

namespace entrans {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double_or_throw(const std::string& text, const std::string& where) {
  std::string body = trim(text);
  if (!body.empty() && body[0] == '+') {
    body.erase(0, 1);
  }
  double value = 0.0;
  const char* begin = body.data();
  const char* end = begin + body.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || body.empty() ||
      !std::isfinite(value)) {
    throw ConfigError(where + ": expected a finite number, got \"" + text +
                      "\"");
  }
  return value;
}

int parse_int_or_throw(const std::string& text, const std::string& where) {
  const std::string body = trim(text);
  int value = 0;
  const char* begin = body.data();
  const char* end = begin + body.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || body.empty()) {
    throw ConfigError(where + ": expected an integer, got \"" + text + "\"");
  }
  return value;
}

struct Entry {
  std::string value;
  int line = 0;
  mutable bool used = false;
};

using Section = std::map<std::string, Entry>;

class Raw {
 public:
  Raw(std::string name) : name_(std::move(name)) {}

  std::string where(int line) const {
    return name_ + ":" + std::to_string(line);
  }

  void add(const std::string& section, const std::string& key, Entry entry) {
    const int line = entry.line;
    auto [it, inserted] = sections_[section].emplace(key, std::move(entry));
    if (!inserted) {
      throw ConfigError(where(line) + ": duplicate key \"" + key + "\" in [" +
                        section + "]");
    }
  }

  bool has_section(const std::string& section) const {
    return sections_.count(section) != 0;
  }

  const Entry* find(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) {
      return nullptr;
    }
    const auto it = sec->second.find(key);
    if (it == sec->second.end()) {
      return nullptr;
    }
    it->second.used = true;
    return &it->second;
  }

  const Entry& require(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (e == nullptr) {
      throw ConfigError(name_ + ": missing key \"" + key + "\" in [" +
                        section + "]");
    }
    return *e;
  }

  void reject_unused() const {
    for (const auto& [section, entries] : sections_) {
      for (const auto& [key, entry] : entries) {
        if (!entry.used) {
          throw ConfigError(where(entry.line) + ": unknown key \"" + key +
                            "\" in [" + section + "]");
        }
      }
    }
  }

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::map<std::string, Section> sections_;
};

double entry_double(const Raw& raw, const std::string& section,
                    const std::string& key) {
  const Entry& e = raw.require(section, key);
  return parse_double_or_throw(e.value, raw.where(e.line));
}

int entry_int(const Raw& raw, const std::string& section,
              const std::string& key) {
  const Entry& e = raw.require(section, key);
  return parse_int_or_throw(e.value, raw.where(e.line));
}

C64 entry_complex(const Raw& raw, const std::string& section,
                  const std::string& key) {
  const Entry& e = raw.require(section, key);
  try {
    return parse_complex(e.value);
  } catch (const ConfigError& err) {
    throw ConfigError(raw.where(e.line) + ": " + err.what());
  }
}

Mat2 entry_matrix(const Raw& raw, const std::string& section,
                  const char* prefix) {
  Mat2 m;
  const std::string p(prefix);
  m(0, 0) = entry_complex(raw, section, p + "00");
  m(0, 1) = entry_complex(raw, section, p + "01");
  m(1, 0) = entry_complex(raw, section, p + "10");
  m(1, 1) = entry_complex(raw, section, p + "11");
  return m;
}

PlasmonFilmSpec entry_film(const Raw& raw, const std::string& section) {
  PlasmonFilmSpec spec;
  spec.lattice_a = entry_double(raw, section, "lattice_a");
  spec.lattice_b = entry_double(raw, section, "lattice_b");
  spec.order_n = entry_int(raw, section, "order");
  spec.gamma = entry_double(raw, section, "gamma");
  spec.t_peak = entry_double(raw, section, "t_peak");
  spec.epsilon = entry_double(raw, section, "epsilon");
  return spec;
}

bool known_section(const std::string& s) {
  return s == "input" || s == "medium1" || s == "medium2" || s == "film1" ||
         s == "film2" || s == "illumination";
}

}  // namespace

C64 parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) {
    throw ConfigError("empty complex literal");
  }
  const auto parse_part = [&s](const std::string& part) {
    std::string body = part;
    double sign = 1.0;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      sign = body[0] == '-' ? -1.0 : 1.0;
      body.erase(0, 1);
    }
    if (body.empty()) {
      return sign;  // bare "+i" or "-i"
    }
    double value = 0.0;
    const char* begin = body.data();
    const char* end = begin + body.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value)) {
      throw ConfigError("malformed complex literal \"" + s + "\"");
    }
    return sign * value;
  };

  if (s.back() != 'i') {
    return C64(parse_part(s), 0.0);
  }
  const std::string body = s.substr(0, s.size() - 1);
  if (body.empty()) {
    return C64(0.0, 1.0);
  }
  // Last sign not belonging to an exponent splits real from imaginary.
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      return C64(parse_part(body.substr(0, i)), parse_part(body.substr(i)));
    }
  }
  return C64(0.0, parse_part(body));
}

Scenario parse_scenario(std::istream& in, const std::string& name) {
  Raw raw(name);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(raw.where(lineno) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section)) {
        throw ConfigError(raw.where(lineno) + ": unknown section [" + section +
                          "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(raw.where(lineno) + ": expected key = value");
    }
    if (section.empty()) {
      throw ConfigError(raw.where(lineno) + ": key outside any section");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(raw.where(lineno) + ": empty key");
    }
    raw.add(section, key, Entry{trim(line.substr(eq + 1)), lineno, false});
  }

  Scenario sc;

  if (!raw.has_section("input")) {
    throw ConfigError(name + ": missing [input] section");
  }
  const bool has_pin = raw.find("input", "p_in") != nullptr;
  const bool has_state = raw.find("input", "a00") != nullptr ||
                         raw.find("input", "a01") != nullptr ||
                         raw.find("input", "a10") != nullptr ||
                         raw.find("input", "a11") != nullptr;
  if (has_pin == has_state) {
    throw ConfigError(name +
                      ": [input] needs exactly one of p_in or a00..a11");
  }
  if (has_pin) {
    sc.p_in = entry_double(raw, "input", "p_in");
  } else {
    sc.state = entry_matrix(raw, "input", "a");
  }

  const bool has_matrices =
      raw.has_section("medium1") || raw.has_section("medium2");
  const bool has_films = raw.has_section("film1") ||
                         raw.has_section("film2") ||
                         raw.has_section("illumination");
  if (has_matrices == has_films) {
    throw ConfigError(
        name + ": media need exactly one of [medium1]/[medium2] or "
               "[film1]/[film2]/[illumination]");
  }
  if (has_matrices) {
    sc.matrices = std::make_pair(entry_matrix(raw, "medium1", "t"),
                                 entry_matrix(raw, "medium2", "t"));
  } else {
    FilmScenario films;
    films.film1 = entry_film(raw, "film1");
    films.film2 = entry_film(raw, "film2");
    const Entry* omega = raw.find("illumination", "omega0");
    const Entry* tune = raw.find("illumination", "tune");
    if ((omega != nullptr) == (tune != nullptr)) {
      throw ConfigError(
          name + ": [illumination] needs exactly one of omega0 or tune");
    }
    if (omega != nullptr) {
      films.omega0 =
          parse_double_or_throw(omega->value, raw.where(omega->line));
    } else {
      const std::string target = trim(tune->value);
      if (target != "film1.a" && target != "film1.b" && target != "film2.a" &&
          target != "film2.b") {
        throw ConfigError(raw.where(tune->line) +
                          ": tune must be one of film1.a, film1.b, film2.a, "
                          "film2.b");
      }
      films.tune = target;
    }
    sc.films = std::move(films);
  }

  raw.reject_unused();
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file \"" + path + "\"");
  }
  return parse_scenario(in, path);
}

TwoPhotonState scenario_state(const Scenario& sc) {
  if (sc.p_in.has_value()) {
    return canonical_state(*sc.p_in);
  }
  return make_state(*sc.state);
}

std::pair<TransmissionMatrix, TransmissionMatrix> scenario_media(
    const Scenario& sc) {
  if (sc.matrices.has_value()) {
    return {make_transmission(sc.matrices->first),
            make_transmission(sc.matrices->second)};
  }
  const FilmScenario& films = *sc.films;
  return film_pair(films.film1, films.film2, scenario_omega0(films));
}

double scenario_omega0(const FilmScenario& films) {
  if (films.omega0.has_value()) {
    return *films.omega0;
  }
  const PlasmonFilmSpec& film = films.tune.substr(0, 5) == "film1"
                                    ? films.film1
                                    : films.film2;
  const double lattice =
      films.tune.back() == 'a' ? film.lattice_a : film.lattice_b;
  return plasmon_resonance(lattice, film.order_n, film.epsilon);
}

}  // namespace entrans
