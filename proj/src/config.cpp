#include "ncgkk/config.hpp"

#include <cstdlib>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ncgkk/numeric.hpp"

namespace ncgkk {

namespace {

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') || (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

template <class T> T parse_number(const std::string &key, const std::string &text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (in.fail() || !in.eof())
    throw ConfigError("config: malformed value for " + key + ": '" + text + "'");
  return value;
}

std::size_t letter_slot(const std::string &key, const std::string &name) {
  if (name == "a")
    return static_cast<std::size_t>(Letter::a);
  if (name == "a_star")
    return static_cast<std::size_t>(Letter::a_star);
  if (name == "b")
    return static_cast<std::size_t>(Letter::b);
  if (name == "b_star")
    return static_cast<std::size_t>(Letter::b_star);
  throw ConfigError("config: unknown generator in derivations." + key);
}

void apply_derivation_override(Config &config, const std::string &key, const std::string &value) {
  const auto dot = key.find('.');
  if (dot == std::string::npos)
    throw ConfigError("config: derivation keys look like raise.<letter> or lower.<letter>, got " + key);
  const auto which = key.substr(0, dot);
  const auto slot = letter_slot(key, key.substr(dot + 1));
  NormalFormElement image;
  try {
    image = parse_element(value);
  } catch (const std::exception &e) {
    throw ConfigError("config: derivations." + key + ": " + e.what());
  }
  if (which == "raise")
    config.derivations.raise[slot] = image;
  else if (which == "lower")
    config.derivations.lower[slot] = image;
  else
    throw ConfigError("config: unknown derivation " + which);
  config.derivations_overridden = true;
}

void apply_key(Config &c, const std::string &section, const std::string &key, const std::string &raw) {
  const auto value = unquote(raw);
  const auto full = section + "." + key;
  if (section == "derivations")
    return apply_derivation_override(c, key, value);
  if (full == "torus.box")
    c.box = parse_number<int>(full, value);
  else if (full == "torus.theta")
    c.theta = parse_number<double>(full, value);
  else if (full == "torus.margin")
    c.margin = parse_number<int>(full, value);
  else if (full == "gauge.random_pairs")
    c.random_pairs = parse_number<int>(full, value);
  else if (full == "hopf.nmax")
    c.nmax = parse_number<int>(full, value);
  else if (full == "hopf.binomial_nmax")
    c.binomial_nmax = parse_number<int>(full, value);
  else if (full == "hopf.factorization_weight")
    c.factorization_weight = parse_number<int>(full, value);
  else if (full == "hopf.factorization_degree")
    c.factorization_degree = parse_number<int>(full, value);
  else if (full == "spectra.kmax")
    c.kmax = parse_number<int>(full, value);
  else if (full == "spectra.summability_nmax")
    c.summability_nmax = parse_number<int>(full, value);
  else if (full == "spectra.equivalence_nmax")
    c.equivalence_nmax = parse_number<int>(full, value);
  else if (full == "run.seed")
    c.seed = parse_number<std::uint64_t>(full, value);
  else
    throw ConfigError("config: unknown key " + full);
}

} // namespace

void Config::validate() const {
  if (box < 1)
    throw ConfigError("box must be at least 1");
  if (margin < 0 || margin > box)
    throw ConfigError("margin must lie in [0, box]");
  if (nmax < 1)
    throw ConfigError("nmax must be at least 1");
  if (binomial_nmax < 2)
    throw ConfigError("binomial_nmax must be at least 2");
  if (factorization_weight < 0 || factorization_degree < 0)
    throw ConfigError("factorization bounds must be nonnegative");
  if (kmax < 0 || summability_nmax < 0 || equivalence_nmax < 0)
    throw ConfigError("spectrum bounds must be nonnegative");
  if (random_pairs < 1)
    throw ConfigError("random_pairs must be at least 1");
}

std::map<std::string, std::string> Config::echo() const {
  return {{"box", std::to_string(box)},
          {"theta", format_real(theta)},
          {"margin", std::to_string(margin)},
          {"random_pairs", std::to_string(random_pairs)},
          {"nmax", std::to_string(nmax)},
          {"binomial_nmax", std::to_string(binomial_nmax)},
          {"factorization_weight", std::to_string(factorization_weight)},
          {"factorization_degree", std::to_string(factorization_degree)},
          {"kmax", std::to_string(kmax)},
          {"summability_nmax", std::to_string(summability_nmax)},
          {"equivalence_nmax", std::to_string(equivalence_nmax)},
          {"seed", std::to_string(seed)},
          {"derivations", derivations_overridden ? "overridden" : "standard"}};
}

void apply_config_file(Config &config, const std::string &path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  for (const auto &[section, body] : tree) {
    if (body.empty())
      throw ConfigError("config: key " + section + " must be inside a [section]");
    for (const auto &[key, leaf] : body)
      apply_key(config, section, key, leaf.data());
  }
}

void apply_environment(Config &config) {
  if (const char *seed = std::getenv("NCGKK_SEED"))
    config.seed = parse_number<std::uint64_t>("NCGKK_SEED", seed);
}

} // namespace ncgkk
