#include "tfg/substitution.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace tfg {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (static_cast<int>(rules_.size()) != alphabet_.size()) {
    throw std::invalid_argument("one rule per symbol required");
  }
  for (const Word& r : rules_) {
    if (r.empty()) throw std::invalid_argument("rule image must be nonempty");
    for (Symbol s : r) {
      if (s < 0 || s >= alphabet_.size()) throw std::invalid_argument("rule symbol out of range");
    }
  }
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Symbol s : w) {
    for (Symbol t : rule(s)) out.append(t);
  }
  return out;
}

Word Substitution::iterate(const Word& w, int times) const {
  Word out = w;
  for (int i = 0; i < times; ++i) out = apply(out);
  return out;
}

Substitution Substitution::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
  Alphabet alphabet(names);
  std::vector<Word> rules(names.size());
  const auto& jr = j.at("rules");
  for (size_t i = 0; i < names.size(); ++i) {
    if (!jr.contains(names[i])) throw std::invalid_argument("missing rule for " + names[i]);
    const auto& val = jr.at(names[i]);
    if (val.is_array()) {
      Word w;
      for (const auto& item : val) {
        auto idx = alphabet.index_of(item.get<std::string>());
        if (!idx) throw std::invalid_argument("unknown symbol in rule: " + item.get<std::string>());
        w.append(*idx);
      }
      rules[i] = w;
    } else {
      rules[i] = alphabet.parse(val.get<std::string>());
    }
  }
  return Substitution(std::move(alphabet), std::move(rules));
}

Substitution Substitution::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

bool is_primitive(const Substitution& sub) {
  const int n = sub.alphabet().size();
  // incidence over the boolean semiring; positivity of a power is all that matters
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (Symbol s = 0; s < n; ++s) {
    for (Symbol t : sub.rule(s)) m[static_cast<size_t>(s)][static_cast<size_t>(t)] = true;
  }
  auto positive = [n](const std::vector<std::vector<bool>>& a) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!a[i][j]) return false;
    return true;
  };
  auto mul = [n](const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k])
          for (int j = 0; j < n; ++j)
            if (b[k][j]) c[i][j] = true;
    return c;
  };
  const int bound = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<bool>> power = m;
  for (int k = 1; k <= bound; ++k) {
    if (positive(power)) return true;
    power = mul(power, m);
  }
  return false;
}

}  // namespace tfg
