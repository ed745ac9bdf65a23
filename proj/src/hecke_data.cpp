#include "hgf/hecke_data.hpp"

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hgf/errors.hpp"

namespace hgf {

std::string enlarge_message(const std::string& subject, unsigned r, const std::vector<unsigned>& degrees) {
  std::ostringstream os;
  os << subject << " does not split over the field of degree " << r << "; irreducible factor degrees over F_p:";
  for (auto d : degrees) os << ' ' << d;
  os << "; enlarge r";
  return os.str();
}

std::string to_string(const HeckeOp& op) {
  return "T(" + std::to_string(op.ell) + "," + std::to_string(op.k) + ")";
}

HeckeOp parse_hecke_op(std::string_view text) {
  std::string s(text);
  HeckeOp op;
  char tail = 0;
  if (std::sscanf(s.c_str(), "T(%u,%u%c", &op.ell, &op.k, &tail) == 3 && tail == ')') return op;
  if (std::sscanf(s.c_str(), "%u:%u", &op.ell, &op.k) == 2 && s.find_first_not_of("0123456789:") == std::string::npos) return op;
  throw std::invalid_argument("malformed Hecke operator label '" + s + "'");
}

OperatorSet OperatorSet::full(const std::vector<std::uint32_t>& primes) {
  std::set<HeckeOp> ops;
  for (auto l : primes)
    for (unsigned k = 1; k <= 3; ++k) ops.insert({l, k});
  return OperatorSet(std::move(ops));
}

std::vector<std::uint32_t> OperatorSet::primes() const {
  std::vector<std::uint32_t> out;
  for (const auto& op : ops_)
    if (out.empty() || out.back() != op.ell) out.push_back(op.ell);
  return out;
}

std::string OperatorSet::format() const {
  std::string out;
  for (auto l : primes()) {
    std::vector<unsigned> ks;
    for (const auto& op : ops_)
      if (op.ell == l) ks.push_back(op.k);
    if (!out.empty()) out += ", ";
    if (ks == std::vector<unsigned>{1, 2, 3}) {
      out += "T(" + std::to_string(l) + ")";
    } else {
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) out += ", ";
        out += "T(" + std::to_string(l) + "," + std::to_string(ks[i]) + ")";
      }
    }
  }
  return out;
}

OperatorSet OperatorSet::parse(std::string_view text) {
  std::set<HeckeOp> ops;
  std::string s(text);
  std::size_t pos = 0;
  while ((pos = s.find("T(", pos)) != std::string::npos) {
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated operator in '" + s + "'");
    std::string inner = s.substr(pos + 2, close - pos - 2);
    auto comma = inner.find(',');
    try {
      auto l = static_cast<std::uint32_t>(std::stoul(inner.substr(0, comma)));
      if (comma == std::string::npos) {
        for (unsigned k = 1; k <= 3; ++k) ops.insert({l, k});
      } else {
        ops.insert({l, static_cast<unsigned>(std::stoul(inner.substr(comma + 1)))});
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed operator 'T(" + inner + ")'");
    }
    pos = close + 1;
  }
  return OperatorSet(std::move(ops));
}

OperatorSet HeckeData::operators() const {
  std::set<HeckeOp> ops;
  for (const auto& [op, v] : values) ops.insert(op);
  return OperatorSet(std::move(ops));
}

void HeckeData::write(std::ostream& os) const {
  os << "field " << field.descriptor() << '\n';
  os << "level " << level << '\n';
  os << "g " << g << '\n';
  os << "eta " << eta << '\n';
  for (const auto& [op, v] : values) os << op.ell << ' ' << op.k << ' ' << field.format(v) << '\n';
}

HeckeData HeckeData::read(std::istream& is) {
  std::string line;
  std::optional<ExtField> field;
  std::uint64_t level = 0;
  unsigned g = 0;
  std::string eta;
  std::map<HeckeOp, FieldElement> values;
  bool have_level = false, have_g = false, have_eta = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("Hecke data line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "field") {
      std::string desc;
      ls >> desc;
      field = ExtField::parse(desc);
    } else if (key == "level") {
      if (!(ls >> level) || level == 0) throw fail("bad level");
      have_level = true;
    } else if (key == "g") {
      if (!(ls >> g)) throw fail("bad g");
      have_g = true;
    } else if (key == "eta") {
      if (!(ls >> eta)) throw fail("bad eta");
      have_eta = true;
    } else {
      if (!field) throw fail("eigenvalue before the field line");
      HeckeOp op;
      std::string value;
      std::istringstream vs(line);
      if (!(vs >> op.ell >> op.k >> value)) throw fail("expected 'l k value'");
      if (op.k < 1 || op.k > 3) throw fail("k must be 1, 2 or 3");
      if (!values.emplace(op, field->parse_element(value)).second) throw fail("duplicate " + to_string(op));
    }
  }
  if (!field || !have_level || !have_g || !have_eta) throw std::invalid_argument("Hecke data lacks field, level, g or eta header");
  return HeckeData{*field, level, g, eta, std::move(values)};
}

}  // namespace hgf
