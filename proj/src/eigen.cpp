#include "hgf/eigen.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hgf/errors.hpp"

namespace hgf {

std::vector<std::pair<HeckeOp, HeckeOp>> check_commuting(const OperatorFamily& family) {
  const ExtField& F = family.field;
  for (const auto& op : family.ops) {
    if (op.matrix.rows() != family.dimension || op.matrix.cols() != family.dimension) {
      throw std::invalid_argument("operator " + to_string(op.op) + " is not " + std::to_string(family.dimension) +
                                  "x" + std::to_string(family.dimension));
    }
  }
  std::vector<std::pair<HeckeOp, HeckeOp>> bad;
  for (std::size_t i = 0; i < family.ops.size(); ++i) {
    for (std::size_t j = i + 1; j < family.ops.size(); ++j) {
      const Matrix& a = family.ops[i].matrix;
      const Matrix& b = family.ops[j].matrix;
      if (!(linalg::mul(F, a, b) == linalg::mul(F, b, a))) bad.emplace_back(family.ops[i].op, family.ops[j].op);
    }
  }
  return bad;
}

namespace {

std::vector<unsigned> nonsplit_degrees(const ExtField& F, const poly::Poly& rest) {
  if (poly::in_prime_field(F, rest)) {
    std::vector<unsigned> out;
    for (const auto& f : fp::factor(poly::restrict_to_prime(F, rest), F.p())) {
      for (unsigned m = 0; m < f.multiplicity; ++m) out.push_back(static_cast<unsigned>(fp::degree(f.poly)));
    }
    return out;
  }
  return {static_cast<unsigned>(poly::degree(rest))};
}

}  // namespace

Decomposition joint_eigenspaces(const OperatorFamily& family) {
  const ExtField& F = family.field;
  auto ops = family.ops;
  std::sort(ops.begin(), ops.end(), [](const LabeledOperator& a, const LabeledOperator& b) { return a.op < b.op; });
  for (std::size_t i = 1; i < ops.size(); ++i) {
    if (ops[i].op == ops[i - 1].op) throw std::invalid_argument("duplicate operator " + to_string(ops[i].op));
  }
  auto bad = check_commuting(family);
  if (!bad.empty()) {
    throw std::invalid_argument("operators " + to_string(bad.front().first) + " and " + to_string(bad.front().second) +
                                " do not commute");
  }

  Decomposition out;
  JointEigenspace whole;
  whole.basis = linalg::identity(F, family.dimension);
  whole.hecke_mult = static_cast<unsigned>(family.dimension);
  std::vector<JointEigenspace> current;
  if (family.dimension > 0) current.push_back(std::move(whole));

  for (const auto& op : ops) {
    std::vector<JointEigenspace> next;
    for (auto& space : current) {
      Matrix a = linalg::restrict_to(F, op.matrix, space.basis);
      poly::Poly cp = linalg::charpoly(F, a);
      auto roots = poly::roots_in_field(F, cp);
      poly::Poly rest = cp;
      for (const auto& root : roots) {
        for (unsigned i = 0; i < root.multiplicity; ++i) rest = poly::divrem(F, rest, {F.neg(root.value), F.one()}).first;
      }
      if (poly::degree(rest) > 0) {
        auto degrees = nonsplit_degrees(F, rest);
        throw FieldTooSmall(enlarge_message("characteristic polynomial of " + to_string(op.op), F.degree(), degrees),
                            degrees);
      }
      for (const auto& root : roots) {
        Matrix shifted = linalg::shift(F, a, root.value);
        Matrix ker = linalg::kernel(F, shifted);
        bool semisimple = space.semisimple;
        if (ker.cols() < root.multiplicity) {
          semisimple = false;
          ker = linalg::kernel(F, linalg::pow(F, shifted, root.multiplicity));
        }
        JointEigenspace child;
        child.system = space.system;
        child.system.emplace_back(op.op, root.value);
        child.basis = linalg::mul(F, space.basis, ker);
        child.hecke_mult = static_cast<unsigned>(ker.cols());
        child.semisimple = semisimple;
        next.push_back(std::move(child));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [&](const JointEigenspace& a, const JointEigenspace& b) {
    for (std::size_t i = 0; i < a.system.size() && i < b.system.size(); ++i) {
      if (a.system[i].second != b.system[i].second) return a.system[i].second < b.system[i].second;
    }
    return a.system.size() < b.system.size();
  });
  for (const auto& s : current) out.semisimple = out.semisimple && s.semisimple;
  out.spaces = std::move(current);
  return out;
}

std::string format_eigensystem(const ExtField& F, const Eigensystem& system) {
  std::string out;
  for (const auto& [op, v] : system) {
    if (!out.empty()) out += ' ';
    out += std::to_string(op.ell) + ":" + std::to_string(op.k) + "=" + F.format(v);
  }
  return out;
}

std::vector<GaloisOrbit> galois_orbits(const ExtField& F, const std::vector<JointEigenspace>& spaces,
                                       const DirichletChar& eta) {
  const auto step = static_cast<unsigned>(eta.galois_orbit().size());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < spaces.size(); ++i) index.emplace(format_eigensystem(F, spaces[i].system), i);
  std::vector<bool> seen(spaces.size(), false);
  std::vector<GaloisOrbit> out;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (seen[i]) continue;
    GaloisOrbit orbit;
    std::vector<std::string> keys;
    Eigensystem cur = spaces[i].system;
    for (;;) {
      std::string key = format_eigensystem(F, cur);
      if (!keys.empty() && key == keys.front()) break;
      keys.push_back(key);
      for (auto& [op, v] : cur) v = F.frobenius(v, step);
    }
    orbit.galois_mult = static_cast<unsigned>(keys.size());
    std::string best;
    for (const auto& key : keys) {
      auto it = index.find(key);
      if (it == index.end()) {
        orbit.complete = false;
        continue;
      }
      if (!seen[it->second]) {
        seen[it->second] = true;
        orbit.members.push_back(it->second);
      }
      if (best.empty() || key < best) {
        best = key;
        orbit.representative = it->second;
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

OperatorFile read_operator_file(std::istream& is) {
  std::optional<ExtField> field;
  std::size_t dimension = 0;
  std::vector<LabeledOperator> ops;
  std::vector<JointEigenspace> systems;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("operator file line " + std::to_string(lineno) + ": " + why);
  };
  auto next_line = [&](std::string& l) {
    while (std::getline(is, l)) {
      ++lineno;
      if (!l.empty() && l[0] != '#') return true;
    }
    return false;
  };
  while (next_line(line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "field") {
      std::string desc;
      ls >> desc;
      field = ExtField::parse(desc);
    } else if (key == "dim") {
      if (!(ls >> dimension)) throw fail("bad dimension");
    } else if (key == "op") {
      if (!field) throw fail("operator before field line");
      LabeledOperator lo;
      if (!(ls >> lo.op.ell >> lo.op.k)) throw fail("expected 'op l k'");
      const std::size_t d = dimension;
      lo.matrix = Matrix(d, d, field->zero());
      for (std::size_t i = 0; i < d; ++i) {
        if (!next_line(line)) throw fail("matrix for " + to_string(lo.op) + " is truncated");
        std::istringstream rs(line);
        std::string tok;
        for (std::size_t j = 0; j < d; ++j) {
          if (!(rs >> tok)) throw fail("row " + std::to_string(i) + " of " + to_string(lo.op) + " is short");
          lo.matrix.at(i, j) = field->parse_element(tok);
        }
        if (rs >> tok) throw fail("row " + std::to_string(i) + " of " + to_string(lo.op) + " is long");
      }
      ops.push_back(std::move(lo));
    } else if (key == "system") {
      if (!field) throw fail("system before field line");
      JointEigenspace s;
      if (!(ls >> s.hecke_mult) || s.hecke_mult == 0) throw fail("bad multiplicity");
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw fail("expected l:k=value");
        s.system.emplace_back(parse_hecke_op(tok.substr(0, eq)), field->parse_element(tok.substr(eq + 1)));
      }
      std::sort(s.system.begin(), s.system.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      systems.push_back(std::move(s));
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (!field) throw std::invalid_argument("operator file lacks a field line");
  if (!systems.empty() && !ops.empty()) throw std::invalid_argument("operator file mixes matrices and eigensystems");
  const bool diagonalised = !systems.empty();
  return OperatorFile{*field, OperatorFamily{*field, dimension, std::move(ops)}, std::move(systems), diagonalised};
}

void write_operator_file(std::ostream& os, const OperatorFamily& family) {
  const ExtField& F = family.field;
  os << "field " << F.descriptor() << '\n' << "dim " << family.dimension << '\n';
  for (const auto& op : family.ops) {
    os << "op " << op.op.ell << ' ' << op.op.k << '\n';
    for (std::size_t i = 0; i < op.matrix.rows(); ++i) {
      for (std::size_t j = 0; j < op.matrix.cols(); ++j) os << (j ? " " : "") << F.format(op.matrix.at(i, j));
      os << '\n';
    }
  }
}

}  // namespace hgf
