#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hgf/characters.hpp"
#include "hgf/hecke_data.hpp"
#include "hgf/matrix.hpp"

namespace hgf {

struct LabeledOperator {
  HeckeOp op;
  Matrix matrix;
};

struct OperatorFamily {
  ExtField field;
  std::size_t dimension = 0;
  std::vector<LabeledOperator> ops;
};

using Eigensystem = std::vector<std::pair<HeckeOp, FieldElement>>;

struct JointEigenspace {
  Eigensystem system;
  Matrix basis;  // columns span the (generalized) eigenspace
  unsigned hecke_mult = 0;
  bool semisimple = true;
};

struct Decomposition {
  std::vector<JointEigenspace> spaces;
  bool semisimple = true;
};

struct GaloisOrbit {
  std::vector<std::size_t> members;  // indices into the space list
  std::size_t representative = 0;
  unsigned galois_mult = 0;
  bool complete = true;  // every conjugate eigensystem occurs in the list
};

std::vector<std::pair<HeckeOp, HeckeOp>> check_commuting(const OperatorFamily& family);
// Refines the whole space by each operator in label order. Eigenvalues outside the field
// raise FieldTooSmall. Repeated eigenvalues with a short eigenspace keep the generalized
// eigenspace and clear the semisimple flag.
Decomposition joint_eigenspaces(const OperatorFamily& family);
std::vector<GaloisOrbit> galois_orbits(const ExtField& F, const std::vector<JointEigenspace>& spaces,
                                       const DirichletChar& eta);
std::string format_eigensystem(const ExtField& F, const Eigensystem& system);

// Operator file:
//   field <descriptor>
//   dim <d>
//   op <l> <k>        followed by d rows of d elements
// or, for pre-diagonalised input,
//   field <descriptor>
//   system <mult> <l>:<k>=<value> ...
struct OperatorFile {
  ExtField field;
  OperatorFamily family;
  std::vector<JointEigenspace> systems;
  bool diagonalised = false;
};

OperatorFile read_operator_file(std::istream& is);
void write_operator_file(std::ostream& os, const OperatorFamily& family);

}  // namespace hgf
