#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hgf/characters.hpp"
#include "hgf/eigen.hpp"
#include "hgf/galois_reps.hpp"
#include "hgf/hecke_data.hpp"
#include "hgf/newforms.hpp"

namespace hgf {

// A candidate by indices: characters into the context's character group, forms into its
// reduced newform list.
struct Candidate {
  struct Part {
    std::uint32_t chi = 0;
    unsigned w = 0;
    std::int32_t form = -1;
  };
  std::array<Part, 4> parts{};
  unsigned size = 0;
};

struct FinderOptions {
  bool det_prefilter = true;
};

// Reductions in F of every stored newform of level dividing N and weight that can occur
// in a rep with Hodge-Tate numbers [0,1,2,g+3]. Forms without a root in F are skipped
// and named in skipped.
std::vector<std::shared_ptr<const ReducedNewform>> reduce_for_context(const NewformStore& store, std::uint64_t N, unsigned g,
                                                                      const ExtField& F, std::vector<std::string>* skipped = nullptr);

class FinderContext {
 public:
  FinderContext(unsigned g, CharacterGroup chars, DirichletChar eta, std::vector<std::shared_ptr<const ReducedNewform>> forms,
                std::uint32_t prime_bound = 11);

  std::uint64_t level() const { return chars_.modulus(); }
  unsigned g() const { return g_; }
  const ExtField& field() const { return chars_.field(); }
  const CharacterGroup& chars() const { return chars_; }
  const DirichletChar& eta() const { return eta_; }
  const std::vector<std::shared_ptr<const ReducedNewform>>& forms() const { return forms_; }
  // Primes up to the bound not dividing pN.
  const std::vector<std::uint32_t>& probe_primes() const { return primes_; }

  std::vector<Candidate> enumerate_candidates(const FinderOptions& options = {}) const;
  GaloisRep instantiate(const Candidate& c) const;
  // Coefficients of det(1 - rho(Frob_l) X), from cached character and form values.
  std::array<FieldElement, 5> charpoly(const Candidate& c, std::uint32_t ell) const;
  // Trace of rho(Frob_l), equal to a(l,1).
  FieldElement trace(const Candidate& c, std::uint32_t ell) const;
  std::string key(const Candidate& c) const;

 private:
  std::size_t prime_index(std::uint32_t ell) const;
  const FieldElement& alpha(std::uint32_t chi, std::size_t li, unsigned w) const;

  unsigned g_;
  CharacterGroup chars_;
  DirichletChar eta_;
  std::vector<std::shared_ptr<const ReducedNewform>> forms_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<FieldElement>> chi_at_;    // [chi][prime]
  std::vector<std::vector<FieldElement>> ell_pow_;   // [prime][w], w up to 2(g+3)+g+3
  std::vector<std::vector<FieldElement>> form_ap_;   // [form][prime]
  std::vector<std::vector<FieldElement>> form_det_;  // [form][prime] = eps_f(l) l^(k-1)
  std::vector<bool> chi_odd_;
  std::vector<std::uint32_t> mul_table_;             // index of chi_a * chi_b
  std::uint32_t eta_index_ = 0;
  std::vector<std::uint32_t> form_neb_;              // [form] index of the nebentype mod N
  std::vector<FieldElement> alpha_;                  // chi(l) l^w, indexed [chi][prime][w]
};

struct Match {
  Candidate candidate;
  std::string rep;  // describe() text
  PatternType type = PatternType::Other;
  std::size_t twist_class = 0;
};

struct MatchReport {
  std::vector<Match> matches;
  std::size_t twist_classes = 0;
  bool unique = false;
  std::vector<std::string> warnings;
  std::string caveat;
};

extern const char* const kAttachmentCaveat;

// Candidates agreeing with every supplied a(l,k). Matches with equal Frobenius polynomials
// at all probe primes share a twist class; unique means exactly one class.
MatchReport match(const FinderContext& ctx, const std::vector<Candidate>& candidates, const HeckeData& data);

// The eigenvalues rho predicts for the operators in ops.
HeckeData synthesize(const FinderContext& ctx, const Candidate& c, const OperatorSet& ops);

// Orbit size of an eigensystem under the Frobenius powers fixing eta.
unsigned galois_orbit_size(const ExtField& F, const Eigensystem& system, const DirichletChar& eta);

}  // namespace hgf
