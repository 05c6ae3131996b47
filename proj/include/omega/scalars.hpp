#pragma once

#include <vector>

#include "omega/fodc.hpp"

namespace omega {

/// f_u: Omega^1_{A,u} -> Omega^1_{B,u}, the restriction of f (x) f to the
/// kernels of the multiplications. It is an A-bimodule map into the
/// restriction of Omega^1_{B,u} along f.
Mat universal_morphism(const AlgMap& f, const UniversalCalculus& source, const UniversalCalculus& target);

struct Pushforward {
  QuotientCalculus result;  // quotient of Omega^1_{B,u}
  Mat relations;            // B-sub-bimodule generated by f_u(ker(Omega^1_{A,u} ->> c))
};

/// F_! c: the pushout of Omega^1_{B,u} <- extend(Omega^1_{A,u}) ->> extend(c),
/// realized as Omega^1_{B,u} modulo the B-bimodule generated by f_u of the
/// relations of c.
Pushforward calc_pushforward(const AlgMap& f, const FirstOrderCalculus& c);

/// The same relation module, computed literally: extend the relation module N
/// of c along f, push it through f_u-hat: B (x)_A N (x)_A B -> Omega^1_{B,u}
/// and take the image. Used to cross-check calc_pushforward.
Mat pushforward_relations_via_extension(const AlgMap& f, const FirstOrderCalculus& c);

struct Pullback {
  QuotientCalculus result;  // quotient of Omega^1_{A,u}
  Mat preimage;             // P = f_u^{-1}(ker(Omega^1_{B,u} ->> t))
  bool kernel_matches;      // P == ker(Omega^1_{A,u} ->> result)
};

/// F^* t: pull the relation module of t back along f_u and take the quotient.
Pullback calc_pullback(const AlgMap& f, const FirstOrderCalculus& t);

struct AdjunctionPair {
  std::size_t source_index;      // into cs
  std::size_t target_index;      // into ts
  bool from_pushforward = false;  // F_! c -> t exists
  bool into_pullback = false;     // c -> F^* t exists
};

struct AdjunctionReport {
  std::vector<AdjunctionPair> pairs;
  [[nodiscard]] std::size_t mismatches() const;
  [[nodiscard]] bool agree() const { return mismatches() == 0; }
};

/// Compares existence of F_! c -> t against c -> F^* t on every pair. Pairs
/// are independent and evaluated in parallel.
AdjunctionReport verify_poset_adjunction(const AlgMap& f, const std::vector<FirstOrderCalculus>& cs,
                                         const std::vector<FirstOrderCalculus>& ts);

/// An algebra map h = (base, derivation): A -> B (+) N into a square-zero
/// extension, with N a B-bimodule.
struct SquareZeroProbe {
  AlgMap base;     // h1: A -> B
  Bimodule module; // N over B
  Mat derivation;  // h2: A -> N
};

/// Checks that (1, d_u): A -> A (+) Omega^1_u is an algebra map, then for
/// each probe that g = (h1.h2) o inclusion is a bimodule map and both
/// round trips g -> h -> g and h -> g -> h are identities.
Report square_zero_unit_check(const Algebra& a, const std::vector<SquareZeroProbe>& probes = {});

/// Initiality of the universal calculus and terminality of the zero calculus
/// within the family: a morphism exists in each case and is unique.
Report calc1_category_adjoints_check(const Algebra& a, const std::vector<FirstOrderCalculus>& family);

}  // namespace omega
