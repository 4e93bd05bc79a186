#pragma once

#include <string>
#include <vector>

#include "rootcomp/mult_table.hpp"
#include "rootcomp/weight.hpp"

namespace rootcomp {

enum class DecompositionMethod { racah, char_oracle };

std::string method_name(DecompositionMethod m);

// Tensor product component multiplicities of V(lambda) (x) V(mu) up to
// delta-depth `depth` below lambda+mu. Entries cover every dominant candidate
// in the window, including multiplicity-zero ones, in deterministic
// (delta-degree, height, lex) order.
struct DecompositionReport {
  Weight lambda;
  Weight mu;
  long long depth = 0;
  DecompositionMethod method = DecompositionMethod::racah;

  struct Component {
    Weight nu;
    long long mult = 0;
  };
  std::vector<Component> components;

  long long mult_of(const Weight& nu) const;  // 0 when nu is not in the window
  bool same_entries(const DecompositionReport& other) const;
};

// Alternating Weyl-orbit sum (dot action w*nu = w(nu+rho)-rho) over the
// weights of V(mu). The orbit is walked by strict descent from nu+rho with a
// computed delta-depth bound; the needed V(mu) table depth is derived from
// the norm bound, never guessed.
DecompositionReport tensor_mults(std::shared_ptr<const CartanData> cd, const Weight& lambda,
                                 const Weight& mu, long long depth, int parallelism = 1);

// Independent evaluation: coefficient extraction from the truncated character
// product followed by a triangular solve over the dominant candidates.
DecompositionReport tensor_mults_oracle(std::shared_ptr<const CartanData> cd,
                                        const Weight& lambda, const Weight& mu,
                                        long long depth);

// Single multiplicity m_{lambda,mu}^{nu} by the Racah route. nu must be
// dominant integral of level level(lambda)+level(mu); returns 0 when
// lambda+mu-nu is not a nonnegative root-lattice combination.
long long tensor_mult_single(std::shared_ptr<const CartanData> cd, const Weight& lambda,
                             const Weight& mu, const Weight& nu);

// m_{lambda,mu}^{nu} <= m_{lambda+lambda',mu+mu'}^{nu+lambda'+mu'} ?
bool additivity_check(std::shared_ptr<const CartanData> cd, const Weight& lambda,
                      const Weight& lambda_p, const Weight& mu, const Weight& mu_p,
                      const Weight& nu, long long depth);

}  // namespace rootcomp
