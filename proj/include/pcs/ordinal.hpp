#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcs {

// Ordinal term: a sum of omega-powers kept in writing order (not necessarily
// CNF), plus the distinguished atom e0.  The empty sum is 0.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal zero() { return Ordinal(); }
  static Ordinal one() { return omega_pow(zero()); }
  static Ordinal omega() { return omega_pow(one()); }
  static Ordinal eps0() {
    Ordinal a;
    a.eps0_ = true;
    return a;
  }
  static Ordinal nat(int n);
  static Ordinal omega_pow(Ordinal exponent);
  // Concatenation of summand lists, in order.
  static Ordinal sum(const std::vector<Ordinal>& parts);

  bool is_eps0() const { return eps0_; }
  bool is_zero() const { return !eps0_ && exps_.empty(); }
  // Exponents of the summands, left to right.
  const std::vector<Ordinal>& exponents() const;

  bool operator==(const Ordinal&) const = default;

 private:
  bool eps0_ = false;
  std::vector<Ordinal> exps_;
};

enum class OrdKind { Zero, Successor, Limit };

OrdKind classify(const Ordinal& a);

// Unique CNF term with the same set-theoretic value.  Rejects e0.
Ordinal to_cnf(const Ordinal& a);

// Comparison of set-theoretic values; e0 is above every other term.
int ord_cmp(const Ordinal& a, const Ordinal& b);
bool ord_lt(const Ordinal& a, const Ordinal& b);

// Omega-tower Omega_0 = 1, Omega_{n+1} = omega^Omega_n.
Ordinal omega_tower(int n);

// Fundamental sequence member lambda_n of a limit term.
Ordinal fund_seq(const Ordinal& l, int64_t n);

struct HardyBudget {
  int64_t max_value = 1'000'000;
  int64_t max_steps = 10'000'000;
};

// One canonical Hardy step (alpha+1, n) -> (alpha, n+1) / (lambda, n) -> (lambda_n, n).
std::pair<Ordinal, int64_t> hardy_step(const Ordinal& a, int64_t n);

// Iterated canonical steps down to (0, m); returns m.
int64_t hardy_eval(const Ordinal& a, int64_t n, const HardyBudget& budget = {});

// Fast-growing hierarchy F_k = H^{omega^k}.
int64_t fgh_eval(const Ordinal& k, int64_t n, const HardyBudget& budget = {});

// Structural embedding of terms: summands map injectively and
// order-preservingly with recursively embedded exponents.  Rejects e0.
bool leqo(const Ordinal& a, const Ordinal& b);

// Natural (Hessenberg) sum and product; results in CNF.  Reject e0.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
Ordinal natural_product(const Ordinal& a, const Ordinal& b);

// Upper bound on the maximal order type of the configuration ordering for a
// machine with priority level d, m channels and q control states, together
// with the per-level word-order bounds o_{-1}..o_d used to derive it.
struct MaxOrderTypeBound {
  Ordinal bound;
  std::vector<Ordinal> levels;  // levels[i] bounds level i-1 words
};

MaxOrderTypeBound maxot_bounds(int d, int m, int q);

// Text form: 0, 1, w, w^a, a+b, e0, with *k for k-fold repetition.
Ordinal parse_ordinal(const std::string& text);
std::string ordinal_to_string(const Ordinal& a);

}  // namespace pcs
