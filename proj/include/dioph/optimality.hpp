#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dioph/approx.hpp"
#include "dioph/approx_function.hpp"
#include "dioph/growth.hpp"
#include "dioph/q_sequence.hpp"

namespace dioph {

ApproxFunction make_psi_Q(QSequence seq);

struct PsiQWitness {
  WitnessReport witness;
  std::uint64_t n = 0;
  Integer big_q;       // Q_n
  Rational bound;      // 1/(q Q_n), with q the denominator of the witness
  Rational psi_value;  // psi_Q at the witness height
};

// r = p/q with q <= Q_n and |x - r| <= 1/(q Q_n) <= psi_Q(q), for x in [0, 1].
PsiQWitness psiQ_witness(const Rational& x, const QSequence& seq, std::uint64_t n,
                         std::uint64_t max_scan = std::uint64_t{1} << 24);

struct CounterexampleRow {
  Integer q;
  std::string source;  // which sequence term q is, e.g. "Q0_2"
  Rational psi0;
  Rational psi1;
  Rational phi;        // min(psi0, psi1)
  Rational phi_q3;     // phi * q^3
};

// Rows for every q in Q^(0) and Q^(1) up to index n_max, sorted by q.
// phi(q) q^3 > 1 anywhere raises InvariantViolation.
std::vector<CounterexampleRow> strong_optimality_counterexample(std::uint64_t n_max, SizeCap cap = {});

struct RefutationBand {
  Integer lo;
  Integer hi;
  CertificateReport psi_certificate;
  CertificateReport phi_certificate;
  Rational min_growth;   // lower bound for min over the band of psi/phi
  Rational lower_bound;  // eps * min_growth
};

struct RefutationReport {
  Rational eps;
  std::vector<RefutationBand> bands;
  bool bounds_nondecreasing = true;
};

// Checks, band by band, that the phi-ratios of x are at least
// eps * min psi/phi, where eps is a lower bound for the psi-ratios.
RefutationReport refute_candidate(const SpaceDescriptor& space, const SparseVector& x, const Rational& eps,
                                  const ApproxFunction& psi, const ApproxFunction& phi,
                                  const std::vector<std::pair<Integer, Integer>>& bands);

struct CoverReport {
  std::uint64_t n = 0;
  std::vector<Rational> points;  // reduced fractions in [0, 1], height <= max_height
  Integer max_height;            // least height whose balls cover [0, 1]
  bool verified = false;
};

struct ImprovedValue {
  Integer q;
  Rational psi;
  Rational phi;
  std::uint64_t m = 0;  // least m with Q_m >= q
};

struct ImprovementReport {
  std::vector<CoverReport> covers;  // m = 1..n
  std::vector<ImprovedValue> table; // q = 1..Q_n
};

// Closed balls B(r, psi(H(r))/m) around the fractions of [0, 1] with
// height <= max_height, in increasing order: do they cover [0, 1]?
bool balls_cover_unit_interval(const std::vector<Rational>& points, const ApproxFunction& psi, std::uint64_t m);

// For m = 1..n finds the least Q_m such that the balls of radius psi(q)/m
// around fractions of height <= Q_m cover [0, 1], and tabulates
// phi(q) = psi(q) / min{m : Q_m >= q}.
ImprovementReport improve_dirichlet_interval(const ApproxFunction& psi, std::uint64_t n);

}  // namespace dioph
