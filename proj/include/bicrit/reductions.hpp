#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bicrit/model.hpp"
#include "bicrit/source.hpp"

namespace bicrit {

class DivisibilityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

enum class Choice : unsigned char { Neg, Pos };

// Candidate set of the 3-Partition gadget: star[i-1][j-1] == Pos selects
// J*_{i,j} (Neg selects ~J*_{i,j}), main[i-1][j-1] likewise for J_{i,j}.
// Fillers and delimiters are always included.
struct StrongCandidate {
  std::vector<std::vector<Choice>> star;
  std::vector<std::vector<Choice>> main;

  static StrongCandidate uniform(int n, int m, Choice c);
  int n() const { return static_cast<int>(star.size()); }
  int m() const { return star.empty() ? 0 : static_cast<int>(star.front().size()); }

  friend bool operator==(const StrongCandidate&, const StrongCandidate&) = default;
};

// Candidate set of the Partition gadget; every filler is included.
struct WeakCandidate {
  std::vector<Choice> star;  // Pos: J*_i, Neg: ~J*_i
  std::vector<Choice> main;  // Pos: J_i,  Neg: ~J_i

  static WeakCandidate uniform(int n, Choice c);
  int n() const { return static_cast<int>(star.size()); }

  friend bool operator==(const WeakCandidate&, const WeakCandidate&) = default;
};

enum class EncodingFault {
  ShapeMismatch,      // candidate dimensions differ from the gadget
  ChainViolation,     // I*_1 <= I_1 <= I*_2 <= ... <= I_m fails
  PrefixSumMismatch,  // sum over I*_j differs from j*t
  StarMainMismatch,   // S* != S
  SumMismatch,        // sum over S* differs from t
};

std::string_view to_string(EncodingFault fault);

struct InvalidEncoding {
  EncodingFault fault;
  std::string detail;
};

// ---- 3-Partition gadget -------------------------------------------------

// Builds the gadget for a_1..a_n and m groups. Job ids: F_0, F^1_1..F^1_n,
// then for j = 1..m the pairs (J*_{i,j}, ~J*_{i,j}) for i = 1..n, D*_j, the
// pairs (J_{i,j}, ~J_{i,j}), D_j, and finally F^m_1..F^m_n.
// Throws DivisibilityError if m does not divide sum(a), PreconditionError on
// a_i < 1, m < 1, or (with strict) n != 3m.
Instance gen_strong(const std::vector<Int>& a, int m, bool strict = false);

const StrongMeta& strong_meta(const Instance& instance);  // throws PreconditionError

// Star and main choices at (i, j) are Pos iff i lies in S_1 u ... u S_j.
StrongCandidate strong_candidate_from_partition(const StrongMeta& meta, const std::vector<IndexSet>& groups);

// (I*_1, I*_2 \ I*_1, ...) when the chain and prefix-sum conditions hold.
std::variant<std::vector<IndexSet>, InvalidEncoding> strong_extract_partition(const StrongMeta& meta,
                                                                              const StrongCandidate& candidate);

// Ids of the candidate set: all fillers and delimiters plus the chosen number jobs.
std::vector<int> strong_early_ids(const StrongMeta& meta, const StrongCandidate& candidate);

// Canonical schedule of the candidate set at the gadget's ell.
Schedule strong_candidate_schedule(const Instance& instance, const StrongCandidate& candidate);

// No (i, j) has star Pos with main Neg, and no (i, j < m) has main Pos with
// star Neg at (i, j + 1).
bool strong_choices_consistent(const StrongCandidate& candidate);

// Candidate whose choices along star_1, main_1, ..., star_m, main_m switch
// from Neg to Pos at position switches[i-1] (0..2m; 2m means all Neg).
StrongCandidate strong_candidate_from_switches(int m, const std::vector<int>& switches);

// ---- Partition gadget ---------------------------------------------------

// Builds the gadget for a_1..a_n. Job ids: for i = 1..n, J*_i, ~J*_i and the
// 2W/X fillers of group i; then for i = 1..n, J_i and ~J_i.
// Throws ParityError if sum(a) is odd, PreconditionError on a_i < 1.
Instance gen_weak(const std::vector<Int>& a);

const WeakMeta& weak_meta(const Instance& instance);  // throws PreconditionError

// star[i] = main[i] = Pos iff i in S.
WeakCandidate weak_candidate_from_subset(const WeakMeta& meta, const IndexSet& s);

// S* when S* == S and sum over S* equals t.
std::variant<IndexSet, InvalidEncoding> weak_extract_subset(const WeakMeta& meta, const WeakCandidate& candidate);

std::vector<int> weak_early_ids(const WeakMeta& meta, const WeakCandidate& candidate);

Schedule weak_candidate_schedule(const Instance& instance, const WeakCandidate& candidate);

// The three-phase listing of the candidate's schedule, built directly from
// the choices rather than from due dates.
Schedule weak_phase_order(const WeakMeta& meta, const WeakCandidate& candidate);

// ---- Lexicographic and weighted-sum gadgets -----------------------------

// Appends J* with p = P and d = 2P - ell, where P is the total processing time.
// Throws PreconditionError unless 0 <= ell < P and every d <= P.
Instance gen_lex_gadget(const Instance& instance, Int ell);

// Multiplies every p and d by 2n * weight; variant WeightedSum(1, weight).
Instance gen_apriori_scaled(const Instance& instance, Int weight);

}  // namespace bicrit
