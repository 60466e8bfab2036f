#include "bicrit/reductions.hpp"

#include <algorithm>

#include "bicrit/classic.hpp"

namespace bicrit {

std::string_view to_string(EncodingFault fault) {
  switch (fault) {
    case EncodingFault::ShapeMismatch: return "ShapeMismatch";
    case EncodingFault::ChainViolation: return "ChainViolation";
    case EncodingFault::PrefixSumMismatch: return "PrefixSumMismatch";
    case EncodingFault::StarMainMismatch: return "StarMainMismatch";
    case EncodingFault::SumMismatch: return "SumMismatch";
  }
  return "?";
}

StrongCandidate StrongCandidate::uniform(int n, int m, Choice c) {
  StrongCandidate out;
  out.star.assign(n, std::vector<Choice>(m, c));
  out.main = out.star;
  return out;
}

WeakCandidate WeakCandidate::uniform(int n, Choice c) {
  return {std::vector<Choice>(n, c), std::vector<Choice>(n, c)};
}

namespace {

Int sum_of(const std::vector<Int>& a) {
  Int s;
  for (const Int& x : a) s += x;
  return s;
}

void require_positive(const std::vector<Int>& a) {
  if (a.empty()) throw PreconditionError("need at least one integer");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < 1) throw PreconditionError("a_" + std::to_string(k + 1) + " = " + a[k].to_string() + " is not positive");
}

int id_of(const std::map<Tag, int>& index, TagKind kind, int i, int j = 0) {
  auto it = index.find(Tag{kind, i, j});
  if (it == index.end()) throw PreconditionError("gadget metadata lacks " + label(Tag{kind, i, j}));
  return it->second;
}

std::string list(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + "}";
}

}  // namespace

// ---- 3-Partition gadget -------------------------------------------------

Instance gen_strong(const std::vector<Int>& a, int m, bool strict) {
  require_positive(a);
  if (m < 1) throw PreconditionError("m must be positive");
  const int n = static_cast<int>(a.size());
  if (strict && n != 3 * m)
    throw PreconditionError("strict mode needs n = 3m, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  const Int total = sum_of(a);
  if (total % Int(m) != 0)
    throw DivisibilityError("m = " + std::to_string(m) + " does not divide sum(a) = " + total.to_string());

  StrongMeta meta;
  meta.a = a;
  meta.n = n;
  meta.m = m;
  meta.strict = strict;
  const Int t = total / Int(m);
  const Int nn(n);
  const Int mm(m);
  const Int alpha = Int(10) * nn * nn * t;
  const Int a2 = alpha * alpha;
  const Int a3 = a2 * alpha;
  const Int tenth = a2 / 10;  // 10 | alpha, so this is exact
  meta.t = t;
  meta.alpha = alpha;
  meta.delta = Int(4) * nn * a3 + Int(2) * a2 + (Int(2) * mm + 1) * t * alpha + mm * t;
  meta.Delta.push_back(Int(0));
  for (int j = 1; j <= m + 1; ++j) {
    const Int jj(j);
    meta.delta_star.push_back(Int(2) * nn * a3 + a2 + (Int(2) * mm - Int(2) * jj + 1) * t * alpha + (mm - jj) * t);
    if (j <= m) meta.Delta.push_back(meta.Delta.back() + meta.delta);
  }
  for (int j = 1; j <= m + 1; ++j) meta.Delta_star.push_back(meta.Delta[j - 1] + meta.delta_star[j - 1]);
  meta.ell = Int(2) * nn * a3 + a2 + tenth;
  meta.k = Int(2) * mm * nn;

  Instance instance;
  auto add = [&](Int p, Int d, TagKind kind, int i, int j) {
    const int id = static_cast<int>(instance.jobs.size());
    Tag tag{kind, i, j};
    instance.jobs.push_back({id, p, d, tag});
    meta.job_index.emplace(tag, id);
  };
  auto star_due = [&](int i, int j) { return meta.Delta[j - 1] + Int(2 * i) * a3 + tenth; };

  add(mm * t * alpha, mm * t * alpha, TagKind::FillerZero, 0, 0);
  for (int i = 1; i <= n; ++i) add(a3, star_due(i, 1), TagKind::FillerFirst, i, 0);
  for (int j = 1; j <= m; ++j) {
    const Int jj(j);
    const Int& ds = meta.Delta_star[j - 1];
    for (int i = 1; i <= n; ++i) {
      const Int& ai = a[i - 1];
      add(a3, star_due(i, j), TagKind::NumberStar, i, j);
      add(a3 + ai, meta.Delta[j - 1] + Int(2 * i - 1) * a3 + tenth, TagKind::NegNumberStar, i, j);
    }
    add(a2 + (mm - jj) * t * alpha, ds, TagKind::DelimiterStar, 0, j);
    for (int i = 1; i <= n; ++i) {
      const Int& ai = a[i - 1];
      add(a3 + ai * alpha, ds + Int(2 * i) * a3 + tenth, TagKind::Number, i, j);
      add(a3, ds + Int(2 * i - 1) * a3 + tenth, TagKind::NegNumber, i, j);
    }
    add(a2 + jj * t * alpha, meta.Delta[j], TagKind::Delimiter, 0, j);
  }
  for (int i = 1; i <= n; ++i) add(a3, meta.Delta[m] + Int(2 * i) * a3 + tenth, TagKind::FillerLast, i, 0);

  instance.variant = Variant::constraint_decision(meta.ell, meta.k);
  instance.meta = std::move(meta);
  return instance;
}

const StrongMeta& strong_meta(const Instance& instance) {
  if (auto* meta = std::get_if<StrongMeta>(&instance.meta)) return *meta;
  throw PreconditionError("instance does not carry 3-Partition gadget metadata");
}

StrongCandidate strong_candidate_from_partition(const StrongMeta& meta, const std::vector<IndexSet>& groups) {
  if (static_cast<int>(groups.size()) > meta.m)
    throw IndexError("got " + std::to_string(groups.size()) + " groups for m = " + std::to_string(meta.m));
  StrongCandidate c = StrongCandidate::uniform(meta.n, meta.m, Choice::Neg);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int i : groups[g]) {
      if (i < 1 || i > meta.n) throw IndexError("index " + std::to_string(i) + " outside 1.." + std::to_string(meta.n));
      for (int j = static_cast<int>(g); j < meta.m; ++j) {
        c.star[i - 1][j] = Choice::Pos;
        c.main[i - 1][j] = Choice::Pos;
      }
    }
  }
  return c;
}

std::variant<std::vector<IndexSet>, InvalidEncoding> strong_extract_partition(const StrongMeta& meta,
                                                                              const StrongCandidate& c) {
  const int n = meta.n;
  const int m = meta.m;
  bool shape_ok = c.n() == n && static_cast<int>(c.main.size()) == n;
  for (int i = 0; shape_ok && i < n; ++i)
    shape_ok = static_cast<int>(c.star[i].size()) == m && static_cast<int>(c.main[i].size()) == m;
  if (!shape_ok) return InvalidEncoding{EncodingFault::ShapeMismatch, "candidate does not match n and m"};

  // Walk the chain I*_1, I_1, I*_2, ..., I_m; each set must contain the previous.
  for (int i = 0; i < n; ++i) {
    Choice prev = Choice::Neg;
    for (int pos = 0; pos < 2 * m; ++pos) {
      const int j = pos / 2;
      const Choice cur = pos % 2 == 0 ? c.star[i][j] : c.main[i][j];
      if (prev == Choice::Pos && cur == Choice::Neg) {
        std::string what = pos % 2 == 0 ? "I_" + std::to_string(j) + " is not contained in I*_" + std::to_string(j + 1)
                                         : "I*_" + std::to_string(j + 1) + " is not contained in I_" +
                                               std::to_string(j + 1);
        return InvalidEncoding{EncodingFault::ChainViolation, what + " (index " + std::to_string(i + 1) + ")"};
      }
      prev = cur;
    }
  }

  std::vector<IndexSet> groups(m);
  std::vector<char> taken(n, 0);
  for (int j = 1; j <= m; ++j) {
    Int sum;
    for (int i = 1; i <= n; ++i) {
      if (c.star[i - 1][j - 1] != Choice::Pos) continue;
      sum += meta.a[i - 1];
      if (!taken[i - 1]) {
        taken[i - 1] = 1;
        groups[j - 1].push_back(i);
      }
    }
    if (sum != Int(j) * meta.t)
      return InvalidEncoding{EncodingFault::PrefixSumMismatch, "sum over I*_" + std::to_string(j) + " is " +
                                                                   sum.to_string() + ", expected " +
                                                                   (Int(j) * meta.t).to_string()};
  }
  return groups;
}

std::vector<int> strong_early_ids(const StrongMeta& meta, const StrongCandidate& c) {
  if (c.n() != meta.n || c.m() != meta.m) throw PreconditionError("candidate does not match the gadget");
  std::vector<int> ids;
  ids.push_back(id_of(meta.job_index, TagKind::FillerZero, 0));
  for (int i = 1; i <= meta.n; ++i) {
    ids.push_back(id_of(meta.job_index, TagKind::FillerFirst, i));
    ids.push_back(id_of(meta.job_index, TagKind::FillerLast, i));
  }
  for (int j = 1; j <= meta.m; ++j) {
    ids.push_back(id_of(meta.job_index, TagKind::DelimiterStar, 0, j));
    ids.push_back(id_of(meta.job_index, TagKind::Delimiter, 0, j));
    for (int i = 1; i <= meta.n; ++i) {
      const bool star = c.star[i - 1][j - 1] == Choice::Pos;
      const bool main = c.main[i - 1][j - 1] == Choice::Pos;
      ids.push_back(id_of(meta.job_index, star ? TagKind::NumberStar : TagKind::NegNumberStar, i, j));
      ids.push_back(id_of(meta.job_index, main ? TagKind::Number : TagKind::NegNumber, i, j));
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Schedule strong_candidate_schedule(const Instance& instance, const StrongCandidate& candidate) {
  const StrongMeta& meta = strong_meta(instance);
  return canonical_schedule(instance, strong_early_ids(meta, candidate), meta.ell);
}

bool strong_choices_consistent(const StrongCandidate& c) {
  const int m = c.m();
  for (int i = 0; i < c.n(); ++i) {
    for (int j = 0; j < m; ++j) {
      if (c.star[i][j] == Choice::Pos && c.main[i][j] == Choice::Neg) return false;
      if (j + 1 < m && c.main[i][j] == Choice::Pos && c.star[i][j + 1] == Choice::Neg) return false;
    }
  }
  return true;
}

StrongCandidate strong_candidate_from_switches(int m, const std::vector<int>& switches) {
  const int n = static_cast<int>(switches.size());
  StrongCandidate c = StrongCandidate::uniform(n, m, Choice::Neg);
  for (int i = 0; i < n; ++i) {
    if (switches[i] < 0 || switches[i] > 2 * m) throw IndexError("switch position out of range");
    for (int pos = switches[i]; pos < 2 * m; ++pos) (pos % 2 == 0 ? c.star : c.main)[i][pos / 2] = Choice::Pos;
  }
  return c;
}

// ---- Partition gadget ---------------------------------------------------

Instance gen_weak(const std::vector<Int>& a) {
  require_positive(a);
  const Int total = sum_of(a);
  if (total % 2 != 0) throw ParityError("sum(a) = " + total.to_string() + " is odd");
  const int n = static_cast<int>(a.size());
  const Int nn(n);

  WeakMeta meta;
  meta.a = a;
  meta.n = n;
  meta.t = total / 2;
  const Int& t = meta.t;
  meta.Z = Int(2) * t + 1;
  meta.Y = (Int(2) * t + 1) * meta.Z;
  meta.X = nn * pow(Int(2), static_cast<unsigned>(n + 2)) * meta.Y;
  meta.W = Int(2) * nn * nn * meta.X;
  meta.filler_multiplicity = Int(2) * meta.W / meta.X;
  const Int& X = meta.X;
  const Int& Y = meta.Y;
  const Int& Z = meta.Z;
  const Int& W = meta.W;

  auto tri = [](int i) { return Int(i) * Int(i + 1) / 2; };  // sum_{i0 <= i} i0
  auto pow_sum = [&](int i) { return pow(Int(2), static_cast<unsigned>(i + 1)) - 2; };  // sum_{i0 <= i} 2^i0
  meta.D1_star = nn * W + tri(n) * X + t;
  meta.ell = nn * W + tri(n) * X + pow_sum(n) * Y + t * Z + t;
  meta.k = Int(2) * nn;

  Instance instance;
  auto add = [&](Int p, Int d, Tag tag, bool indexed) {
    const int id = static_cast<int>(instance.jobs.size());
    instance.jobs.push_back({id, p, d, tag});
    if (indexed) meta.job_index.emplace(tag, id);
    return id;
  };
  const std::int64_t copies = meta.filler_multiplicity.to_int64();
  meta.filler_ids.resize(n);
  for (int i = 1; i <= n; ++i) {
    const Int ii(i);
    const Int star_due = ii * W + tri(i) * X + t;
    add(ii * X, star_due, {TagKind::WeakStar, i, 0}, true);
    add(ii * X + a[i - 1], (ii - 1) * W + tri(i) * X + t, {TagKind::WeakNegStar, i, 0}, true);
    for (std::int64_t c = 0; c < copies; ++c)
      meta.filler_ids[i - 1].push_back(add(X / 2, star_due, {TagKind::WeakFiller, i, 0}, false));
  }
  for (int i = 1; i <= n; ++i) {
    const Int ii(i);
    const Int tail = pow_sum(i) * Y + t * Z + t;
    const Int p2 = pow(Int(2), static_cast<unsigned>(i)) * Y;
    add(W + p2 + a[i - 1] * Z, meta.D1_star + ii * W + tri(i) * X + tail, {TagKind::WeakMain, i, 0}, true);
    add(W + p2, meta.D1_star + ii * W + tri(i - 1) * X + tail, {TagKind::WeakNegMain, i, 0}, true);
  }

  instance.variant = Variant::lex_u_then_tmax();
  instance.variant.ell = meta.ell;
  instance.variant.k = meta.k;
  instance.meta = std::move(meta);
  return instance;
}

const WeakMeta& weak_meta(const Instance& instance) {
  if (auto* meta = std::get_if<WeakMeta>(&instance.meta)) return *meta;
  throw PreconditionError("instance does not carry Partition gadget metadata");
}

WeakCandidate weak_candidate_from_subset(const WeakMeta& meta, const IndexSet& s) {
  WeakCandidate c = WeakCandidate::uniform(meta.n, Choice::Neg);
  for (int i : s) {
    if (i < 1 || i > meta.n) throw IndexError("index " + std::to_string(i) + " outside 1.." + std::to_string(meta.n));
    c.star[i - 1] = Choice::Pos;
    c.main[i - 1] = Choice::Pos;
  }
  return c;
}

std::variant<IndexSet, InvalidEncoding> weak_extract_subset(const WeakMeta& meta, const WeakCandidate& c) {
  if (c.n() != meta.n || static_cast<int>(c.main.size()) != meta.n)
    return InvalidEncoding{EncodingFault::ShapeMismatch, "candidate does not match n"};
  IndexSet star;
  IndexSet main;
  for (int i = 1; i <= meta.n; ++i) {
    if (c.star[i - 1] == Choice::Pos) star.push_back(i);
    if (c.main[i - 1] == Choice::Pos) main.push_back(i);
  }
  if (star != main) return InvalidEncoding{EncodingFault::StarMainMismatch, "S* = " + list(star) + ", S = " + list(main)};
  Int sum;
  for (int i : star) sum += meta.a[i - 1];
  if (sum != meta.t)
    return InvalidEncoding{EncodingFault::SumMismatch, "sum over S* is " + sum.to_string() + ", t = " + meta.t.to_string()};
  return star;
}

std::vector<int> weak_early_ids(const WeakMeta& meta, const WeakCandidate& c) {
  if (c.n() != meta.n || static_cast<int>(c.main.size()) != meta.n)
    throw PreconditionError("candidate does not match the gadget");
  std::vector<int> ids;
  for (int i = 1; i <= meta.n; ++i) {
    ids.push_back(id_of(meta.job_index, c.star[i - 1] == Choice::Pos ? TagKind::WeakStar : TagKind::WeakNegStar, i));
    ids.push_back(id_of(meta.job_index, c.main[i - 1] == Choice::Pos ? TagKind::WeakMain : TagKind::WeakNegMain, i));
    ids.insert(ids.end(), meta.filler_ids[i - 1].begin(), meta.filler_ids[i - 1].end());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Schedule weak_candidate_schedule(const Instance& instance, const WeakCandidate& candidate) {
  const WeakMeta& meta = weak_meta(instance);
  return canonical_schedule(instance, weak_early_ids(meta, candidate), meta.ell);
}

Schedule weak_phase_order(const WeakMeta& meta, const WeakCandidate& c) {
  if (c.n() != meta.n || static_cast<int>(c.main.size()) != meta.n)
    throw PreconditionError("candidate does not match the gadget");
  const auto& index = meta.job_index;
  auto star = [&](int i, bool chosen) {
    const bool pos = (c.star[i - 1] == Choice::Pos) == chosen;
    return id_of(index, pos ? TagKind::WeakStar : TagKind::WeakNegStar, i);
  };
  auto main = [&](int i, bool chosen) {
    const bool pos = (c.main[i - 1] == Choice::Pos) == chosen;
    return id_of(index, pos ? TagKind::WeakMain : TagKind::WeakNegMain, i);
  };
  Schedule s;
  for (int i = 1; i <= meta.n; ++i) {
    s.order.push_back(star(i, true));
    s.order.insert(s.order.end(), meta.filler_ids[i - 1].begin(), meta.filler_ids[i - 1].end());
  }
  for (int i = 1; i <= meta.n; ++i) {
    if (c.star[i - 1] == Choice::Pos) {
      s.order.push_back(star(i, false));
      s.order.push_back(main(i, true));
    } else {
      s.order.push_back(main(i, true));
      s.order.push_back(star(i, false));
    }
  }
  for (int i = 1; i <= meta.n; ++i) s.order.push_back(main(i, false));
  return s;
}

// ---- Lexicographic and weighted-sum gadgets -----------------------------

Instance gen_lex_gadget(const Instance& instance, Int ell) {
  const Int P = instance.total_proc();
  if (ell < 0) throw PreconditionError("ell = " + ell.to_string() + " is negative");
  if (ell >= P) throw PreconditionError("ell = " + ell.to_string() + " is not below P = " + P.to_string());
  int max_id = -1;
  for (const Job& job : instance.jobs) {
    if (job.due > P)
      throw PreconditionError("job " + std::to_string(job.id) + " has d = " + job.due.to_string() + " > P = " +
                              P.to_string());
    max_id = std::max(max_id, job.id);
  }
  Instance out;
  out.jobs = instance.jobs;
  const int star = max_id + 1;
  out.jobs.push_back({star, P, Int(2) * P - ell, {TagKind::GadgetStar, 0, 0}});
  out.variant = Variant::lex_tmax_then_u();
  out.meta = LexGadgetMeta{ell, P, star};
  return out;
}

Instance gen_apriori_scaled(const Instance& instance, Int weight) {
  if (weight < 1) throw PreconditionError("weight = " + weight.to_string() + " must be at least 1");
  const Int factor = Int(2) * Int(instance.size()) * weight;
  Instance out;
  out.jobs = instance.jobs;
  for (Job& job : out.jobs) {
    job.proc *= factor;
    job.due *= factor;
  }
  out.variant = Variant::weighted_sum(Int(1), weight);
  out.meta = AprioriMeta{weight, factor};
  return out;
}

}  // namespace bicrit
