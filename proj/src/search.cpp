#include "qoc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "qoc/error.hpp"
#include "qoc/orthogonality.hpp"

namespace qoc {

namespace {

// Lexicographic order on packed coordinate vectors (coordinate 0 = bit 0).
bool lex_less_u64(uint64_t a, uint64_t b) {
  uint64_t d = a ^ b;
  if (!d) return false;
  return ((a >> std::countr_zero(d)) & 1u) == 0;
}

struct WitnessLess {
  bool operator()(const SearchWitness& a, const SearchWitness& b) const {
    if (a.class_index != b.class_index) return a.class_index < b.class_index;
    return lex_less_u64(a.cobo_coords, b.cobo_coords);
  }
};

using WitnessSet = std::set<SearchWitness, WitnessLess>;

void bounded_insert(WitnessSet& set, const SearchWitness& w, std::size_t cap) {
  set.insert(w);
  if (set.size() > cap) set.erase(std::prev(set.end()));
}

struct FlipMask {
  int row;
  uint64_t mask;
};

// Shared, read-only description of one cohomology class coset.
struct ClassSetup {
  int n = 0;
  std::vector<uint64_t> rep_rows;           // bit j of row g: entry -1
  std::vector<std::vector<FlipMask>> masks;  // per coboundary basis vector
  BitVec rep_bits;                           // (n-1)^2 layout
};

ClassSetup make_class_setup(const CocycleSpace& space, int class_mask) {
  const int n = space.group()->n;
  ClassSetup cs;
  cs.n = n;
  cs.rep_bits = BitVec(std::size_t(n - 1) * (n - 1));
  for (int r = 0; r < space.dim_h2(); ++r)
    if ((class_mask >> r) & 1)
      cs.rep_bits ^= space.basis()[std::size_t(space.coboundary_dim() + r)];
  cs.rep_rows.assign(std::size_t(n), 0);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      if (cs.rep_bits.get(std::size_t(g - 1) * (n - 1) + (h - 1)))
        cs.rep_rows[std::size_t(g)] |= uint64_t(1) << h;
  cs.masks.resize(std::size_t(space.coboundary_dim()));
  for (int b = 0; b < space.coboundary_dim(); ++b) {
    const BitVec& v = space.basis()[std::size_t(b)];
    for (int g = 1; g < n; ++g) {
      uint64_t mask = 0;
      for (int h = 1; h < n; ++h)
        if (v.get(std::size_t(g - 1) * (n - 1) + (h - 1))) mask |= uint64_t(1) << h;
      if (mask) cs.masks[std::size_t(b)].push_back({g, mask});
    }
  }
  return cs;
}

// Walks a class coset maintaining all row sums incrementally.
class ClassWalker {
 public:
  explicit ClassWalker(const ClassSetup& cs)
      : cs_(cs), rows_(cs.rep_rows), abs_(std::size_t(cs.n), 0) {
    recompute();
  }

  void seek(uint64_t coeffs) {
    rows_ = cs_.rep_rows;
    coeffs_ = coeffs;
    uint64_t c = coeffs;
    while (c) {
      int b = std::countr_zero(c);
      c &= c - 1;
      for (const FlipMask& fm : cs_.masks[std::size_t(b)])
        rows_[std::size_t(fm.row)] ^= fm.mask;
    }
    recompute();
  }

  void flip(int b) {
    coeffs_ ^= uint64_t(1) << b;
    const int n = cs_.n;
    for (const FlipMask& fm : cs_.masks[std::size_t(b)]) {
      uint64_t& r = rows_[std::size_t(fm.row)];
      r ^= fm.mask;
      long long s = n - 2 * std::popcount(r);
      long long a = std::llabs(s);
      re_ += a - abs_[std::size_t(fm.row)];
      abs_[std::size_t(fm.row)] = a;
    }
  }

  long long re() const { return re_; }
  uint64_t coeffs() const { return coeffs_; }

  SignMatrix matrix() const {
    SignMatrix m(cs_.n, 1);
    for (int g = 1; g < cs_.n; ++g) {
      uint64_t r = rows_[std::size_t(g)];
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        m.put(g, j, -1);
      }
    }
    return m;
  }

  long long re_from_scratch() const {
    long long re = 0;
    for (int g = 1; g < cs_.n; ++g)
      re += std::llabs((long long)cs_.n - 2 * std::popcount(rows_[std::size_t(g)]));
    return re;
  }

 private:
  void recompute() {
    re_ = 0;
    for (int g = 1; g < cs_.n; ++g) {
      long long a =
          std::llabs((long long)cs_.n - 2 * std::popcount(rows_[std::size_t(g)]));
      abs_[std::size_t(g)] = a;
      re_ += a;
    }
  }

  const ClassSetup& cs_;
  std::vector<uint64_t> rows_;
  std::vector<long long> abs_;
  long long re_ = 0;
  uint64_t coeffs_ = 0;
};

uint64_t gray(uint64_t k) { return k ^ (k >> 1); }

// Canonical form of a hit: least coordinate vector over the shift orbit.
SearchWitness canonicalize(const CocycleSpace& space, const ClassSetup& cs,
                           int class_mask, const SignMatrix& signs) {
  Cocycle psi{space.group(), signs, std::nullopt};
  std::vector<Cocycle> orbit = shift_orbit(psi);
  SearchWitness w;
  w.class_index = class_mask;
  w.orbit_size = orbit.size();
  bool first = true;
  for (const Cocycle& o : orbit) {
    BitVec delta = sign_bits(o.signs);
    delta ^= cs.rep_bits;
    auto coords = space.coboundary_coords(delta);
    if (!coords)
      throw std::logic_error("shift left the cohomology class");
    uint64_t c = coords->to_u64();
    if (first || lex_less_u64(c, w.cobo_coords)) w.cobo_coords = c;
    first = false;
  }
  return w;
}

struct WorkerResult {
  uint64_t examined = 0;
  uint64_t qo_count = 0;
  WitnessSet witnesses;
};

// Exhaustive walk of gray-indexed states [k0, k1) of one class.
WorkerResult walk_range(const CocycleSpace& space, const ClassSetup& cs,
                        int class_mask, long long target, uint64_t k0,
                        uint64_t k1, const SearchParams& params) {
  WorkerResult res;
  if (k0 >= k1) return res;
  ClassWalker walker(cs);
  walker.seek(gray(k0));
  auto consider = [&](uint64_t step) {
    ++res.examined;
    if (walker.re() == target) {
      SignMatrix m = walker.matrix();
      // Witnesses are always re-checked from scratch.
      long long re = 0;
      for (int i = 1; i < m.n; ++i) re += std::llabs(m.row_sum(i));
      if (re != target)
        throw std::logic_error("incremental row excess diverged at a witness");
      ++res.qo_count;
      bounded_insert(res.witnesses, canonicalize(space, cs, class_mask, m),
                     params.witness_cap);
    }
    if (params.self_check_interval &&
        (step & (params.self_check_interval - 1)) == 0 &&
        walker.re() != walker.re_from_scratch())
      throw std::logic_error("incremental row excess diverged");
  };
  consider(k0);
  for (uint64_t k = k0 + 1; k < k1; ++k) {
    walker.flip(std::countr_zero(k));
    consider(k);
  }
  return res;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e9b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Cocycle witness_cocycle(const CocycleSpace& space, const SearchWitness& w) {
  BitVec coeffs(std::size_t(space.dim_z2()));
  for (int i = 0; i < space.coboundary_dim(); ++i)
    if ((w.cobo_coords >> i) & 1) coeffs.set(std::size_t(i), true);
  for (int r = 0; r < space.dim_h2(); ++r)
    if ((w.class_index >> r) & 1)
      coeffs.set(std::size_t(space.coboundary_dim() + r), true);
  return space.from_coeffs(coeffs);
}

SearchReport search_quasi_orthogonal(GroupPtr g, const SearchParams& params) {
  const int n = g->n;
  if (n % 4 != 2 || n < 6)
    throw Error(ErrorCode::WrongOrderClass, "|G| must be 4t+2 >= 6");
  if (params.mode == SearchMode::exhaustive && n > 30)
    throw Error(ErrorCode::TooLargeForExhaustive,
                "exhaustive search limited to order 30");
  const long long target = n - 2;  // 4t

  auto t0 = std::chrono::steady_clock::now();
  CocycleSpace space = cocycle_space(g);
  const int d = space.coboundary_dim();
  if (space.dim_h2() != 1)
    throw std::logic_error("expected a single nontrivial cohomology class");

  SearchReport report;
  report.group_name = g->name;
  report.order = n;
  report.mode = params.mode;
  report.dim_z2 = space.dim_z2();
  report.coboundary_dim = d;
  WitnessSet witnesses;

  const uint64_t class_states = uint64_t(1) << d;
  uint64_t budget = params.budget;
  if (budget == 0) {
    if (params.mode == SearchMode::exhaustive) budget = 2 * class_states;
    else if (params.mode == SearchMode::orbit) budget = uint64_t(1) << 22;
    else budget = 10000;
  }

  if (params.mode == SearchMode::exhaustive) {
    uint64_t remaining = budget;
    for (int cls = 0; cls < 2; ++cls) {
      ClassSetup cs = make_class_setup(space, cls);
      ClassReport cr;
      cr.label = cls == 0 ? "coboundary" : "nontrivial";
      uint64_t todo = std::min(class_states, remaining);
      if (todo < class_states) report.partial = true;
      int jobs = std::max(1, params.jobs);
      std::vector<WorkerResult> results(std::size_t(jobs), WorkerResult{});
      if (jobs == 1) {
        results[0] = walk_range(space, cs, cls, target, 0, todo, params);
      } else {
        uint64_t chunk = (todo + uint64_t(jobs) - 1) / uint64_t(jobs);
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) {
          uint64_t k0 = std::min(todo, uint64_t(w) * chunk);
          uint64_t k1 = std::min(todo, k0 + chunk);
          threads.emplace_back([&, w, k0, k1] {
            results[std::size_t(w)] =
                walk_range(space, cs, cls, target, k0, k1, params);
          });
        }
        for (auto& th : threads) th.join();
      }
      for (const WorkerResult& r : results) {
        cr.examined += r.examined;
        cr.qo_count += r.qo_count;
        for (const SearchWitness& w : r.witnesses)
          bounded_insert(witnesses, w, params.witness_cap);
      }
      cr.qo_total = cr.qo_count;
      remaining -= todo;
      report.space_size += cr.examined;
      report.classes.push_back(std::move(cr));
      if (remaining == 0 && cls == 0) {
        // Record the untouched class for completeness.
        report.classes.push_back({"nontrivial", 0, 0, 0});
        report.partial = true;
        break;
      }
    }
  } else if (params.mode == SearchMode::orbit) {
    uint64_t remaining = budget;
    for (int cls = 0; cls < 2 && remaining > 0; ++cls) {
      ClassSetup cs = make_class_setup(space, cls);
      ClassReport cr;
      cr.label = cls == 0 ? "coboundary" : "nontrivial";
      // Visited set: dense bitmap when the class fits, hash set otherwise.
      std::vector<bool> dense;
      std::unordered_set<uint64_t> sparse;
      const bool use_dense = d <= 28;
      if (use_dense) dense.assign(std::size_t(class_states), false);
      auto visited = [&](uint64_t c) {
        return use_dense ? bool(dense[std::size_t(c)]) : sparse.count(c) > 0;
      };
      auto mark = [&](uint64_t c) {
        if (use_dense) dense[std::size_t(c)] = true;
        else sparse.insert(c);
      };
      for (uint64_t idx = 0; idx < class_states; ++idx) {
        if (visited(idx)) continue;
        if (remaining == 0) { report.partial = true; break; }
        --remaining;
        ++cr.examined;
        BitVec coords{std::size_t(d)};
        for (int i = 0; i < d; ++i)
          if ((idx >> i) & 1) coords.set(std::size_t(i), true);
        BitVec bits = space.coboundary_combine(coords);
        bits ^= cs.rep_bits;
        SignMatrix m = bits_to_signs(n, bits);
        Cocycle psi{space.group(), m, std::nullopt};
        std::vector<Cocycle> orbit = shift_orbit(psi);
        uint64_t least = idx;
        for (const Cocycle& o : orbit) {
          BitVec delta = sign_bits(o.signs);
          delta ^= cs.rep_bits;
          auto c = space.coboundary_coords(delta);
          if (!c) throw std::logic_error("shift left the cohomology class");
          uint64_t cv = c->to_u64();
          mark(cv);
          if (lex_less_u64(cv, least)) least = cv;
        }
        long long re = row_excess(m);
        if (re == target) {
          ++cr.qo_count;
          cr.qo_total += orbit.size();
          SearchWitness w{cls, least, orbit.size()};
          bounded_insert(witnesses, w, params.witness_cap);
        }
      }
      report.space_size += cr.examined;
      report.classes.push_back(std::move(cr));
    }
    while (report.classes.size() < 2)
      report.classes.push_back({report.classes.empty() ? "coboundary" : "nontrivial", 0, 0, 0});
  } else {  // random
    ClassReport per_class[2];
    per_class[0].label = "coboundary";
    per_class[1].label = "nontrivial";
    int jobs = std::max(1, params.jobs);
    std::vector<WorkerResult> results(std::size_t(jobs), WorkerResult{});
    std::vector<uint64_t> class_hits(std::size_t(jobs) * 2, 0);
    std::vector<uint64_t> class_qo(std::size_t(jobs) * 2, 0);
    ClassSetup setups[2] = {make_class_setup(space, 0), make_class_setup(space, 1)};
    uint64_t chunk = (budget + uint64_t(jobs) - 1) / uint64_t(jobs);
    // Sample i is derived from (seed, i) alone, so any partition of the
    // index range over workers reproduces the same report.
    auto sample_range = [&](int w, uint64_t i0, uint64_t i1) {
      WorkerResult& res = results[std::size_t(w)];
      for (uint64_t i = i0; i < i1; ++i) {
        uint64_t r0 = splitmix64(params.seed ^ splitmix64(i));
        int cls = int(r0 & 1);
        uint64_t coords_packed =
            splitmix64(r0) & (d >= 64 ? ~uint64_t(0) : ((uint64_t(1) << d) - 1));
        BitVec coords{std::size_t(d)};
        for (int bi = 0; bi < d; ++bi)
          if ((coords_packed >> bi) & 1) coords.set(std::size_t(bi), true);
        BitVec bits = space.coboundary_combine(coords);
        bits ^= setups[cls].rep_bits;
        SignMatrix m = bits_to_signs(n, bits);
        ++class_hits[std::size_t(w) * 2 + std::size_t(cls)];
        ++res.examined;
        long long re = 0;
        for (int g2 = 1; g2 < n; ++g2) re += std::llabs(m.row_sum(g2));
        if (re == target) {
          ++class_qo[std::size_t(w) * 2 + std::size_t(cls)];
          bounded_insert(res.witnesses,
                         canonicalize(space, setups[cls], cls, m),
                         params.witness_cap);
        }
      }
    };
    if (jobs == 1) {
      sample_range(0, 0, budget);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) {
        uint64_t i0 = std::min(budget, uint64_t(w) * chunk);
        uint64_t i1 = std::min(budget, i0 + chunk);
        threads.emplace_back([&, w, i0, i1] { sample_range(w, i0, i1); });
      }
      for (auto& th : threads) th.join();
    }
    for (int w = 0; w < jobs; ++w) {
      for (int cls = 0; cls < 2; ++cls) {
        per_class[cls].examined += class_hits[std::size_t(w) * 2 + std::size_t(cls)];
        per_class[cls].qo_count += class_qo[std::size_t(w) * 2 + std::size_t(cls)];
      }
      for (const SearchWitness& wit : results[std::size_t(w)].witnesses)
        bounded_insert(witnesses, wit, params.witness_cap);
    }
    for (int cls = 0; cls < 2; ++cls) {
      per_class[cls].qo_total = per_class[cls].qo_count;
      report.space_size += per_class[cls].examined;
      report.classes.push_back(per_class[cls]);
    }
  }

  report.witnesses.assign(witnesses.begin(), witnesses.end());
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<ConjectureResult> verify_conjecture(int t_max, uint64_t budget_per_t) {
  if (t_max < 1) throw Error(ErrorCode::ParameterMismatch, "t_max must be >= 1");
  if (budget_per_t == 0) budget_per_t = uint64_t(1) << 25;
  std::vector<ConjectureResult> out;
  for (int t = 1; t <= t_max; ++t) {
    ConjectureResult res;
    res.t = t;
    auto g = std::make_shared<const GroupTable>(build_dihedral(2 * t + 1));
    CocycleSpace space = cocycle_space(g);
    const int d = space.coboundary_dim();
    const long long target = 4 * t;
    ClassSetup cs = make_class_setup(space, 1);
    ClassWalker walker(cs);
    walker.seek(0);
    const uint64_t states = d >= 63 ? ~uint64_t(0) : (uint64_t(1) << d);
    uint64_t limit = std::min(states, budget_per_t);
    std::optional<SignMatrix> found;
    if (walker.re() == target) found = walker.matrix();
    for (uint64_t k = 1; k < limit && !found; ++k) {
      walker.flip(std::countr_zero(k));
      if (walker.re() == target) found = walker.matrix();
    }
    if (!found) {
      res.budget_exhausted = limit < states;
      out.push_back(std::move(res));
      continue;
    }
    Cocycle psi = make_cocycle(g, *found);
    res.witness = psi;
    ExtensionGroup e = central_extension(psi);
    res.extension_is_dicyclic =
        is_isomorphic_small(e.table, build_dicyclic(t));
    res.qhs = verify_quasi_hadamard_subset(e.table, e.z_element,
                                           e.canonical_transversal());
    res.verified = res.extension_is_dicyclic && res.qhs.has_value();
    out.push_back(std::move(res));
  }
  return out;
}

MaxdetResult maxdet_search(GroupPtr g, bool restrict_qo) {
  const int n = g->n;
  if (n % 4 != 2 || n < 6)
    throw Error(ErrorCode::WrongOrderClass, "|G| must be 4t+2 >= 6");
  if (n > 14)
    throw Error(ErrorCode::TooLarge, "exhaustive determinant search limited to order 14");
  const int t = (n - 2) / 4;
  const long long target = 4 * t;

  CocycleSpace space = cocycle_space(g);
  const int d = space.coboundary_dim();
  MaxdetResult res;
  res.best_abs_det = -1;
  std::optional<SignMatrix> best_matrix;

  for (int cls = 0; cls < 2; ++cls) {
    ClassSetup cs = make_class_setup(space, cls);
    ClassWalker walker(cs);
    walker.seek(0);
    const uint64_t states = uint64_t(1) << d;
    for (uint64_t k = 0; k < states; ++k) {
      if (k) walker.flip(std::countr_zero(k));
      ++res.examined;
      bool qo = walker.re() == target;
      if (restrict_qo && !qo) continue;
      SignMatrix m = walker.matrix();
      long long det = determinant_pm1_small(m);
      BigInt ad = det < 0 ? BigInt(-det) : BigInt(det);
      if (ad > res.best_abs_det) {
        res.best_abs_det = ad;
        best_matrix = m;
        res.all_best_quasi_orthogonal = qo;
      } else if (ad == res.best_abs_det) {
        res.all_best_quasi_orthogonal = res.all_best_quasi_orthogonal && qo;
      }
    }
  }
  res.witness = make_cocycle(g, *best_matrix);
  res.meets_ew = res.best_abs_det == ew_bound(t);
  return res;
}

}  // namespace qoc
