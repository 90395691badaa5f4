#include "ebc/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "ebc/errors.hpp"

namespace ebc {

ProductSet extend(const FiniteSemigroup& s, const ProductSet& p, ElementId a) {
  if (p.owner_order() != s.order()) throw InputError("product set does not belong to semigroup");
  if (a >= s.order()) throw InputError("element id " + std::to_string(a) + " out of range");
  ProductSet out = p;
  const auto row = s.row(a);
  p.for_each([&](ElementId x) { out.insert(row[x]); });
  out.insert(a);
  return out;
}

ProductSet product_set(const FiniteSemigroup& s, std::span<const ElementId> seq) {
  ProductSet p(s.order());
  for (ElementId a : seq) p = extend(s, p, a);
  return p;
}

bool is_free(const FiniteSemigroup& s, std::span<const ElementId> seq) {
  return !product_set(s, seq).intersects(idempotent_set(s));
}

std::uint64_t ghw_bound(const FiniteSemigroup& s) {
  return s.order() - idempotent_set(s).size() + 1;
}

namespace {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool test(ElementId i) const { return ((w[i >> 6] >> (i & 63)) & 1U) != 0; }
  void set(ElementId i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool meets(const Bits& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < W; ++i) acc |= w[i] & o.w[i];
    return acc != 0;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  // |this \ o|
  unsigned count_without(const Bits& o) const {
    unsigned n = 0;
    for (std::size_t i = 0; i < W; ++i) n += static_cast<unsigned>(std::popcount(w[i] & ~o.w[i]));
    return n;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t b = w[i];
      while (b != 0) {
        f(static_cast<ElementId>(i * 64 + static_cast<std::size_t>(std::countr_zero(b))));
        b &= b - 1;
      }
    }
  }
  bool operator==(const Bits&) const = default;
};

template <std::size_t W>
Bits<W> to_bits(const ElementSet& s) {
  Bits<W> b;
  const auto words = s.words();
  std::copy(words.begin(), words.end(), b.w.begin());
  return b;
}

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Certified upper bounds on the longest free extension of a state. Any stored
// value is a true bound, so concurrent writers cannot break correctness; the
// smaller of two bounds is kept. Eviction is approximate LRU with two
// generations: a full young generation becomes the old one, and hits in the
// old generation are promoted.
template <std::size_t W>
class BoundMemo {
 public:
  struct Key {
    Bits<W> bits;
    std::uint32_t next;
    bool operator==(const Key&) const = default;
  };

  BoundMemo(std::size_t capacity, bool concurrent) : concurrent_(concurrent) {
    const std::size_t shards = concurrent ? 64 : 1;
    shard_count_ = capacity == 0 ? 0 : shards;
    shard_cap_ = shard_count_ == 0 ? 0 : std::max<std::size_t>(2, capacity / shards);
    if (shard_count_ > 0) shards_ = std::make_unique<Shard[]>(shard_count_);
  }

  std::optional<std::uint32_t> find(const Key& key) {
    if (shard_count_ == 0) return std::nullopt;
    const std::size_t h = KeyHash{}(key);
    Shard& sh = shards_[h % shard_count_];
    auto guard = lock(sh);
    if (auto it = sh.young.find(key); it != sh.young.end()) return it->second;
    if (auto it = sh.old.find(key); it != sh.old.end()) {
      const std::uint32_t v = it->second;
      sh.old.erase(it);
      insert_young(sh, key, v);
      return v;
    }
    return std::nullopt;
  }

  void store(const Key& key, std::uint32_t bound) {
    if (shard_count_ == 0) return;
    const std::size_t h = KeyHash{}(key);
    Shard& sh = shards_[h % shard_count_];
    auto guard = lock(sh);
    if (auto it = sh.young.find(key); it != sh.young.end()) {
      it->second = std::min(it->second, bound);
      return;
    }
    insert_young(sh, key, bound);
  }

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = mix64(k.next + 0x9e3779b97f4a7c15ULL);
      for (std::uint64_t w : k.bits.w) h = mix64(h ^ w);
      return static_cast<std::size_t>(h);
    }
  };
  struct Shard {
    std::mutex mu;
    std::unordered_map<Key, std::uint32_t, KeyHash> young;
    std::unordered_map<Key, std::uint32_t, KeyHash> old;
  };

  std::unique_lock<std::mutex> lock(Shard& sh) {
    return concurrent_ ? std::unique_lock<std::mutex>(sh.mu) : std::unique_lock<std::mutex>();
  }

  void insert_young(Shard& sh, const Key& key, std::uint32_t v) {
    if (sh.young.size() >= shard_cap_ / 2) {
      sh.old = std::move(sh.young);
      sh.young.clear();
    }
    sh.young.emplace(key, v);
  }

  bool concurrent_;
  std::size_t shard_count_ = 0;
  std::size_t shard_cap_ = 0;
  std::unique_ptr<Shard[]> shards_;
};

inline constexpr std::uint32_t kNoBranch = std::numeric_limits<std::uint32_t>::max();

template <std::size_t W>
struct SearchContext {
  const FiniteSemigroup& s;
  Bits<W> idempotents;
  Bits<W> non_idempotents;
  std::vector<Bits<W>> forbidding;  // forbidding[q] = {p : q*p in E}
  std::vector<ElementId> candidates;  // non-idempotents, increasing
  std::uint32_t hard_cap = 0;         // min(depth budget, |S \ E|)
  BoundMemo<W> memo;
  std::atomic<std::uint32_t> global_best{0};
  std::atomic<std::uint32_t> capped_branch{kNoBranch};
  // Non-identity automorphisms, flattened: autos[k * order + x].
  std::vector<ElementId> autos;
  std::size_t auto_count = 0;

  ElementId image(std::uint32_t k, ElementId x) const { return autos[k * s.order() + x]; }

  SearchContext(const FiniteSemigroup& sg, std::size_t memo_capacity, bool concurrent)
      : s(sg), memo(memo_capacity, concurrent) {}
};

using Stabilizer = std::vector<std::uint32_t>;

// Search only multisets that are lexicographically smallest in their orbit.
// For such a multiset with sorted prefix X, the next term y has no smaller
// image under any automorphism fixing X pointwise.
template <std::size_t W>
bool orbit_minimal(const SearchContext<W>& ctx, const Stabilizer& stab, ElementId y) {
  for (std::uint32_t k : stab)
    if (ctx.image(k, y) < y) return false;
  return true;
}

template <std::size_t W>
Stabilizer fixing(const SearchContext<W>& ctx, const Stabilizer& stab, ElementId y) {
  Stabilizer out;
  for (std::uint32_t k : stab)
    if (ctx.image(k, y) == y) out.push_back(k);
  return out;
}

struct BranchOutcome {
  std::uint32_t best = 0;
  std::vector<ElementId> sequence;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

template <std::size_t W>
class BranchSearch {
 public:
  BranchSearch(SearchContext<W>& ctx, std::uint32_t branch) : ctx_(ctx), branch_(branch) {}

  BranchOutcome run() {
    const ElementId first = ctx_.candidates[branch_];
    Bits<W> p;
    p.set(first);
    Bits<W> forb = ctx_.forbidding[first];
    path_.assign(1, first);
    out_.best = 1;
    out_.sequence = path_;
    raise_global(1);
    if (out_.best >= ctx_.hard_cap) {
      mark_capped();
    } else {
      Stabilizer all(ctx_.auto_count);
      for (std::uint32_t k = 0; k < all.size(); ++k) all[k] = k;
      dfs(p, forb, branch_, 1, fixing(ctx_, all, first));
    }
    return std::move(out_);
  }

 private:
  std::uint32_t bound_of(const Bits<W>& p, const Bits<W>& forb) const {
    // Each appended term strictly grows the product set inside S \ E, and the
    // tail's own product set avoids E and everything that meets E against p.
    const unsigned by_growth = ctx_.non_idempotents.count_without(p);
    const unsigned by_tail = ctx_.non_idempotents.count_without(forb);
    return std::min(by_growth, by_tail);
  }

  bool pruned(std::uint32_t depth, std::uint32_t ub) const {
    const std::uint32_t reach = depth + ub;
    return reach <= out_.best || reach < ctx_.global_best.load(std::memory_order_relaxed);
  }

  void raise_global(std::uint32_t v) {
    std::uint32_t cur = ctx_.global_best.load(std::memory_order_relaxed);
    while (cur < v && !ctx_.global_best.compare_exchange_weak(cur, v)) {
    }
  }

  void mark_capped() {
    std::uint32_t cur = ctx_.capped_branch.load();
    while (branch_ < cur && !ctx_.capped_branch.compare_exchange_weak(cur, branch_)) {
    }
    aborting_ = true;
  }

  bool must_abort() {
    if (aborting_) return true;
    if (ctx_.capped_branch.load(std::memory_order_relaxed) < branch_) aborting_ = true;
    return aborting_;
  }

  // Returns a certified upper bound on the longest free extension of the
  // state (p, candidates[min_next..]); exact when nothing below was pruned.
  // Under a nontrivial stabilizer only orbit-minimal extensions count, so
  // those nodes stay out of the memo.
  std::uint32_t dfs(const Bits<W>& p, const Bits<W>& forb, std::uint32_t min_next,
                    std::uint32_t depth, const Stabilizer& stab) {
    ++out_.nodes;
    std::uint32_t ub = bound_of(p, forb);
    if (pruned(depth, ub)) return ub;
    const bool memoize = stab.empty();
    const typename BoundMemo<W>::Key key{p, min_next};
    if (memoize) {
      if (auto hit = ctx_.memo.find(key)) {
        ++out_.memo_hits;
        ub = std::min(ub, *hit);
        if (pruned(depth, ub)) return ub;
      }
    }

    std::uint32_t upper = 0;
    const auto& cands = ctx_.candidates;
    for (std::uint32_t i = min_next; i < cands.size(); ++i) {
      const ElementId a = cands[i];
      if (forb.test(a)) continue;  // a * p is idempotent for some p
      if (!stab.empty() && !orbit_minimal(ctx_, stab, a)) continue;
      Bits<W> next = p;
      Bits<W> next_forb = forb;
      const auto row = ctx_.s.row(a);
      auto add = [&](ElementId q) {
        if (!next.test(q)) {
          next.set(q);
          next_forb |= ctx_.forbidding[q];
        }
      };
      p.for_each([&](ElementId x) { add(row[x]); });
      add(a);

      path_.push_back(a);
      const std::uint32_t len = depth + 1;
      if (len > out_.best) {
        out_.best = len;
        out_.sequence = path_;
        raise_global(len);
        if (len >= ctx_.hard_cap) mark_capped();
      }
      std::uint32_t child = 0;
      if (!aborting_) {
        // a repeats the previous term unless the prefix gained a new element
        const bool same = stab.empty() || a == path_[path_.size() - 2];
        child = same ? dfs(next, next_forb, i, len, stab)
                     : dfs(next, next_forb, i, len, fixing(ctx_, stab, a));
      }
      path_.pop_back();
      if (must_abort()) return ub;

      upper = std::max(upper, 1 + child);
      if (pruned(depth, ub)) {
        // Remaining siblings are unexplored, so only ub itself is certified.
        upper = ub;
        break;
      }
    }
    upper = std::min(upper, ub);
    if (memoize) ctx_.memo.store(key, upper);
    return upper;
  }

  SearchContext<W>& ctx_;
  std::uint32_t branch_;
  std::vector<ElementId> path_;
  BranchOutcome out_;
  bool aborting_ = false;
};

template <std::size_t W>
EBResult run_search(const FiniteSemigroup& s, const SearchConfig& cfg) {
  const unsigned width = std::max(1U, cfg.parallel_width);
  SearchContext<W> ctx(s, cfg.memo_capacity, width > 1);
  const ElementSet idem = idempotent_set(s);
  ctx.idempotents = to_bits<W>(idem);
  ctx.non_idempotents = to_bits<W>(idem.complement());
  ctx.candidates = idem.complement().elements();
  ctx.forbidding.resize(s.order());
  for (ElementId q = 0; q < s.order(); ++q) {
    const auto row = s.row(q);
    for (ElementId p = 0; p < s.order(); ++p)
      if (idem.contains(row[p])) ctx.forbidding[q].set(p);
  }

  const auto autos = automorphism_subgroup(s);
  ctx.auto_count = autos.size() - 1;
  for (std::size_t k = 1; k < autos.size(); ++k)
    ctx.autos.insert(ctx.autos.end(), autos[k].begin(), autos[k].end());
  std::vector<std::uint32_t> top(ctx.auto_count);
  for (std::uint32_t k = 0; k < top.size(); ++k) top[k] = k;

  EBResult result;
  result.ghw_bound = s.order() - idem.size() + 1;
  const auto non_idem = static_cast<std::uint32_t>(ctx.candidates.size());
  const std::uint32_t budget = cfg.depth_budget == 0 ? non_idem + 1 : cfg.depth_budget;
  ctx.hard_cap = std::min(budget, non_idem);
  if (ctx.candidates.empty() || ctx.hard_cap == 0) {
    result.value = 1;
    result.exceeds_budget = !ctx.candidates.empty();
    return result;
  }

  const auto branches = static_cast<std::uint32_t>(ctx.candidates.size());
  std::vector<BranchOutcome> outcomes(branches);
  std::atomic<std::uint32_t> next_branch{0};
  auto worker = [&] {
    for (std::uint32_t b = next_branch++; b < branches; b = next_branch++) {
      if (ctx.capped_branch.load() < b) continue;
      if (!orbit_minimal(ctx, top, ctx.candidates[b])) continue;
      outcomes[b] = BranchSearch<W>(ctx, b).run();
    }
  };
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min(width, branches); ++t) pool.emplace_back(worker);
  }

  std::uint32_t best = 0;
  const BranchOutcome* chosen = nullptr;
  for (const auto& o : outcomes) {
    result.nodes_explored += o.nodes;
    result.memo_hits += o.memo_hits;
    if (o.best > best) {
      best = o.best;
      chosen = &o;
    }
  }
  result.extremal_sequence = chosen->sequence;
  result.exceeds_budget = best >= budget && budget < non_idem;
  result.value = static_cast<std::uint64_t>(best) + 1;
  return result;
}

}  // namespace

EBResult erdos_burgess(const FiniteSemigroup& s, const SearchConfig& cfg) {
  const std::size_t n = s.order();
  if (n <= 64) return run_search<1>(s, cfg);
  if (n <= 128) return run_search<2>(s, cfg);
  if (n <= 256) return run_search<4>(s, cfg);
  if (n <= 512) return run_search<8>(s, cfg);
  if (n <= 1024) return run_search<16>(s, cfg);
  if (n <= 2048) return run_search<32>(s, cfg);
  if (n <= kStructureOrderCap) return run_search<64>(s, cfg);
  throw ResourceError("semigroup order " + std::to_string(n) + " exceeds solver cap " +
                          std::to_string(kStructureOrderCap),
                      n, kStructureOrderCap);
}

std::uint64_t erdos_burgess_oracle(const FiniteSemigroup& s, std::size_t state_cap) {
  const std::size_t n = s.order();
  std::vector<bool> idem(n);
  for (ElementId x = 0; x < n; ++x) idem[x] = s.mul(x, x) == x;

  // A state is the sorted product set plus the last (largest) term.
  using State = std::pair<std::vector<ElementId>, ElementId>;
  std::set<State> level{State{{}, 0}};
  std::uint64_t length = 0;
  while (true) {
    std::set<State> next;
    for (const auto& [prods, last] : level) {
      for (ElementId a = last; a < n; ++a) {
        if (idem[a]) continue;
        std::set<ElementId> grown(prods.begin(), prods.end());
        grown.insert(a);
        for (ElementId x : prods) grown.insert(s.mul(a, x));
        bool free = true;
        for (ElementId x : grown) free = free && !idem[x];
        if (!free) continue;
        next.emplace(std::vector<ElementId>(grown.begin(), grown.end()), a);
        if (next.size() > state_cap) {
          throw ResourceError("oracle state count exceeds cap " + std::to_string(state_cap),
                              next.size(), state_cap);
        }
      }
    }
    if (next.empty()) break;
    ++length;
    level = std::move(next);
  }
  return length + 1;
}

std::uint64_t davenport(const FiniteSemigroup& g, const SearchConfig& cfg) {
  if (!is_group(g) || !check_axioms(g).commutative) {
    throw InputError("'" + g.label() + "' is not an abelian group");
  }
  const EBResult r = erdos_burgess(g, cfg);
  if (r.exceeds_budget) {
    throw ResourceError("depth budget exhausted while computing D(G)", r.value, cfg.depth_budget);
  }
  return r.value;
}

std::optional<std::uint64_t> davenport_closed_form(std::span<const std::uint64_t> factors) {
  std::vector<std::uint64_t> d;
  for (auto f : factors) {
    if (f == 0) throw InputError("invariant factor must be positive");
    if (f > 1) d.push_back(f);
  }
  std::uint64_t sum = 1;
  for (auto f : d) sum += f - 1;
  if (d.size() <= 2) return sum;
  // p-group: every factor a power of one prime.
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q <= d.front(); ++q) {
    if (d.front() % q == 0) {
      p = q;
      break;
    }
  }
  for (auto f : d) {
    while (f % p == 0) f /= p;
    if (f != 1) return std::nullopt;
  }
  return sum;
}

}  // namespace ebc
