#include "nonnest/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

namespace nonnest {

namespace {

// Letters are packed into 4 bits and assignment slots into 12 entries, which
// covers every feasible enumeration size.
constexpr int kMaxTrackedValues = 12;

// Incremental containment state for one pattern over a growing prefix.
// Holds every partial occurrence as (next pattern position, assignment of
// pattern values to word values); the set only grows along a DFS path, so
// undo is truncation. A completed occurrence is a permanent sink until the
// push that created it is undone.
class PatternTracker {
  public:
    explicit PatternTracker(const Word& pattern)
        : pat_(standardize(pattern)), k_(static_cast<int>(pat_.size())) {
        d_ = max_value(pat_);
        if (d_ > kMaxTrackedValues)
            throw std::invalid_argument("pattern has too many distinct letters to track");
        State root{};
        states_.push_back(root);
        present_.insert(key(root));
    }

    // Appends one word letter; returns true while some occurrence is complete.
    bool push(int x) {
        ++depth_;
        if (matched_at_ >= 0) {
            frames_.push_back(0);
            return true;
        }
        std::size_t before = states_.size();
        for (std::size_t s = 0; s < before; ++s) {
            State st = states_[s];  // copy; states_ may reallocate below
            int pv = pat_[st.j];
            int cur = st.vals[pv - 1];
            if (cur != 0) {
                if (cur != x) continue;
            } else if (!order_consistent(st, pv, x)) {
                continue;
            }
            State ns = st;
            ns.vals[pv - 1] = static_cast<std::uint8_t>(x);
            ++ns.j;
            if (ns.j == k_) {
                matched_at_ = depth_;
                break;
            }
            if (present_.insert(key(ns)).second) states_.push_back(ns);
        }
        frames_.push_back(static_cast<std::uint32_t>(states_.size() - before));
        return matched_at_ >= 0;
    }

    void pop() {
        std::uint32_t added = frames_.back();
        frames_.pop_back();
        while (added--) {
            present_.erase(key(states_.back()));
            states_.pop_back();
        }
        if (matched_at_ == depth_) matched_at_ = -1;
        --depth_;
    }

    bool matched() const { return matched_at_ >= 0; }

  private:
    struct State {
        std::uint8_t j = 0;
        std::array<std::uint8_t, kMaxTrackedValues> vals{};  // 0 = unassigned
    };

    bool order_consistent(const State& st, int pv, int x) const {
        for (int u = 1; u <= d_; ++u) {
            int a = st.vals[u - 1];
            if (a == 0) continue;
            if (u < pv ? a >= x : a <= x) return false;
        }
        return true;
    }

    static std::uint64_t key(const State& st) {
        std::uint64_t k = st.j;
        for (int i = 0; i < kMaxTrackedValues; ++i)
            k = (k << 4) | st.vals[i];
        return k;
    }

    Word pat_;
    int k_;
    int d_ = 0;
    std::vector<State> states_;
    std::unordered_set<std::uint64_t> present_;
    std::vector<std::uint32_t> frames_;
    int matched_at_ = -1;
    int depth_ = 0;
};

// DFS over prefixes extendable to C_n, maintaining the open-value queue
// (second copies close values in the order their first copies appeared) and
// one tracker per avoided pattern. Candidates at a node are the queue front
// plus every unopened value, tried in ascending letter order, which makes
// emission lexicographic.
class AvoiderDfs {
  public:
    AvoiderDfs(int n, const PatternSet& ps) : n_(n), opened_(n + 1, false) {
        for (const Word& p : ps.patterns) {
            int d = distinct_count(p);
            if (d > n || static_cast<int>(p.size()) > 2 * n)
                continue;  // cannot occur in any word of C_n
            trackers_.emplace_back(p);
        }
        if (!trackers_.empty() && n > kMaxTrackedValues)
            throw std::invalid_argument("pattern-pruned search supports n <= 12");
        prefix_.reserve(2 * n);
        queue_.reserve(n);
    }

    // Pushes a letter if it keeps the prefix alive; returns false (no state
    // change) when some pattern completes.
    bool try_push(int v) {
        bool dead = false;
        std::size_t pushed = 0;
        for (; pushed < trackers_.size(); ++pushed) {
            if (trackers_[pushed].push(v)) {
                ++pushed;
                dead = true;
                break;
            }
        }
        if (dead) {
            while (pushed--) trackers_[pushed].pop();
            return false;
        }
        if (!opened_[v]) {
            opened_[v] = true;
            queue_.push_back(v);
        } else {
            ++qhead_;  // v is the queue front: close it
        }
        prefix_.push_back(v);
        return true;
    }

    void pop() {
        int v = prefix_.back();
        prefix_.pop_back();
        if (qhead_ > 0 && queue_[qhead_ - 1] == v) {
            --qhead_;  // the last move closed v
        } else {
            queue_.pop_back();
            opened_[v] = false;
        }
        for (auto& t : trackers_) t.pop();
    }

    template <typename Leaf>
    void run(const Leaf& leaf) {
        if (static_cast<int>(prefix_.size()) == 2 * n_) {
            leaf(prefix_);
            return;
        }
        int front = qhead_ < static_cast<int>(queue_.size()) ? queue_[qhead_] : 0;
        for (int v = 1; v <= n_; ++v) {
            if (opened_[v] && v != front) continue;  // only the front may close
            if (!try_push(v)) continue;
            run(leaf);
            pop();
        }
    }

  private:
    int n_;
    std::vector<PatternTracker> trackers_;
    Word prefix_;
    std::vector<int> queue_;  // open values in order; active part starts at qhead_
    int qhead_ = 0;
    std::vector<bool> opened_;
};

// The machine-word accumulator is safe while the whole space fits in it:
// (2n)!/(n+1)! stays below 2^64 through n = 15, far past exhaustive reach.
BigInt count_leaves(AvoiderDfs& dfs, int n) {
    if (n <= 15) {
        std::uint64_t count = 0;
        dfs.run([&](const Word&) { ++count; });
        return count;
    }
    BigInt count = 0;
    dfs.run([&](const Word&) { ++count; });
    return count;
}

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

}  // namespace

void for_each_nonnesting(int n, const WordVisitor& visit) {
    for_each_avoider(n, PatternSet{}, visit);
}

void for_each_avoider(int n, const PatternSet& ps, const WordVisitor& visit) {
    check_n(n);
    AvoiderDfs dfs(n, ps);
    dfs.run([&](const Word& w) { visit(w); });
}

std::vector<NonnestingPermutation> generate_nonnesting(int n) {
    return generate_avoiders(n, PatternSet{});
}

std::vector<NonnestingPermutation> generate_avoiders(int n, const PatternSet& ps) {
    std::vector<NonnestingPermutation> out;
    for_each_avoider(n, ps, [&](const Word& w) {
        out.push_back(NonnestingPermutation::unchecked(w, n));
    });
    return out;
}

BigInt count_avoiders(int n, const PatternSet& ps, int workers) {
    check_n(n);
    if (workers <= 1 || n < 2) {
        AvoiderDfs dfs(n, ps);
        return count_leaves(dfs, n);
    }

    // Partition at depth 2; each task replays its two-letter prefix. The
    // first letter is always an open, after which every value is a legal
    // candidate (b == a closes it, anything else opens fresh).
    std::vector<std::array<int, 2>> tasks;
    {
        AvoiderDfs probe(n, ps);
        for (int a = 1; a <= n; ++a) {
            if (!probe.try_push(a)) continue;
            for (int b = 1; b <= n; ++b) {
                if (!probe.try_push(b)) continue;
                tasks.push_back({a, b});
                probe.pop();
            }
            probe.pop();
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<BigInt> partial(workers, 0);
    auto work = [&](int id) {
        BigInt local = 0;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            AvoiderDfs dfs(n, ps);
            bool ok = dfs.try_push(tasks[i][0]) && dfs.try_push(tasks[i][1]);
            if (!ok) continue;  // unreachable; tasks were probed alive
            local += count_leaves(dfs, n);
        }
        partial[id] = std::move(local);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
    return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

BigInt count_avoiders_naive(int n, const PatternSet& ps) {
    BigInt count = 0;
    for_each_nonnesting(n, [&](const Word& w) {
        if (avoids_all(w, ps)) ++count;
    });
    return count;
}

void for_each_sn_avoider(int n, const PatternSet& sigma, const WordVisitor& visit) {
    check_n(n);
    Word perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (avoids_all(perm, sigma)) visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

BigInt count_sn_avoiders(int n, const PatternSet& sigma) {
    BigInt count = 0;
    for_each_sn_avoider(n, sigma, [&](const Word&) { ++count; });
    return count;
}

IntPolynomial descent_polynomial(int n, const PatternSet& ps) {
    std::vector<BigInt> coeffs(n == 0 ? 1 : 2 * n, 0);
    for_each_avoider(n, ps, [&](const Word& w) { ++coeffs[descent_count(w)]; });
    return IntPolynomial(std::move(coeffs));
}

}  // namespace nonnest
