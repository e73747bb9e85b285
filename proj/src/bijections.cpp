#include "nonnest/bijections.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace nonnest {

bool is_balanced_ud(const DyckWord& w) {
    int bal = 0;
    for (char c : w) {
        if (c == 'U') ++bal;
        else if (c == 'D') --bal;
        else return false;
    }
    return bal == 0;
}

bool is_dyck_word(const DyckWord& w) {
    int bal = 0;
    for (char c : w) {
        if (c == 'U') ++bal;
        else if (c == 'D') --bal;
        else return false;
        if (bal < 0) return false;
    }
    return bal == 0;
}

DyckWord dyck_from_matching(const Matching& m, int length) {
    DyckWord w(static_cast<std::size_t>(length), 'D');
    for (const auto& [open, close] : m.arcs) {
        if (open < 1 || close > length)
            throw std::invalid_argument("arc positions out of range");
        w[open - 1] = 'U';
    }
    return w;
}

Matching matching_from_dyck(const DyckWord& w) {
    if (!is_dyck_word(w)) throw std::invalid_argument("not a Dyck word");
    Matching m;
    std::deque<int> open;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 'U') {
            open.push_back(i + 1);
        } else {
            m.arcs.emplace_back(open.front(), i + 1);  // close the oldest arc
            open.pop_front();
        }
    }
    std::sort(m.arcs.begin(), m.arcs.end());
    return m;
}

NonnestingPermutation label_112(const Matching& m) {
    int n = static_cast<int>(m.arcs.size());
    for (std::size_t i = 1; i < m.arcs.size(); ++i)
        if (m.arcs[i].second < m.arcs[i - 1].second)
            throw std::invalid_argument("label_112: matching is nesting");
    Word w(2 * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int label = n - i;  // left endpoints carry decreasing labels
        w[m.arcs[i].first - 1] = label;
        w[m.arcs[i].second - 1] = label;
    }
    return NonnestingPermutation::unchecked(std::move(w), n);
}

NonnestingPermutation duplicate(const Word& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("duplicate: not a permutation of {1..n}");
        seen[v] = true;
    }
    Word w;
    w.reserve(2 * perm.size());
    for (int v : perm) {
        w.push_back(v);
        w.push_back(v);
    }
    return NonnestingPermutation::unchecked(std::move(w), n);
}

Word undup(const NonnestingPermutation& p) {
    Word out;
    out.reserve(p.n);
    for (std::size_t i = 0; i < p.word.size(); i += 2) {
        if (p.word[i] != p.word[i + 1])
            throw std::invalid_argument("undup: repeats are not adjacent");
        out.push_back(p.word[i]);
    }
    return out;
}

DyckWord to_dyck(const NonnestingPermutation& p) {
    DyckWord w;
    w.reserve(p.word.size());
    std::vector<bool> seen(static_cast<std::size_t>(p.n) + 1, false);
    for (int v : p.word) {
        w.push_back(seen[v] ? 'D' : 'U');
        seen[v] = true;
    }
    return w;
}

namespace {

struct OneDecomposition {
    Word alpha, beta, gamma;
    Word beta1, beta2;            // subsequences of beta by where the other copy lives
    std::set<int> A, B1, B2, C;   // partition of {2..n}
};

OneDecomposition decompose_at_ones(const NonnestingPermutation& p) {
    if (p.n < 1) throw std::invalid_argument("decomposition needs n >= 1");
    const Word& w = p.word;
    int first1 = -1, second1 = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 1) {
            if (first1 < 0) first1 = i;
            else second1 = i;
        }
    }
    OneDecomposition d;
    d.alpha.assign(w.begin(), w.begin() + first1);
    d.beta.assign(w.begin() + first1 + 1, w.begin() + second1);
    d.gamma.assign(w.begin() + second1 + 1, w.end());
    std::set<int> in_alpha(d.alpha.begin(), d.alpha.end());
    std::set<int> in_gamma(d.gamma.begin(), d.gamma.end());
    std::set<int> in_beta(d.beta.begin(), d.beta.end());
    if (in_beta.size() != d.beta.size())
        throw std::logic_error("decomposition: repeated entry between the 1s");
    for (int v = 2; v <= p.n; ++v) {
        bool a = in_alpha.count(v), b = in_beta.count(v), g = in_gamma.count(v);
        if (a && g) throw std::logic_error("decomposition: value on both sides of the 1s");
        if (b) {
            (a ? d.B1 : d.B2).insert(v);
        } else {
            (a ? d.A : d.C).insert(v);
        }
    }
    for (int v : d.beta) (d.B1.count(v) ? d.beta1 : d.beta2).push_back(v);
    return d;
}

Word restrict_to(const Word& w, const std::set<int>& values) {
    Word out;
    for (int v : w)
        if (values.count(v)) out.push_back(v);
    return out;
}

// First copy -> U, second -> D over an arbitrary twice-regular word.
DyckWord ud_of(const Word& w) {
    DyckWord d;
    d.reserve(w.size());
    std::set<int> seen;
    for (int v : w) d.push_back(seen.insert(v).second ? 'U' : 'D');
    return d;
}

void require_avoids(const NonnestingPermutation& p, const PatternSet& ps,
                    const char* who) {
    if (!avoids_all(p.word, ps))
        throw std::invalid_argument(std::string(who) + ": input contains a forbidden pattern");
}

const PatternSet& patterns_1132_2213_2231() {
    static const PatternSet ps = parse_pattern_set("1132,2213,2231");
    return ps;
}

const PatternSet& patterns_1322_2231() {
    static const PatternSet ps = parse_pattern_set("1322,2231");
    return ps;
}

}  // namespace

DyckWord encode_1132_2213_2231(const NonnestingPermutation& p) {
    require_avoids(p, patterns_1132_2213_2231(), "encode_1132_2213_2231");
    OneDecomposition d = decompose_at_ones(p);

    int i = 1 + static_cast<int>(d.B2.size());
    int j = i + static_cast<int>(d.C.size());
    // gamma must read 2 3 .. i (i+1)(i+1) .. jj
    {
        Word expect;
        for (int v = 2; v <= i; ++v) expect.push_back(v);
        for (int v = i + 1; v <= j; ++v) {
            expect.push_back(v);
            expect.push_back(v);
        }
        if (d.gamma != expect)
            throw std::logic_error("encode_1132_2213_2231: unexpected tail shape");
    }

    Word core = d.alpha;
    core.push_back(1);
    core.insert(core.end(), d.beta1.begin(), d.beta1.end());
    core.push_back(1);
    DyckWord w0 = ud_of(standardize(core));

    // Per-gap counts of beta2 entries among the beta1 run.
    int m = static_cast<int>(d.beta1.size()) + 1;
    std::vector<int> slot(m, 0);
    {
        int b1_seen = 0;
        for (int v : d.beta)
            if (d.B1.count(v)) ++b1_seen;
            else ++slot[b1_seen];
    }

    std::size_t last_u = w0.rfind('U');
    DyckWord w(w0.begin(), w0.begin() + last_u + 1);
    w += "UD";  // marks the first copy of 1
    for (int s = 0; s < m; ++s) {
        for (int c = 0; c < slot[s]; ++c) w += "UD";
        w += 'D';
    }
    for (int c = 0; c < j - i; ++c) w += "UD";

    if (static_cast<int>(w.size()) != 2 * (p.n + 1) || !is_dyck_word(w))
        throw std::logic_error("encode_1132_2213_2231: produced a non-Dyck word");
    return w;
}

NonnestingPermutation decode_1132_2213_2231(const DyckWord& w) {
    if (!is_dyck_word(w) || w.empty())
        throw std::invalid_argument("decode_1132_2213_2231: not a Dyck word");
    std::size_t pos = w.rfind("UU");
    if (pos == std::string::npos)
        throw std::invalid_argument("decode_1132_2213_2231: sawtooth has no preimage");

    int n = static_cast<int>(w.size()) / 2 - 1;

    // Items right of position pos: UD pairs interleaved with single Ds.
    std::vector<int> ud_depths;  // number of Ds seen before each UD item
    int d_count = 0;
    for (std::size_t idx = pos + 1; idx < w.size();) {
        if (w[idx] == 'U') {
            if (idx + 1 >= w.size() || w[idx + 1] != 'D')
                throw std::logic_error("decode: UU right of the marked pair");
            ud_depths.push_back(d_count);
            idx += 2;
        } else {
            ++d_count;
            ++idx;
        }
    }
    int m = d_count;
    if (ud_depths.empty() || ud_depths.front() != 0)
        throw std::logic_error("decode: missing marker pair");

    std::vector<int> slot(m, 0);
    int appended = 0, interleaved = 0;
    for (std::size_t t = 1; t < ud_depths.size(); ++t) {
        if (ud_depths[t] >= m) {
            ++appended;
        } else {
            ++slot[ud_depths[t]];
            ++interleaved;
        }
    }
    int i = 1 + interleaved;
    int j = i + appended;

    DyckWord w0(w.begin(), w.begin() + pos + 1);
    w0.append(static_cast<std::size_t>(m), 'D');
    Word sigma = label_112(matching_from_dyck(w0)).word;
    if (sigma.empty() || sigma.back() != 1)
        throw std::logic_error("decode: core word does not end with 1");
    if (static_cast<int>(sigma.size()) != 2 * (n - j + 1))
        throw std::logic_error("decode: inconsistent sizes");

    auto lift = [&](int v) { return v == 1 ? 1 : v + j - 1; };
    std::size_t first1 = std::find(sigma.begin(), sigma.end(), 1) - sigma.begin();
    Word alpha, beta1;
    for (std::size_t t = 0; t < first1; ++t) alpha.push_back(lift(sigma[t]));
    for (std::size_t t = first1 + 1; t + 1 < sigma.size(); ++t) beta1.push_back(lift(sigma[t]));
    if (static_cast<int>(beta1.size()) != m - 1)
        throw std::logic_error("decode: middle run size mismatch");

    Word beta;
    int next_b2 = 2;
    for (int s = 0; s < m; ++s) {
        for (int c = 0; c < slot[s]; ++c) beta.push_back(next_b2++);
        if (s < m - 1) beta.push_back(beta1[s]);
    }

    Word word = alpha;
    word.push_back(1);
    word.insert(word.end(), beta.begin(), beta.end());
    word.push_back(1);
    for (int v = 2; v <= i; ++v) word.push_back(v);
    for (int v = i + 1; v <= j; ++v) {
        word.push_back(v);
        word.push_back(v);
    }

    NonnestingPermutation p = NonnestingPermutation::from_word(std::move(word));
    require_avoids(p, patterns_1132_2213_2231(), "decode_1132_2213_2231");
    return p;
}

namespace {

DyckWord flipped_ud(const DyckWord& w) {
    DyckWord out = w;
    for (char& c : out) c = (c == 'U') ? 'D' : 'U';
    return out;
}

// The case of encode_1322_2231 in which the smallest element of A u C lies
// in A; produces the grand Dyck word ending DD plus the subset B2.
GrandDyckCode encode_1322_2231_min_in_a(const NonnestingPermutation& p) {
    OneDecomposition d = decompose_at_ones(p);

    // A u C is the top interval {m0..n}, split into maximal runs that
    // alternate A, C, A, ... starting inside A.
    std::vector<std::pair<std::set<int>, bool>> runs;  // (values, is_A)
    {
        std::set<int> outer;
        outer.insert(d.A.begin(), d.A.end());
        outer.insert(d.C.begin(), d.C.end());
        int prev = 0;
        bool prev_in_a = false;
        for (int v : outer) {
            bool in_a = d.A.count(v) > 0;
            if (prev != 0 && v != prev + 1)
                throw std::logic_error("grand Dyck encode: A u C is not an interval");
            if (runs.empty() || in_a != prev_in_a) runs.push_back({{}, in_a});
            runs.back().first.insert(v);
            prev = v;
            prev_in_a = in_a;
        }
        if (runs.empty() || !runs.front().second)
            throw std::logic_error("grand Dyck encode: expected min(A u C) in A");
    }

    DyckWord g;
    for (std::size_t r = runs.size(); r-- > 1;) {
        DyckWord chunk = ud_of(restrict_to(p.word, runs[r].first));
        if (!runs[r].second) std::reverse(chunk.begin(), chunk.end());
        g += chunk;
    }

    // Final block: A1 together with the B1 entries opened before the second
    // copy of a = min A1, and the two 1s.
    const std::set<int>& a1 = runs.front().first;
    int a = *a1.begin();
    int second_a = -1, seen_a = 0;
    for (int idx = 0; idx < static_cast<int>(p.word.size()); ++idx)
        if (p.word[idx] == a && ++seen_a == 2) second_a = idx;
    std::set<int> block = a1;
    block.insert(1);
    std::set<int> b1_left;
    for (int idx = 0; idx < second_a; ++idx)
        if (d.B1.count(p.word[idx])) b1_left.insert(p.word[idx]);
    block.insert(b1_left.begin(), b1_left.end());

    DyckWord chunk = ud_of(restrict_to(p.word, block));
    std::size_t last_u = chunk.rfind('U');
    if (last_u == std::string::npos || last_u == 0 || chunk[last_u - 1] != 'D')
        throw std::logic_error("grand Dyck encode: marker U not preceded by D");
    std::swap(chunk[last_u - 1], chunk[last_u]);
    g += chunk;

    if (g.size() < 2 || g[g.size() - 1] != 'D' || g[g.size() - 2] != 'D')
        throw std::logic_error("grand Dyck encode: word does not end DD");

    int k = static_cast<int>(d.B1.size() - b1_left.size() + d.B2.size());
    std::set<int> low;  // B1^R u B2 must be {2..k+1}
    for (int v : d.B1)
        if (!b1_left.count(v)) low.insert(v);
    low.insert(d.B2.begin(), d.B2.end());
    for (int v = 2; v <= k + 1; ++v)
        if (!low.count(v)) throw std::logic_error("grand Dyck encode: bad low segment");
    if (static_cast<int>(g.size()) != 2 * (p.n - k))
        throw std::logic_error("grand Dyck encode: wrong semilength");

    GrandDyckCode code;
    code.kind = GrandDyckCode::Kind::kEndsDD;
    code.steps = std::move(g);
    code.subset = d.B2;
    return code;
}

}  // namespace

GrandDyckCode encode_1322_2231(const NonnestingPermutation& p) {
    require_avoids(p, patterns_1322_2231(), "encode_1322_2231");
    OneDecomposition d = decompose_at_ones(p);

    if (d.A.empty() && d.C.empty()) {
        GrandDyckCode code;
        code.kind = GrandDyckCode::Kind::kNoOuter;
        code.subset = d.B1;
        return code;
    }

    int min_outer = std::min(d.A.empty() ? p.n + 1 : *d.A.begin(),
                             d.C.empty() ? p.n + 1 : *d.C.begin());
    if (d.A.count(min_outer)) return encode_1322_2231_min_in_a(p);

    // Symmetric case through reversal, which swaps A with C and B1 with B2.
    NonnestingPermutation r = NonnestingPermutation::unchecked(reversed(p.word), p.n);
    GrandDyckCode code = encode_1322_2231_min_in_a(r);
    code.kind = GrandDyckCode::Kind::kEndsUU;
    code.steps = flipped_ud(code.steps);
    if (code.subset != d.B1)
        throw std::logic_error("grand Dyck encode: reversal bookkeeping mismatch");
    return code;
}

}  // namespace nonnest
