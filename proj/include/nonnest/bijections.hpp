#pragma once

#include "nonnest/nonnesting.hpp"
#include "nonnest/word.hpp"

#include <set>
#include <string>

namespace nonnest {

// Dyck words are stored as strings over {U, D}. A Dyck word is balanced with
// no prefix holding more Ds than Us; a grand Dyck word is merely balanced.
using DyckWord = std::string;

bool is_balanced_ud(const DyckWord& w);
bool is_dyck_word(const DyckWord& w);

// Matching of [2n] <-> Dyck word of length 2n: opens become U, closes D;
// the D closes the oldest open arc.
DyckWord dyck_from_matching(const Matching& m, int length);
Matching matching_from_dyck(const DyckWord& w);

// The unique 112-avoiding labeling of a nonnesting matching: arc labels
// decrease by open position.
NonnestingPermutation label_112(const Matching& m);

// S_n <-> C_n(121): duplicate each entry / strip adjacent duplicates.
NonnestingPermutation duplicate(const Word& perm);
Word undup(const NonnestingPermutation& p);

// First copy of each entry -> U, second copy -> D. Depends only on the
// matching of p.
DyckWord to_dyck(const NonnestingPermutation& p);

// Bijection C_n(1132,2213,2231) <-> D_{n+1} minus the sawtooth (UD)^{n+1}.
// encode throws if p contains one of the three patterns; decode throws on
// the sawtooth or a non-Dyck input.
DyckWord encode_1132_2213_2231(const NonnestingPermutation& p);
NonnestingPermutation decode_1132_2213_2231(const DyckWord& w);

// Injective encoding of C_n(1322,2231). The decomposition pi = alpha 1 beta
// 1 gamma splits {2..n} into A, B1, B2, C; the three cases below partition
// the domain by where min(A u C) lives.
struct GrandDyckCode {
    enum class Kind {
        kNoOuter,   // A u C empty: subset is B1
        kEndsDD,    // min in A: grand Dyck word ends DD, subset is B2
        kEndsUU,    // min in C: grand Dyck word ends UU, subset is B1
    };
    Kind kind = Kind::kNoOuter;
    DyckWord steps;          // empty for kNoOuter
    std::set<int> subset;    // subset of {2..k+1}

    bool operator==(const GrandDyckCode& o) const {
        return kind == o.kind && steps == o.steps && subset == o.subset;
    }
    bool operator<(const GrandDyckCode& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (steps != o.steps) return steps < o.steps;
        return subset < o.subset;
    }
};

GrandDyckCode encode_1322_2231(const NonnestingPermutation& p);

}  // namespace nonnest
