// Copyright 2026 The redlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "redlab/pcp.h"

#include <functional>

namespace redlab {

namespace {

Alphabet MakeAlphabet(int n) {
  std::vector<std::string> names{"a", "b"};
  for (int t = 1; t <= n; ++t) names.push_back("i" + std::to_string(t));
  return Alphabet(std::move(names));
}

bool IsAbWord(const std::string &w) {
  if (w.empty()) return false;
  for (char ch : w) {
    if (ch != 'a' && ch != 'b') return false;
  }
  return true;
}

Word IndexWord(const std::vector<int> &seq, size_t from, size_t to) {
  Word out;
  for (size_t i = from; i < to; ++i) {
    out.push_back(PcpInstance::IndexSymbol(seq[i]));
  }
  return out;
}

}  // namespace

PcpInstance::PcpInstance(std::vector<std::pair<std::string, std::string>> pairs)
    : pairs_(std::move(pairs)), alphabet_(MakeAlphabet(static_cast<int>(pairs_.size()))) {
  if (pairs_.empty()) throw Error("PCP instance needs at least one pair");
  for (const auto &[u, v] : pairs_) {
    if (!IsAbWord(u) || !IsAbWord(v)) {
      throw Error("PCP words must be nonempty words over {a,b}: (" + u + ", " +
                  v + ")");
    }
  }
}

Word PcpInstance::Letters(const std::string &ab) {
  Word out;
  out.reserve(ab.size());
  for (char ch : ab) {
    if (ch == 'a') {
      out.push_back(kA);
    } else if (ch == 'b') {
      out.push_back(kB);
    } else {
      throw Error(std::string("not a letter of {a,b}: '") + ch + "'");
    }
  }
  return out;
}

std::string PcpInstance::Concatenation(Side side,
                                       const std::vector<int> &seq) const {
  std::string out;
  for (int t : seq) out += Get(side, t);
  return out;
}

bool PcpInstance::IsSolution(const std::vector<int> &seq) const {
  if (seq.empty()) return false;
  for (int t : seq) {
    if (t < 1 || t > size()) return false;
  }
  return Concatenation(Side::kU, seq) == Concatenation(Side::kV, seq);
}

std::vector<std::string> MismatchWords(const PcpInstance &inst, Side side,
                                       int index, size_t cap) {
  const std::string &word = inst.Get(side, index);
  const size_t len = word.size();
  if (len >= 63 || (size_t{1} << len) > cap) {
    throw CapExceeded("mismatch set for index " + std::to_string(index) +
                      " has 2^" + std::to_string(len) +
                      " entries, above the cap of " + std::to_string(cap));
  }
  std::vector<std::string> out;
  for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
    std::string mu(len, 'a');
    for (size_t i = 0; i < len; ++i) {
      if ((bits >> (len - 1 - i)) & 1) mu[i] = 'b';
    }
    if (mu != word) out.push_back(std::move(mu));
  }
  return out;
}

SideRelations BuildSide(const PcpInstance &inst, Side side,
                        size_t mismatch_cap) {
  const Alphabet &sigma = inst.alphabet();
  const int n = inst.size();
  auto atom = [&](Word w, int count) { return BuildAtom(sigma, w, count); };
  auto k = [&](int t) { return static_cast<int>(inst.Get(side, t).size()); };

  std::vector<Relation> l1_atoms, index_atoms, l2_pivots;
  for (int t = 1; t <= n; ++t) {
    const Word it{PcpInstance::IndexSymbol(t)};
    l1_atoms.push_back(atom(it, k(t) + 1));
    index_atoms.push_back(atom(it, 1));
    for (int j = 1; j <= k(t); ++j) l2_pivots.push_back(atom(it, j));
  }
  const Relation l1 = Star(UnionAll(l1_atoms));
  const Relation index_star = Star(UnionAll(index_atoms));
  const Relation single = Union(atom({PcpInstance::kA}, 1), atom({PcpInstance::kB}, 1));
  const Relation twice = Union(atom({PcpInstance::kA}, 2), atom({PcpInstance::kB}, 2));

  // The unions over (t, j) and (t, mu) are factored past the shared prefix L1.
  const Relation l2 = ConcatAll(std::vector<Relation>{l1, UnionAll(l2_pivots), index_star});
  const Relation l3 = Concat(l2, Star(single));
  const Relation l4 = ConcatAll(std::vector<Relation>{l1, Star(single), Plus(twice)});

  std::vector<Relation> per_index;
  for (int t = 1; t <= n; ++t) {
    std::vector<Relation> mus;
    for (const auto &mu : MismatchWords(inst, side, t, mismatch_cap)) {
      mus.push_back(atom(PcpInstance::Letters(mu), 2 * k(t)));
    }
    per_index.push_back(ConcatAll(std::vector<Relation>{
        atom({PcpInstance::IndexSymbol(t)}, 1), index_star, Star(single),
        UnionAll(mus)}));
  }
  const Relation l5 = ConcatAll(std::vector<Relation>{l1, UnionAll(per_index), Star(twice)});

  Relation all = Union(Union(l3, l4), l5);
  return {l1, l2, l3, l4, l5, all};
}

Relation BuildL0(const PcpInstance &inst) {
  const Alphabet &sigma = inst.alphabet();
  std::vector<Relation> index_atoms;
  for (int t = 1; t <= inst.size(); ++t) {
    index_atoms.push_back(BuildAtom(sigma, {PcpInstance::IndexSymbol(t)}, 1));
  }
  const Relation letters = Union(BuildAtom(sigma, {PcpInstance::kA}, 2),
                                 BuildAtom(sigma, {PcpInstance::kB}, 2));
  return Concat(Plus(UnionAll(index_atoms)), Plus(letters));
}

UnaryPair L0Element(const std::vector<int> &seq, const std::string &letters) {
  UnaryPair p;
  p.input = IndexWord(seq, 0, seq.size());
  Append(p.input, PcpInstance::Letters(letters));
  p.count = static_cast<int64_t>(seq.size() + 2 * letters.size());
  return p;
}

UnaryPair SolutionWitness(const PcpInstance &inst, const std::vector<int> &seq) {
  if (!inst.IsSolution(seq)) {
    throw Error("index sequence is not a solution of the instance");
  }
  return L0Element(seq, inst.Concatenation(Side::kU, seq));
}

std::optional<std::vector<int>> BruteForcePcp(const PcpInstance &inst,
                                              int max_len) {
  std::vector<int> seq;
  std::function<bool(int, const std::string &, const std::string &)> dfs =
      [&](int remaining, const std::string &u, const std::string &v) {
        if (remaining == 0) return u == v;
        for (int t = 1; t <= inst.size(); ++t) {
          std::string nu = u + inst.U(t);
          std::string nv = v + inst.V(t);
          const size_t common = std::min(nu.size(), nv.size());
          if (nu.compare(0, common, nv, 0, common) != 0) continue;
          seq.push_back(t);
          if (dfs(remaining - 1, nu, nv)) return true;
          seq.pop_back();
        }
        return false;
      };
  for (int len = 1; len <= max_len; ++len) {
    seq.clear();
    if (dfs(len, "", "")) return seq;
  }
  return std::nullopt;
}

std::vector<ClaimViolation> ScanClaim(const PcpInstance &inst, int max_seq,
                                      int max_word) {
  const Relation lu = BuildSide(inst, Side::kU).side;
  const Relation lv = BuildSide(inst, Side::kV).side;
  std::vector<ClaimViolation> out;

  std::vector<std::vector<int>> seqs{{}};
  for (int s = 1; s <= max_seq; ++s) {
    std::vector<std::vector<int>> longer;
    for (const auto &prefix : seqs) {
      if (static_cast<int>(prefix.size()) != s - 1) continue;
      for (int t = 1; t <= inst.size(); ++t) {
        auto next = prefix;
        next.push_back(t);
        longer.push_back(std::move(next));
      }
    }
    for (const auto &seq : longer) {
      const std::string cu = inst.Concatenation(Side::kU, seq);
      const std::string cv = inst.Concatenation(Side::kV, seq);
      for (int len = 1; len <= max_word; ++len) {
        for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
          std::string letters(static_cast<size_t>(len), 'a');
          for (int i = 0; i < len; ++i) {
            if ((bits >> (len - 1 - i)) & 1) letters[static_cast<size_t>(i)] = 'b';
          }
          const UnaryPair el = L0Element(seq, letters);
          const bool in_u = Contains(lu, el);
          const bool in_v = Contains(lv, el);
          if (in_u != (letters != cu)) {
            out.push_back({Side::kU, seq, letters, in_u, letters != cu});
          }
          if (in_v != (letters != cv)) {
            out.push_back({Side::kV, seq, letters, in_v, letters != cv});
          }
        }
      }
    }
    seqs = std::move(longer);
  }
  return out;
}

std::optional<MismatchExplanation> ExplainMismatch(const PcpInstance &inst,
                                                   Side side,
                                                   const std::vector<int> &seq,
                                                   const std::string &letters) {
  const std::string concat = inst.Concatenation(side, seq);
  if (letters == concat) return std::nullopt;
  const int s = static_cast<int>(seq.size());
  auto k = [&](int pos) {  // 1-based position in seq
    return static_cast<int64_t>(inst.Get(side, seq[pos - 1]).size());
  };
  const int64_t total = static_cast<int64_t>(concat.size());
  const int64_t len = static_cast<int64_t>(letters.size());
  const Word w1 = PcpInstance::Letters(letters);

  MismatchExplanation ex;
  if (len > total) {
    ex.which = MismatchCase::kLonger;
    ex.factors.push_back({IndexWord(seq, 0, seq.size()), total + s});
    ex.factors.push_back({Word(w1.begin(), w1.begin() + total), total});
    ex.factors.push_back({Word(w1.begin() + total, w1.end()), 2 * (len - total)});
    return ex;
  }

  // Prefix sums of the block lengths before position beta.
  int64_t before = 0;
  int beta = 1;
  if (len < total) {
    ex.which = MismatchCase::kShorter;
    while (before + k(beta) <= len) before += k(beta++);
    const int64_t j = len - before + 1;  // 1 <= j <= k(beta)
    ex.block = beta;
    ex.factors.push_back({IndexWord(seq, 0, beta - 1), before + (beta - 1)});
    ex.factors.push_back({{PcpInstance::IndexSymbol(seq[beta - 1])}, j});
    ex.factors.push_back({IndexWord(seq, beta, seq.size()), s - beta});
    ex.factors.push_back({w1, len});
    return ex;
  }

  ex.which = MismatchCase::kEqualLength;
  while (letters.compare(before, k(beta), inst.Get(side, seq[beta - 1])) == 0) {
    before += k(beta++);
  }
  ex.block = beta;
  const int64_t kb = k(beta);
  ex.factors.push_back({IndexWord(seq, 0, beta - 1), before + (beta - 1)});
  ex.factors.push_back({{PcpInstance::IndexSymbol(seq[beta - 1])}, 1});
  ex.factors.push_back({IndexWord(seq, beta, seq.size()), s - beta});
  ex.factors.push_back({Word(w1.begin(), w1.begin() + before), before});
  ex.factors.push_back({Word(w1.begin() + before, w1.begin() + before + kb), 2 * kb});
  ex.factors.push_back({Word(w1.begin() + before + kb, w1.end()),
                        2 * (len - before - kb)});
  return ex;
}

}  // namespace redlab
