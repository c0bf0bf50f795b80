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

#include "redlab/relation.h"

#include <algorithm>

namespace redlab {

Transducer::Transducer(Alphabet alphabet, int num_states,
                       std::vector<TransducerArc> arcs, int initial,
                       std::vector<bool> finals)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      arcs_(std::move(arcs)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (num_states_ < 1) throw Error("transducer needs at least one state");
  if (initial_ < 0 || initial_ >= num_states_) {
    throw Error("transducer initial state out of range");
  }
  if (static_cast<int>(finals_.size()) != num_states_) {
    throw Error("transducer final flags do not match the state count");
  }
  for (const auto &a : arcs_) {
    if (a.from < 0 || a.from >= num_states_ || a.to < 0 || a.to >= num_states_) {
      throw Error("transducer arc endpoint out of range");
    }
    if (a.count < 0) throw Error("transducer arc with negative output count");
    if (a.input.empty() && a.count == 0) {
      throw Error("transducer arc reads nothing and emits nothing");
    }
    for (Symbol s : a.input) {
      if (s < 0 || s >= alphabet_.size()) {
        throw Error("transducer arc symbol outside the alphabet");
      }
    }
  }
}

namespace {

// Mutable working form used by the combinators. Invariant after Normalize():
// the initial state has no incoming arcs.
struct Machine {
  int num_states = 0;
  std::vector<TransducerArc> arcs;
  int initial = 0;
  std::vector<bool> finals;

  int AddState(bool final = false) {
    finals.push_back(final);
    return num_states++;
  }

  // Copies `t` in, returning the offset of its states.
  int Embed(const Transducer &t) {
    const int off = num_states;
    for (int q = 0; q < t.num_states(); ++q) AddState(t.IsFinal(q));
    for (const auto &a : t.arcs()) {
      arcs.push_back({a.from + off, a.input, a.count, a.to + off});
    }
    return off;
  }

  std::vector<TransducerArc> OutArcs(int q) const {
    std::vector<TransducerArc> out;
    for (const auto &a : arcs) {
      if (a.from == q) out.push_back(a);
    }
    return out;
  }

  // Adds a copy of every arc leaving `src` so that it also leaves `dst`.
  void CopyOutArcs(int src, int dst) {
    for (auto a : OutArcs(src)) {
      a.from = dst;
      arcs.push_back(std::move(a));
    }
  }
};

bool HasIncoming(const Transducer &t, int q) {
  return std::any_of(t.arcs().begin(), t.arcs().end(),
                     [q](const TransducerArc &a) { return a.to == q; });
}

// Embeds `t` and returns the index of an entry state with no incoming arcs
// that recognizes the same relation as t's initial state.
int EmbedEntry(Machine &m, const Transducer &t) {
  const int off = m.Embed(t);
  const int init = t.initial() + off;
  if (!HasIncoming(t, t.initial())) return init;
  const int entry = m.AddState(t.IsFinal(t.initial()));
  m.CopyOutArcs(init, entry);
  return entry;
}

// Drops states that are unreachable from the initial state or cannot reach a
// final state, keeping the initial state in any case.
Transducer Trim(const Alphabet &alphabet, const Machine &m) {
  std::vector<char> fwd(m.num_states, 0), bwd(m.num_states, 0);
  std::vector<std::vector<int>> succ(m.num_states), pred(m.num_states);
  for (const auto &a : m.arcs) {
    succ[a.from].push_back(a.to);
    pred[a.to].push_back(a.from);
  }
  std::vector<int> stack{m.initial};
  fwd[m.initial] = 1;
  while (!stack.empty()) {
    const int q = stack.back();
    stack.pop_back();
    for (int r : succ[q]) {
      if (!fwd[r]) {
        fwd[r] = 1;
        stack.push_back(r);
      }
    }
  }
  for (int q = 0; q < m.num_states; ++q) {
    if (m.finals[q]) {
      bwd[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const int q = stack.back();
    stack.pop_back();
    for (int r : pred[q]) {
      if (!bwd[r]) {
        bwd[r] = 1;
        stack.push_back(r);
      }
    }
  }
  std::vector<int> remap(m.num_states, -1);
  int n = 0;
  remap[m.initial] = n++;
  for (int q = 0; q < m.num_states; ++q) {
    if (q != m.initial && fwd[q] && bwd[q]) remap[q] = n++;
  }
  std::vector<bool> finals(n, false);
  for (int q = 0; q < m.num_states; ++q) {
    if (remap[q] >= 0) finals[remap[q]] = m.finals[q];
  }
  std::vector<TransducerArc> arcs;
  for (const auto &a : m.arcs) {
    if (remap[a.from] >= 0 && remap[a.to] >= 0 && bwd[a.to]) {
      arcs.push_back({remap[a.from], a.input, a.count, remap[a.to]});
    }
  }
  return Transducer(alphabet, n, std::move(arcs), 0, std::move(finals));
}

void CheckSameAlphabet(const Relation &a, const Relation &b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error("relation combinator: alphabet mismatch");
  }
}

}  // namespace

Relation BuildAtom(const Alphabet &alphabet, const Word &input, int count) {
  if (input.empty() && count == 0) {
    throw Error("atom (epsilon, 0) is only available as Identity()");
  }
  if (count < 0) throw Error("atom with negative count");
  return Relation(
      Transducer(alphabet, 2, {{0, input, count, 1}}, 0, {false, true}));
}

Relation Identity(const Alphabet &alphabet) {
  return Relation(Transducer(alphabet, 1, {}, 0, {true}));
}

Relation Union(const Relation &a, const Relation &b) {
  CheckSameAlphabet(a, b);
  Machine m;
  m.initial = m.AddState();
  const int ea = EmbedEntry(m, a.transducer());
  const int eb = EmbedEntry(m, b.transducer());
  m.CopyOutArcs(ea, m.initial);
  m.CopyOutArcs(eb, m.initial);
  m.finals[m.initial] = m.finals[ea] || m.finals[eb];
  return Relation(Trim(a.alphabet(), m));
}

Relation Concat(const Relation &a, const Relation &b) {
  CheckSameAlphabet(a, b);
  Machine m;
  const int ea = EmbedEntry(m, a.transducer());
  const int a_end = m.num_states;
  const int eb = EmbedEntry(m, b.transducer());
  m.initial = ea;
  const bool b_accepts_empty = m.finals[eb];
  for (int q = 0; q < a_end; ++q) {
    if (!m.finals[q]) continue;
    m.CopyOutArcs(eb, q);
    m.finals[q] = b_accepts_empty;
  }
  return Relation(Trim(a.alphabet(), m));
}

Relation Star(const Relation &a) {
  Machine m;
  m.initial = m.AddState(/*final=*/true);
  const int ea = EmbedEntry(m, a.transducer());
  m.CopyOutArcs(ea, m.initial);
  for (int q = 0; q < m.num_states; ++q) {
    if (q != m.initial && m.finals[q]) m.CopyOutArcs(ea, q);
  }
  return Relation(Trim(a.alphabet(), m));
}

Relation Plus(const Relation &a) { return Concat(a, Star(a)); }

Relation Combine(Combinator kind, std::span<const Relation> args) {
  switch (kind) {
    case Combinator::kUnion:
    case Combinator::kConcat:
      if (args.size() != 2) throw Error("union/concat take two arguments");
      return kind == Combinator::kUnion ? Union(args[0], args[1])
                                        : Concat(args[0], args[1]);
    case Combinator::kStar:
    case Combinator::kPlus:
      if (args.size() != 1) throw Error("star/plus take one argument");
      return kind == Combinator::kStar ? Star(args[0]) : Plus(args[0]);
  }
  throw Error("unknown combinator");
}

Relation UnionAll(std::span<const Relation> rs) {
  if (rs.empty()) throw Error("UnionAll of nothing");
  Relation out = rs[0];
  for (size_t i = 1; i < rs.size(); ++i) out = Union(out, rs[i]);
  return out;
}

Relation ConcatAll(std::span<const Relation> rs) {
  if (rs.empty()) throw Error("ConcatAll of nothing");
  Relation out = rs[0];
  for (size_t i = 1; i < rs.size(); ++i) out = Concat(out, rs[i]);
  return out;
}

bool Contains(const Relation &rel, const UnaryPair &pair) {
  const Transducer &t = rel.transducer();
  if (pair.count < 0) return false;
  for (Symbol s : pair.input) {
    if (s < 0 || s >= t.alphabet().size()) return false;
  }
  const size_t len = pair.input.size();
  const size_t target = static_cast<size_t>(pair.count);
  const size_t nq = static_cast<size_t>(t.num_states());

  std::vector<std::vector<const TransducerArc *>> out(nq);
  for (const auto &a : t.arcs()) out[a.from].push_back(&a);

  // Every arc advances position + count, so each cell is expanded once.
  std::vector<bool> seen((len + 1) * (target + 1) * nq, false);
  auto key = [&](size_t pos, size_t cnt, size_t q) {
    return (pos * (target + 1) + cnt) * nq + q;
  };
  struct Cell {
    size_t pos, cnt;
    int q;
  };
  std::vector<Cell> stack{{0, 0, t.initial()}};
  seen[key(0, 0, t.initial())] = true;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    if (c.pos == len && c.cnt == target && t.IsFinal(c.q)) return true;
    for (const TransducerArc *a : out[c.q]) {
      const size_t npos = c.pos + a->input.size();
      const size_t ncnt = c.cnt + static_cast<size_t>(a->count);
      if (npos > len || ncnt > target) continue;
      if (!std::equal(a->input.begin(), a->input.end(),
                      pair.input.begin() + static_cast<long>(c.pos))) {
        continue;
      }
      const size_t k = key(npos, ncnt, static_cast<size_t>(a->to));
      if (seen[k]) continue;
      seen[k] = true;
      stack.push_back({npos, ncnt, a->to});
    }
  }
  return false;
}

Nfa InputLanguage(const Relation &rel) {
  const Transducer &t = rel.transducer();
  NfaBuilder b(t.alphabet().size());
  for (int q = 0; q < t.num_states(); ++q) {
    b.AddState();
    b.SetFinal(q, t.IsFinal(q));
  }
  b.AddInitial(t.initial());
  for (const auto &a : t.arcs()) b.AddChain(a.from, a.input, a.to);
  return b.Build();
}

}  // namespace redlab
