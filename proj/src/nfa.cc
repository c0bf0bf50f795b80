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

#include "redlab/nfa.h"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace redlab {

namespace {

void SortUnique(std::vector<int> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Fixed-width bit set over the states of one automaton.
class StateSet {
 public:
  explicit StateSet(int n) : bits_((n + 63) / 64, 0) {}

  void Insert(int q) { bits_[q >> 6] |= uint64_t{1} << (q & 63); }
  bool Contains(int q) const { return (bits_[q >> 6] >> (q & 63)) & 1; }

  bool SubsetOf(const StateSet &other) const {
    for (size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~other.bits_[i]) return false;
    }
    return true;
  }

  bool Empty() const {
    return std::all_of(bits_.begin(), bits_.end(),
                       [](uint64_t b) { return b == 0; });
  }

  template <typename F>
  void ForEach(F &&f) const {
    for (size_t i = 0; i < bits_.size(); ++i) {
      uint64_t b = bits_[i];
      while (b) {
        const int bit = __builtin_ctzll(b);
        f(static_cast<int>(i * 64 + bit));
        b &= b - 1;
      }
    }
  }

 private:
  std::vector<uint64_t> bits_;
};

}  // namespace

std::vector<int> Nfa::Finals() const {
  std::vector<int> out;
  for (int q = 0; q < num_states(); ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

size_t Nfa::NumArcs() const {
  size_t n = 0;
  for (const auto &a : arcs_) n += a.size();
  return n;
}

std::vector<int> Nfa::Step(const std::vector<int> &states,
                           Symbol symbol) const {
  std::vector<int> out;
  for (int q : states) {
    const auto &arcs = arcs_[q];
    auto it = std::lower_bound(arcs.begin(), arcs.end(), NfaArc{symbol, -1});
    for (; it != arcs.end() && it->symbol == symbol; ++it) out.push_back(it->to);
  }
  SortUnique(out);
  return out;
}

bool Nfa::Accepts(const Word &w) const {
  std::vector<int> cur = initial_;
  for (Symbol s : w) {
    if (s < 0 || s >= alphabet_size_) return false;
    cur = Step(cur, s);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](int q) { return final_[q]; });
}

int NfaBuilder::AddState() {
  arcs_.emplace_back();
  eps_.emplace_back();
  final_.push_back(false);
  return num_states() - 1;
}

void NfaBuilder::AddArc(int from, Symbol symbol, int to) {
  if (symbol < 0 || symbol >= alphabet_size_) {
    throw Error("NFA arc symbol out of alphabet");
  }
  arcs_.at(from).push_back({symbol, to});
  (void)arcs_.at(to);
}

void NfaBuilder::AddEpsilon(int from, int to) {
  eps_.at(from).push_back(to);
  (void)eps_.at(to);
}

void NfaBuilder::AddInitial(int q) {
  (void)arcs_.at(q);
  initial_.push_back(q);
}

void NfaBuilder::SetFinal(int q, bool final) { final_.at(q) = final; }

void NfaBuilder::AddChain(int from, const Word &w, int to) {
  if (w.empty()) {
    AddEpsilon(from, to);
    return;
  }
  int cur = from;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const int next = AddState();
    AddArc(cur, w[i], next);
    cur = next;
  }
  AddArc(cur, w.back(), to);
}

Nfa NfaBuilder::Build() const {
  const int n = num_states();
  Nfa out;
  out.alphabet_size_ = alphabet_size_;
  out.arcs_.resize(n);
  out.final_.assign(n, false);
  out.initial_ = initial_;
  SortUnique(out.initial_);

  std::vector<int> closure;
  std::vector<char> seen(n, 0);
  for (int q = 0; q < n; ++q) {
    closure.assign(1, q);
    std::fill(seen.begin(), seen.end(), 0);
    seen[q] = 1;
    for (size_t i = 0; i < closure.size(); ++i) {
      for (int r : eps_[closure[i]]) {
        if (!seen[r]) {
          seen[r] = 1;
          closure.push_back(r);
        }
      }
    }
    auto &arcs = out.arcs_[q];
    for (int r : closure) {
      arcs.insert(arcs.end(), arcs_[r].begin(), arcs_[r].end());
      if (final_[r]) out.final_[q] = true;
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  }
  return out;
}

Nfa NfaFromWords(int alphabet_size, const std::vector<Word> &words) {
  NfaBuilder b(alphabet_size);
  const int init = b.AddState();
  const int fin = b.AddState();
  b.AddInitial(init);
  b.SetFinal(fin);
  for (const auto &w : words) b.AddChain(init, w, fin);
  return b.Build();
}

std::vector<Word> Enumerate(const Nfa &a, int max_len) {
  std::vector<Word> out;
  struct Item {
    Word word;
    std::vector<int> states;
  };
  std::vector<Item> level{{Word{}, a.initial()}};
  for (int len = 0; len <= max_len && !level.empty(); ++len) {
    for (const auto &item : level) {
      if (std::any_of(item.states.begin(), item.states.end(),
                      [&](int q) { return a.IsFinal(q); })) {
        out.push_back(item.word);
      }
    }
    if (len == max_len) break;
    std::vector<Item> next;
    for (const auto &item : level) {
      for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        auto states = a.Step(item.states, s);
        if (states.empty()) continue;
        Word w = item.word;
        w.push_back(s);
        next.push_back({std::move(w), std::move(states)});
      }
    }
    level = std::move(next);
  }
  return out;
}

std::optional<Word> Inclusion(const Nfa &a, const Nfa &b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw Error("inclusion: alphabet mismatch");
  }
  const int nb = b.num_states();
  // Nodes reached by the same word share a word id and sit contiguously in
  // the queue; expanding them together, symbol by symbol, keeps discovery in
  // shortlex order of words.
  struct Node {
    int a_state;
    StateSet b_states;
    int parent;
    Symbol symbol;
    int word_id;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> kept(a.num_states());
  std::deque<int> queue;
  int next_word_id = 0;

  auto rejects = [&](const StateSet &s) {
    bool any_final = false;
    s.ForEach([&](int q) { any_final = any_final || b.IsFinal(q); });
    return !any_final;
  };
  auto word_of = [&](int idx) {
    Word w;
    for (; nodes[idx].parent >= 0; idx = nodes[idx].parent) {
      w.push_back(nodes[idx].symbol);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  // Returns the node index, or -1 when subsumed.
  auto discover = [&](int p, StateSet s, int parent, Symbol sym, int word_id) {
    for (int idx : kept[p]) {
      if (nodes[idx].b_states.SubsetOf(s)) return -1;
    }
    nodes.push_back({p, std::move(s), parent, sym, word_id});
    const int idx = static_cast<int>(nodes.size()) - 1;
    kept[p].push_back(idx);
    queue.push_back(idx);
    return idx;
  };

  StateSet init_b(nb);
  for (int q : b.initial()) init_b.Insert(q);
  const int root_word = next_word_id++;
  for (int p : a.initial()) {
    const int idx = discover(p, init_b, -1, -1, root_word);
    if (idx >= 0 && a.IsFinal(p) && rejects(nodes[idx].b_states)) {
      return Word{};
    }
  }

  std::vector<int> group;
  while (!queue.empty()) {
    group.clear();
    const int word_id = nodes[queue.front()].word_id;
    while (!queue.empty() && nodes[queue.front()].word_id == word_id) {
      group.push_back(queue.front());
      queue.pop_front();
    }
    for (Symbol sym = 0; sym < a.alphabet_size(); ++sym) {
      const int child_word = next_word_id++;
      for (int idx : group) {
        StateSet next_b(nb);
        nodes[idx].b_states.ForEach([&](int q) {
          const auto &arcs = b.Arcs(q);
          auto it = std::lower_bound(arcs.begin(), arcs.end(), NfaArc{sym, -1});
          for (; it != arcs.end() && it->symbol == sym; ++it) {
            next_b.Insert(it->to);
          }
        });
        const auto &arcs = a.Arcs(nodes[idx].a_state);
        auto it = std::lower_bound(arcs.begin(), arcs.end(), NfaArc{sym, -1});
        for (; it != arcs.end() && it->symbol == sym; ++it) {
          const int child = discover(it->to, next_b, idx, sym, child_word);
          if (child >= 0 && a.IsFinal(it->to) && rejects(nodes[child].b_states)) {
            return word_of(child);
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace redlab
