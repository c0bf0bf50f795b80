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

#include "redlab/nds.h"

#include <algorithm>
#include <deque>
#include <set>

namespace redlab {

Nds::Nds(int lines, std::vector<NdsRule> rules) : lines_(lines) {
  if (lines_ < 1) throw Error("defense system needs at least one line");
  rows_.resize(static_cast<size_t>(lines_) * 2);
  for (auto &r : rules) {
    if (r.from_line < 1 || r.from_line > lines_ || r.to_line < 1 ||
        r.to_line > lines_) {
      throw Error("rule line out of range 1.." + std::to_string(lines_));
    }
    if (r.symbol != 0 && r.symbol != 1) throw Error("rule symbol must be 0 or 1");
    if (r.shift < -1 || r.shift > 1) throw Error("rule shift must be -1, 0 or 1");
    if (r.probability <= Rational(0) || r.probability > Rational(1)) {
      throw Error("rule probability must lie in (0, 1]");
    }
    rows_[static_cast<size_t>(r.from_line - 1) * 2 + r.symbol].push_back(r);
  }
  for (int k = 1; k <= lines_; ++k) {
    for (Symbol a = 0; a < 2; ++a) {
      Rational sum;
      for (const auto &r : Row(k, a)) sum += r.probability;
      if (sum != Rational(1)) {
        throw Error("rules for line " + std::to_string(k) + " on symbol " +
                    std::to_string(a) + " sum to " + sum.ToString() +
                    ", expected 1");
      }
    }
  }
}

std::span<const NdsRule> Nds::Row(int line, Symbol symbol) const {
  return rows_.at(static_cast<size_t>(line - 1) * 2 + static_cast<size_t>(symbol));
}

std::vector<NdsRule> Nds::Rules() const {
  std::vector<NdsRule> out;
  for (const auto &row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

size_t Nds::NumRules() const {
  size_t n = 0;
  for (const auto &row : rows_) n += row.size();
  return n;
}

Configuration Configuration::Decode(int64_t code, int s) {
  int64_t node = code / s;
  int64_t rem = code % s;
  if (rem < 0) {
    rem += s;
    --node;
  }
  return {node, static_cast<int>(rem) + 1};
}

SupportState InitialSupport() { return {Configuration{0, 1}}; }

SupportState StepSupport(const Nds &nds, const SupportState &support,
                         Symbol symbol) {
  SupportState out;
  for (const auto &c : support) {
    for (const auto &r : nds.Row(c.line, symbol)) {
      out.push_back({c.node + r.shift, r.to_line});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SupportState SupportAfter(const Nds &nds, const Word &w) {
  SupportState cur = InitialSupport();
  for (Symbol a : w) cur = StepSupport(nds, cur, a);
  return cur;
}

std::map<Configuration, Rational> AttackProbabilities(const Nds &nds,
                                                      const Word &w) {
  std::map<Configuration, Rational> cur{{Configuration{0, 1}, Rational(1)}};
  for (Symbol a : w) {
    std::map<Configuration, Rational> next;
    for (const auto &[c, p] : cur) {
      for (const auto &r : nds.Row(c.line, a)) {
        next[{c.node + r.shift, r.to_line}] += p * r.probability;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool IsCriticalSupport(const SupportState &support) {
  return std::none_of(support.begin(), support.end(),
                      [](const Configuration &c) { return c.node == 0; });
}

bool IsCritical(const Nds &nds, const Word &w) {
  return IsCriticalSupport(SupportAfter(nds, w));
}

std::optional<Word> SearchCritical(const Nds &nds, int max_len) {
  struct Node {
    SupportState support;
    int parent;
    Symbol symbol;
    int depth;
  };
  std::vector<Node> nodes{{InitialSupport(), -1, -1, 0}};
  std::set<SupportState> seen{nodes[0].support};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    if (nodes[idx].depth == max_len) continue;
    for (Symbol a = 0; a < 2; ++a) {
      SupportState next = StepSupport(nds, nodes[idx].support, a);
      if (!seen.insert(next).second) continue;
      const bool critical = IsCriticalSupport(next);
      nodes.push_back({std::move(next), idx, a, nodes[idx].depth + 1});
      const int child = static_cast<int>(nodes.size()) - 1;
      if (critical) {
        Word w;
        for (int i = child; nodes[i].parent >= 0; i = nodes[i].parent) {
          w.push_back(nodes[i].symbol);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(child);
    }
  }
  return std::nullopt;
}

}  // namespace redlab
