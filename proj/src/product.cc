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

#include "redlab/product.h"

#include <algorithm>
#include <set>

namespace redlab {

namespace {

void RequirePreconditions(const ZTransducer &c, const ZTransducer &d) {
  const ZAnalysis ac = Analyze(c);
  if (!ac.deterministic) {
    std::string where;
    if (!ac.missing.empty()) {
      where = "no arc from state " + std::to_string(ac.missing[0].first) +
              " on " + std::to_string(ac.missing[0].second);
    } else {
      where = "several arcs from state " + std::to_string(ac.branching[0].first) +
              " on " + std::to_string(ac.branching[0].second);
    }
    throw Error("C must be deterministic: " + where);
  }
  const ZAnalysis ad = Analyze(d);
  if (!ad.complete) {
    throw Error("D must be complete: no arc from state " +
                std::to_string(ad.missing[0].first) + " on " +
                std::to_string(ad.missing[0].second));
  }
}

}  // namespace

ZTransducer BuildDPrime(const ZTransducer &c, const ZTransducer &d) {
  RequirePreconditions(c, d);
  const int off = c.num_states();
  std::vector<ZArc> arcs = c.arcs();
  for (const auto &a : d.arcs()) {
    arcs.push_back({a.from + off, a.bit, a.output, a.to + off});
  }
  const int g0 = d.initial() + off;
  for (Symbol bit = 0; bit < 2; ++bit) {
    for (const auto &a : c.Out(c.initial(), bit)) {
      arcs.push_back({g0, a.bit, a.output, a.to});
    }
  }
  return ZTransducer(off + d.num_states(), std::move(arcs), g0,
                     d.final_state() + off);
}

namespace {

// Bijection between lines and (c_state, d_state) pairs.
struct LineIndex {
  int d_states;
  int64_t first;

  LineIndex(const ZTransducer &c, const ZTransducer &dp)
      : d_states(dp.num_states()),
        first(static_cast<int64_t>(c.initial()) * dp.num_states() +
              dp.initial()) {}

  int LineOf(int c_state, int d_state) const {
    const int64_t idx = static_cast<int64_t>(c_state) * d_states + d_state;
    if (idx == first) return 1;
    return static_cast<int>(idx < first ? idx + 2 : idx + 1);
  }

  std::pair<int, int> PairOf(int line) const {
    int64_t idx;
    if (line == 1) {
      idx = first;
    } else if (line - 2 < first) {
      idx = line - 2;
    } else {
      idx = line - 1;
    }
    return {static_cast<int>(idx / d_states), static_cast<int>(idx % d_states)};
  }
};

Nds BuildProductSystem(const ZTransducer &c, const ZTransducer &dp) {
  const LineIndex lines(c, dp);
  const int qf = c.final_state();
  const int gf = dp.final_state();
  // C's final state keeps its index inside D'.
  const int qf_in_d = qf;
  std::vector<NdsRule> rules;
  const int s = c.num_states() * dp.num_states();
  for (int line = 1; line <= s; ++line) {
    const auto [q, g] = lines.PairOf(line);
    for (Symbol a = 0; a < 2; ++a) {
      std::set<std::pair<int, int>> targets;  // (shift, line)
      if (q == qf && g == gf) {
        targets.emplace(0, line);
      } else if (q == qf || g == gf || g == qf_in_d) {
        targets.emplace(1, lines.LineOf(qf, qf_in_d));
      } else {
        for (const auto &ca : c.Out(q, a)) {
          for (const auto &da : dp.Out(g, a)) {
            targets.emplace(da.output - ca.output, lines.LineOf(ca.to, da.to));
          }
        }
      }
      if (targets.empty()) {
        throw Error("product line " + std::to_string(line) +
                    " has no rule on symbol " + std::to_string(a));
      }
      const Rational p(1, static_cast<int64_t>(targets.size()));
      for (const auto &[shift, to] : targets) {
        rules.push_back({line, a, to, shift, p});
      }
    }
  }
  return Nds(s, std::move(rules));
}

}  // namespace

ProductNds::ProductNds(const ZTransducer &c, const ZTransducer &d)
    : c_(c),
      d_prime_(BuildDPrime(c, d)),
      nds_(BuildProductSystem(c_, d_prime_)) {}

int ProductNds::LineOf(int c_state, int d_state) const {
  return LineIndex(c_, d_prime_).LineOf(c_state, d_state);
}

std::pair<int, int> ProductNds::PairOf(int line) const {
  return LineIndex(c_, d_prime_).PairOf(line);
}

bool CorrespondenceReport::Consistent() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CorrespondenceCheck &c) { return c.holds; });
}

std::optional<std::pair<Word, int64_t>> FindInclusionCounterexample(
    const ZTransducer &c, const ZTransducer &d, int bound) {
  // C is deterministic, so each word has at most one run; track it directly.
  struct Item {
    Word word;
    int state;
    int64_t output;
  };
  std::vector<Item> level{{Word{}, c.initial(), 0}};
  for (int len = 1; len <= bound && !level.empty(); ++len) {
    std::vector<Item> next;
    for (const auto &item : level) {
      for (Symbol bit = 0; bit < 2; ++bit) {
        const auto arcs = c.Out(item.state, bit);
        if (arcs.empty()) continue;
        Word w = item.word;
        w.push_back(bit);
        const int64_t y = item.output + arcs[0].output;
        if (arcs[0].to == c.final_state()) {
          if (!Outputs(d, w).contains(y)) return std::make_pair(w, y);
          continue;
        }
        next.push_back({std::move(w), arcs[0].to, y});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

CorrespondenceReport CheckCorrespondence(const ZTransducer &c,
                                         const ZTransducer &d, int word_bound) {
  CorrespondenceReport r;
  r.word_bound = word_bound;
  const ProductNds product(c, d);

  if (auto cex = FindInclusionCounterexample(c, d, word_bound)) {
    r.counterexample = cex->first;
    r.counterexample_output = cex->second;
    const int ell = static_cast<int>(cex->first.size());
    r.forward_critical = SearchCritical(product.nds(), 2 * ell + 2);
    r.checks.push_back({"critical word of length <= " + std::to_string(2 * ell + 2) +
                            " exists",
                        r.forward_critical.has_value()});
  }

  r.backward_critical = SearchCritical(product.nds(), word_bound);
  if (r.backward_critical) {
    const Word &x = *r.backward_critical;
    // Walk C along x; the accepted prefix, if any, is unique.
    int q = c.initial();
    int64_t y = 0;
    for (size_t i = 0; i < x.size() && q != c.final_state(); ++i) {
      const auto arcs = c.Out(q, x[i]);
      q = arcs[0].to;
      y += arcs[0].output;
      if (q == c.final_state()) r.backward_prefix = Word(x.begin(), x.begin() + static_cast<long>(i) + 1);
    }
    r.checks.push_back({"critical word has a prefix accepted by C",
                        r.backward_prefix.has_value()});
    if (r.backward_prefix) {
      r.checks.push_back({"that prefix's output is rejected by D",
                          !Outputs(d, *r.backward_prefix).contains(y)});
    }
    r.checks.push_back(
        {"a counterexample of length <= " + std::to_string(x.size()) + " exists",
         r.counterexample.has_value() && r.counterexample->size() <= x.size()});
  }
  return r;
}

}  // namespace redlab
