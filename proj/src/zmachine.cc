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

#include "redlab/zmachine.h"

#include <algorithm>

namespace redlab {

ZTransducer::ZTransducer(int num_states, std::vector<ZArc> arcs, int initial,
                         int final)
    : num_states_(num_states),
      arcs_(std::move(arcs)),
      initial_(initial),
      final_(final) {
  if (num_states_ < 2) throw Error("Z-transducer needs at least two states");
  if (initial_ < 0 || initial_ >= num_states_ || final_ < 0 ||
      final_ >= num_states_) {
    throw Error("Z-transducer initial/final state out of range");
  }
  if (initial_ == final_) {
    throw Error("Z-transducer initial and final states must differ");
  }
  for (const auto &a : arcs_) {
    if (a.from < 0 || a.from >= num_states_ || a.to < 0 || a.to >= num_states_) {
      throw Error("Z-transducer arc endpoint out of range");
    }
    if (a.bit != 0 && a.bit != 1) throw Error("Z-transducer arc reads a non-bit");
    if (a.output != 1 && a.output != 2) {
      throw Error("Z-transducer arc output must be 1 or 2");
    }
    if (a.from == final_) throw Error("Z-transducer arc leaves the final state");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  offsets_.assign(static_cast<size_t>(num_states_) + 1, 0);
  for (const auto &a : arcs_) ++offsets_[static_cast<size_t>(a.from) + 1];
  for (size_t q = 0; q < static_cast<size_t>(num_states_); ++q) {
    offsets_[q + 1] += offsets_[q];
  }
}

std::vector<ZArc> ZTransducer::Out(int q, Symbol bit) const {
  std::vector<ZArc> out;
  for (size_t i = offsets_[q]; i < offsets_[q + 1]; ++i) {
    if (arcs_[i].bit == bit) out.push_back(arcs_[i]);
  }
  return out;
}

ZAnalysis Analyze(const ZTransducer &zt) {
  ZAnalysis r;
  for (int q = 0; q < zt.num_states(); ++q) {
    if (q == zt.final_state()) continue;
    for (Symbol bit = 0; bit < 2; ++bit) {
      const size_t n = zt.Out(q, bit).size();
      if (n == 0) {
        r.complete = false;
        r.deterministic = false;
        r.missing.emplace_back(q, bit);
      } else if (n > 1) {
        r.deterministic = false;
        r.branching.emplace_back(q, bit);
      }
    }
  }
  return r;
}

ZTransducer CompleteMachine(const ZTransducer &zt) {
  const ZAnalysis an = Analyze(zt);
  if (an.complete) return zt;
  const int garbage = zt.num_states();
  std::vector<ZArc> arcs = zt.arcs();
  for (const auto &[q, bit] : an.missing) arcs.push_back({q, bit, 1, garbage});
  arcs.push_back({garbage, 0, 1, garbage});
  arcs.push_back({garbage, 1, 1, garbage});
  return ZTransducer(zt.num_states() + 1, std::move(arcs), zt.initial(),
                     zt.final_state());
}

std::set<int64_t> Outputs(const ZTransducer &zt, const Word &word) {
  // Frontier of (state, emitted count); counts stay within 2|word|.
  std::set<std::pair<int, int64_t>> cur{{zt.initial(), 0}};
  for (Symbol bit : word) {
    std::set<std::pair<int, int64_t>> next;
    for (const auto &[q, cnt] : cur) {
      for (const auto &a : zt.Out(q, bit)) next.emplace(a.to, cnt + a.output);
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  std::set<int64_t> out;
  for (const auto &[q, cnt] : cur) {
    if (q == zt.final_state()) out.insert(cnt);
  }
  return out;
}

Coding::Coding(const PcpInstance &inst) : n_(inst.size()) {
  size_t longest = 0;
  for (const auto &[u, v] : inst.pairs()) {
    longest = std::max({longest, u.size(), v.size()});
  }
  k_ = 1 + static_cast<int>(longest);
  auto block = [](int zeros) {
    Word w{1};
    w.insert(w.end(), static_cast<size_t>(zeros), 0);
    w.push_back(1);
    return w;
  };
  codes_.push_back(block(k_));      // a
  codes_.push_back(block(k_ + 1));  // b
  for (int t = 1; t <= n_; ++t) codes_.push_back(block(k_ + 1 + t));
}

Word Coding::Encode(const Word &w) const {
  Word out;
  for (Symbol s : w) Append(out, Code(s));
  return out;
}

UnaryPair Coding::Chi(const UnaryPair &p) const {
  UnaryPair out;
  out.input = Encode(p.input);
  out.input.push_back(0);
  out.count = p.count + static_cast<int64_t>(out.input.size());
  return out;
}

ZTransducer CompileRelation(const Coding &coding, const Relation &rel) {
  const Transducer &t = rel.transducer();
  int next = t.num_states();
  std::vector<ZArc> arcs;
  for (const auto &a : t.arcs()) {
    const Word code = coding.Encode(a.input);
    if (a.count > static_cast<int>(code.size())) {
      throw Error("atom output " + std::to_string(a.count) +
                  " exceeds its coded length " + std::to_string(code.size()) +
                  "; the coding constant is too small");
    }
    int cur = a.from;
    for (size_t i = 0; i < code.size(); ++i) {
      const int to = i + 1 == code.size() ? a.to : next++;
      const int out = static_cast<int>(i) < a.count ? 2 : 1;
      arcs.push_back({cur, code[i], out, to});
      cur = to;
    }
  }
  const int final = next++;
  for (int q = 0; q < t.num_states(); ++q) {
    if (t.IsFinal(q)) arcs.push_back({q, 0, 1, final});
  }
  return CompleteMachine(ZTransducer(next, std::move(arcs), t.initial(), final));
}

ZTransducer BuildChiL0(const PcpInstance &inst) {
  const Coding coding(inst);
  const int k = coding.k();
  const int n = coding.num_indices();
  const int max_zeros = k + 1 + n;

  // Code boundaries: need an index code / after index codes / after letters.
  enum { kNeedIndex = 0, kAfterIndex = 1, kAfterLetter = 2 };
  auto zeros_state = [&](int ctx, int j) { return 3 + ctx * (max_zeros + 1) + j; };
  const int garbage = zeros_state(2, max_zeros) + 1;
  const int final = garbage + 1;

  std::vector<ZArc> arcs;
  for (int ctx = 0; ctx < 3; ++ctx) {
    arcs.push_back({ctx, 1, 2, zeros_state(ctx, 0)});
    if (ctx == kAfterLetter) {
      arcs.push_back({ctx, 0, 1, final});
    } else {
      arcs.push_back({ctx, 0, 1, garbage});
    }
    for (int j = 0; j <= max_zeros; ++j) {
      const int q = zeros_state(ctx, j);
      arcs.push_back({q, 0, 1, j < max_zeros ? zeros_state(ctx, j + 1) : garbage});
      const bool letter = j == k || j == k + 1;
      const bool index = j >= k + 2 && j <= max_zeros;
      if (index && ctx != kAfterLetter) {
        arcs.push_back({q, 1, 1, kAfterIndex});
      } else if (letter && ctx != kNeedIndex) {
        arcs.push_back({q, 1, 2, kAfterLetter});
      } else {
        arcs.push_back({q, 1, 1, garbage});
      }
    }
  }
  arcs.push_back({garbage, 0, 1, garbage});
  arcs.push_back({garbage, 1, 1, garbage});
  return ZTransducer(final + 1, std::move(arcs), kNeedIndex, final);
}

}  // namespace redlab
