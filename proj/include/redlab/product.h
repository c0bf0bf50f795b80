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
//
// From a deterministic Z-transducer C and a complete one D, a defense system
// whose lines are pairs (state of C, state of D') and whose defended node
// tracks |output of D'| - |output of C|. It has a critical word exactly when
// some (w, y) accepted by C is rejected by D.

#ifndef REDLAB_PRODUCT_H_
#define REDLAB_PRODUCT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redlab/nds.h"
#include "redlab/zmachine.h"

namespace redlab {

// D' = D plus a disjoint copy of C, with C's initial arcs also leaving D's
// initial state. C's states keep their indices; D's are shifted by
// C.num_states(). Recognizes the same pairs as D. Throws unless C is
// deterministic and D is complete.
ZTransducer BuildDPrime(const ZTransducer &c, const ZTransducer &d);

class ProductNds {
 public:
  ProductNds(const ZTransducer &c, const ZTransducer &d);

  const Nds &nds() const { return nds_; }
  const ZTransducer &c() const { return c_; }
  const ZTransducer &d_prime() const { return d_prime_; }
  int c_states() const { return c_.num_states(); }
  int d_states() const { return d_prime_.num_states(); }

  // Line 1 is (initial of C, initial of D'); the rest follow in
  // lexicographic order of (c_state, d_state).
  int LineOf(int c_state, int d_state) const;
  std::pair<int, int> PairOf(int line) const;

 private:
  ZTransducer c_;
  ZTransducer d_prime_;
  Nds nds_;
};

struct CorrespondenceCheck {
  std::string description;
  bool holds;
};

struct CorrespondenceReport {
  int word_bound = 0;
  // Shortlex-minimal word accepted by C whose output D does not produce.
  std::optional<Word> counterexample;
  int64_t counterexample_output = 0;
  // Critical word of the product system found within 2|counterexample| + 2.
  std::optional<Word> forward_critical;
  // Critical word found by the blind search within word_bound.
  std::optional<Word> backward_critical;
  // Prefix of backward_critical accepted by C, with its output.
  std::optional<Word> backward_prefix;
  std::vector<CorrespondenceCheck> checks;

  bool forward_fired() const { return counterexample.has_value(); }
  bool backward_fired() const { return backward_critical.has_value(); }
  bool Inconclusive() const { return !forward_fired() && !backward_fired(); }
  bool Consistent() const;
};

// Shortlex-minimal w with |w| <= bound, (w, y) accepted by C and rejected by D.
std::optional<std::pair<Word, int64_t>> FindInclusionCounterexample(
    const ZTransducer &c, const ZTransducer &d, int bound);

CorrespondenceReport CheckCorrespondence(const ZTransducer &c,
                                         const ZTransducer &d, int word_bound);

}  // namespace redlab

#endif  // REDLAB_PRODUCT_H_
