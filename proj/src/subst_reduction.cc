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

#include "redlab/subst_reduction.h"

#include <algorithm>
#include <functional>

namespace redlab {

namespace {

Word Block(int zeros) {
  Word b(static_cast<size_t>(zeros), 0);
  b.push_back(1);
  return b;
}

}  // namespace

Word WordSystem::F(int k, int z, int j) const {
  Word out = Beta(k);
  Append(out, WPower(z + 1));
  Append(out, Alpha(j));
  return out;
}

Word WordSystem::F(int k, int z) const { return Concat(Beta(k), WPower(z + 2)); }

WordSystem BuildWords(int s) {
  if (s < 1) throw Error("word system needs s >= 1");
  WordSystem ws;
  ws.s = s;
  for (int i = 1; i <= s + 1; ++i) Append(ws.w, Block(i));
  Word prefix;
  for (int k = 1; k <= s; ++k) {
    Append(prefix, Block(k));
    ws.alpha.push_back(prefix);
    ws.beta.emplace_back(ws.w.begin() + static_cast<long>(prefix.size()), ws.w.end());
  }
  return ws;
}

BlockFamilies BuildBlockFamilies(const Nds &nds, const WordSystem &words) {
  if (nds.lines() != words.s) throw Error("word system does not match the line count");
  BlockFamilies f;
  for (const auto &r : nds.Rules()) {
    if (r.probability.IsZero()) continue;
    f.d[r.symbol].emplace(r.from_line, r.shift, r.to_line);
  }
  for (int a = 0; a < 2; ++a) {
    for (const auto &[k, z, j] : f.d[a]) {
      f.t[a].insert(words.F(k, z, j));
      f.c[a].insert(words.F(k, z));
    }
    f.c_all.insert(f.c[a].begin(), f.c[a].end());
  }
  f.m = {words.w};
  f.b = {words.WPower(2)};
  for (int k = 1; k <= words.s; ++k) f.n.insert(words.Beta(k));
  f.s = {words.Alpha(1)};
  return f;
}

Alphabet SubstitutionSource() { return Alphabet({"0", "1", "b", "c"}); }

SubstitutionPair BuildSubstitutions(const Nds &nds, size_t image_cap) {
  const int s = nds.lines();
  const size_t s2 = static_cast<size_t>(s) * static_cast<size_t>(s);
  for (Symbol a = 0; a < 2; ++a) {
    size_t triples = 0;
    for (int k = 1; k <= s; ++k) triples += nds.Row(k, a).size();
    // |B| + |T_a| + |N T_a| + |C_a N| + |N C_a N|.
    const size_t bound = 1 + triples * (1 + 2 * static_cast<size_t>(s) + s2);
    if (bound > image_cap) {
      throw CapExceeded("image of symbol " + std::to_string(a) + " may reach " +
                        std::to_string(bound) + " words, above the cap of " +
                        std::to_string(image_cap));
    }
  }

  WordSystem words = BuildWords(s);
  BlockFamilies blocks = BuildBlockFamilies(nds, words);
  FiniteSubstitution phi(SubstitutionSource(), Alphabet::Binary());
  FiniteSubstitution xi(SubstitutionSource(), Alphabet::Binary());

  auto both = [&](Symbol letter, const Word &img) {
    phi.AddImage(letter, img);
    xi.AddImage(letter, img);
  };
  for (const auto &a1 : blocks.s) both(kLetterB, a1);
  for (const auto &m : blocks.m) {
    for (const auto &n : blocks.n) both(kLetterB, Concat(m, n));
    phi.AddImage(kLetterB, m);
    both(kLetterC, m);
    for (const auto &n : blocks.n) both(kLetterC, Concat(n, m));
  }
  for (Symbol a = 0; a < 2; ++a) {
    for (const auto &bb : blocks.b) both(a, bb);
    for (const auto &t : blocks.t[a]) {
      both(a, t);
      for (const auto &n : blocks.n) both(a, Concat(n, t));
    }
    for (const auto &c : blocks.c[a]) {
      for (const auto &n : blocks.n) {
        both(a, Concat(c, n));
        for (const auto &n2 : blocks.n) both(a, Concat(Concat(n2, c), n));
      }
    }
  }
  phi.Validate();
  xi.Validate();
  return {std::move(words), std::move(blocks), std::move(phi), std::move(xi)};
}

Nfa LanguageBC() {
  NfaBuilder b(4);
  const int start = b.AddState();
  const int body = b.AddState();
  const int end = b.AddState();
  b.AddInitial(start);
  b.SetFinal(end);
  b.AddArc(start, kLetterB, body);
  b.AddArc(body, 0, body);
  b.AddArc(body, 1, body);
  b.AddArc(body, kLetterC, end);
  return b.Build();
}

EquivalenceVerdict DecideEquivalence(const Nds &nds, int probe_len,
                                     size_t image_cap) {
  const SubstitutionPair subs = BuildSubstitutions(nds, image_cap);
  const Nfa lang = LanguageBC();
  const Nfa phi_l = ApplySubstitution(subs.phi, lang);
  const Nfa xi_l = ApplySubstitution(subs.xi, lang);
  EquivalenceVerdict v;
  v.phi_states = static_cast<size_t>(phi_l.num_states());
  v.xi_states = static_cast<size_t>(xi_l.num_states());
  v.xi_in_phi = !Inclusion(xi_l, phi_l).has_value();
  v.counterexample = Inclusion(phi_l, xi_l);
  v.equal = v.xi_in_phi && !v.counterexample;
  v.probe_len = probe_len;
  if (probe_len > 0) v.probe_critical = SearchCritical(nds, probe_len);
  return v;
}

CriticalWitnessReport CriticalWitness(const Nds &nds, const Word &critical,
                                      size_t image_cap) {
  if (!IsCritical(nds, critical)) {
    throw Error("attack word is not critical for this system");
  }
  const SubstitutionPair subs = BuildSubstitutions(nds, image_cap);
  const WordSystem &ws = subs.words;
  const int n = static_cast<int>(critical.size());

  CriticalWitnessReport r;
  r.critical = critical;
  r.witness = ws.WPower(2 * n + 2);

  // x = b x' c as source letters.
  Word x{kLetterB};
  Append(x, critical);
  x.push_back(kLetterC);

  r.phi_factorization.push_back(ws.w);
  for (int i = 0; i < n; ++i) r.phi_factorization.push_back(ws.WPower(2));
  r.phi_factorization.push_back(ws.w);
  bool factors_ok = true;
  Word product;
  for (size_t i = 0; i < x.size(); ++i) {
    factors_ok = factors_ok && subs.phi.Images(x[i]).contains(r.phi_factorization[i]);
    Append(product, r.phi_factorization[i]);
  }
  r.in_phi = factors_ok && product == r.witness;

  // Is the partial product (a prefix of the witness, ending at `pos`) of the
  // form w^r alpha_j?
  const size_t wlen = ws.w.size();
  auto alpha_shaped = [&](size_t pos) {
    const size_t rem = pos % wlen;
    for (int j = 1; j <= ws.s; ++j) {
      if (ws.Alpha(j).size() == rem) return true;
    }
    return false;
  };

  const Word &target = r.witness;
  std::function<bool(size_t, size_t)> search = [&](size_t i, size_t pos) {
    for (const auto &v : subs.xi.Images(x[i])) {
      ++r.products_examined;
      if (pos + v.size() > target.size()) continue;
      if (!std::equal(v.begin(), v.end(), target.begin() + static_cast<long>(pos))) {
        continue;
      }
      const size_t next = pos + v.size();
      if (i + 1 == x.size()) {
        if (next == target.size()) return true;
        continue;
      }
      if (!alpha_shaped(next)) r.prefix_discipline = false;
      if (search(i + 1, next)) return true;
    }
    return false;
  };
  r.in_xi = search(0, 0);
  return r;
}

}  // namespace redlab
