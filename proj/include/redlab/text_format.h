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
// Line-oriented text formats and Graphviz export. Every format ignores blank
// lines and '#' comments. Readers throw ParseError with the source location
// and the expected grammar.
//
//   PCP instance    pair <u> <v>                       (u, v over {a,b})
//   transducer      alphabet <name>...                 (optional, first)
//                   state <id> | init <id> | final <id>
//                   trans <from> <word|-> <count> <to>
//   NFA             alphabet <name>...                 (optional, first)
//                   state <id> | init <id> | final <id>
//                   trans <from> <letter> <to>
//   Z-transducer    zstate <id> | zinit <id> | zfinal <id>
//                   ztrans <from> <0|1> <1|2> <to>
//   defense system  lines <s>
//                   rule <k> <0|1> <j> <-1|0|1> <num>/<den>
//   substitution    target <name>...                   (optional, default 0 1)
//                   sub <letter> = <word> [<word> ...]
//
// Words print as concatenated symbol names when all names are one character,
// and dot-separated otherwise ("i1.a.b"); "-" is the empty word.

#ifndef REDLAB_TEXT_FORMAT_H_
#define REDLAB_TEXT_FORMAT_H_

#include <iosfwd>
#include <string>

#include "redlab/finite_substitution.h"
#include "redlab/nds.h"
#include "redlab/nfa.h"
#include "redlab/pcp.h"
#include "redlab/relation.h"
#include "redlab/zmachine.h"

namespace redlab {

PcpInstance ReadPcp(std::istream &in, const std::string &source);
void WritePcp(std::ostream &out, const PcpInstance &inst);

// Without an alphabet line, symbols are numbered in order of first use.
Transducer ReadTransducer(std::istream &in, const std::string &source);
void WriteTransducer(std::ostream &out, const Transducer &t);

Nfa ReadNfa(std::istream &in, const std::string &source, Alphabet *alphabet);
void WriteNfa(std::ostream &out, const Nfa &a, const Alphabet &alphabet);

ZTransducer ReadZTransducer(std::istream &in, const std::string &source);
void WriteZTransducer(std::ostream &out, const ZTransducer &zt);

Nds ReadNds(std::istream &in, const std::string &source);
void WriteNds(std::ostream &out, const Nds &nds);

// Source letters are numbered in order of first appearance.
FiniteSubstitution ReadSubstitution(std::istream &in, const std::string &source);
void WriteSubstitution(std::ostream &out, const FiniteSubstitution &sub);

void WriteDot(std::ostream &out, const Transducer &t);
void WriteDot(std::ostream &out, const Nfa &a, const Alphabet &alphabet);
void WriteDot(std::ostream &out, const ZTransducer &zt);
void WriteDot(std::ostream &out, const Nds &nds);

enum class FileKind { kPcp, kTransducer, kNfa, kZTransducer, kNds, kSubstitution };

// Classifies a file by its first non-comment keyword.
FileKind DetectKind(std::istream &in, const std::string &source);

// File helpers; throw Error when the file cannot be opened.
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, const std::string &contents);

}  // namespace redlab

#endif  // REDLAB_TEXT_FORMAT_H_
