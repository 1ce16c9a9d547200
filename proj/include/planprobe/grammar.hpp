#pragma once

#include <string>
#include <vector>

#include "planprobe/core.hpp"
#include "planprobe/rng.hpp"

namespace planprobe::grammar {

enum class PartOfSpeech { VerbPhrase, Preposition, SequentialConjunction };
enum class Direction { Before, After, Neutral };

// A keyword terminal slot. Neutral occurs only with VerbPhrase.
struct KeywordClass {
  PartOfSpeech pos = PartOfSpeech::VerbPhrase;
  Direction dir = Direction::Neutral;
  bool operator==(const KeywordClass&) const = default;
  bool operator<(const KeywordClass& o) const {
    return pos != o.pos ? pos < o.pos : dir < o.dir;
  }
};

inline constexpr KeywordClass kVpBefore{PartOfSpeech::VerbPhrase, Direction::Before};
inline constexpr KeywordClass kVpAfter{PartOfSpeech::VerbPhrase, Direction::After};
inline constexpr KeywordClass kVpNeutral{PartOfSpeech::VerbPhrase, Direction::Neutral};
inline constexpr KeywordClass kPrepBefore{PartOfSpeech::Preposition, Direction::Before};
inline constexpr KeywordClass kPrepAfter{PartOfSpeech::Preposition, Direction::After};
inline constexpr KeywordClass kSeqBefore{PartOfSpeech::SequentialConjunction, Direction::Before};
inline constexpr KeywordClass kSeqAfter{PartOfSpeech::SequentialConjunction, Direction::After};

std::string to_string(const KeywordClass& kc);
KeywordClass keyword_class_from_string(const std::string& s);

enum class NodeKind {
  Paragraph,
  Sentence,
  SubSentence,
  IndependentClause,
  MultiClause,
  DependentClause,
  RelativeClause,
  Subject,
  Object,
  Conjunction,
  ActionRef,
  TimeRef,
  Keyword,
};

std::string to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& s);

// DSL abstract-syntax node. Child layouts are fixed per (kind, variant):
//
//   Paragraph          [Sentence]+
//   Sentence           SubSentence (Conjunction SubSentence)*
//   SubSentence   v0   [IndependentClause]
//                 v1   [MultiClause]
//   IndependentClause
//                 v0   [Subject, Keyword(VP dir), Object]
//                 v1   [Subject, Keyword(VP0), Keyword(P dir), Object]
//                 v2   [Keyword(P dir), Object, Subject, Keyword(VP0)]   (fronted)
//   MultiClause   v0   [DependentClause(subj), Keyword(SC dir), DependentClause(obj)]
//                 v1   [Keyword(SC dir), DependentClause(obj), DependentClause(subj)]
//   DependentClause    [Subject, Keyword(VP0)]
//   RelativeClause
//                 v0   [Keyword(VP dir), Object]
//                 v1   [Keyword(VP0), Keyword(P dir), Object]
//   Subject       v0   [ActionRef x 1..max_group]
//                 v1   [ActionRef x 1..max_group, RelativeClause]
//   Object        v0/v1 as Subject, v2 [TimeRef]                          (extended)
//
// Children are stored in surface order; the variant pins semantic roles.
// Directional keywords always mean: subject-side events relate to
// object-side events per the direction (Before => subject precedes object).
struct SkeletonNode {
  NodeKind kind = NodeKind::Paragraph;
  int variant = 0;
  std::vector<SkeletonNode> children;

  // payload, exactly one populated depending on kind
  std::string action_id;         // ActionRef
  int time_point = -1;           // TimeRef, whole clock hour
  KeywordClass keyword{};        // Keyword
  std::string conjunction_token; // Conjunction

  bool operator==(const SkeletonNode&) const = default;
};

struct ParagraphSkeleton {
  SkeletonNode root;  // kind Paragraph
  Mode mode = Mode::Basic;
  bool operator==(const ParagraphSkeleton&) const = default;
};

// Caps keeping queries readable and oracles cheap.
struct ExpansionPolicy {
  int max_subsentences = 3;        // per sentence
  int max_paragraph_subsentences = 7;
  int max_group_actions = 2;       // a+ width
  int max_relative_depth = 1;      // relative clauses never nest
  double p_multi_clause = 0.30;
  double p_group_pair = 0.20;
  double p_relative = 0.15;
  double p_time_object = 0.30;     // extended mode only
  int time_min = 9;
  int time_max = 17;
  // weights for 1, 2, 3 sub-sentences in a sentence
  double w_subsentences[3] = {0.60, 0.35, 0.05};
};

// Randomly derives one Sentence subtree. Every sub-sentence encodes at least
// one derivable constraint and never references the same action twice.
// `max_subsentences_allowed` lets the paragraph synthesizer enforce its
// budget; pass <= 0 to use the policy cap alone.
SkeletonNode expand_sentence(const ActionSet& actions, Mode mode, Rng& rng,
                             const ExpansionPolicy& policy,
                             int max_subsentences_allowed = 0);

// Structural conformance check against the productions above. Throws
// ValidationError naming the offending production and path.
void validate_skeleton(const ParagraphSkeleton& skeleton,
                       const std::vector<std::string>& declared_actions);

// Census of expansion options. One row per production; `options` is
// instances * alternatives over a maximal policy-capped single sentence
// derivation; keyword slots contribute their class-alternative-set size and
// a+ counts as one option.
struct CensusRow {
  std::string production;
  long long instances = 0;
  long long alternatives = 0;
  long long options = 0;
};

struct ExpansionCensus {
  std::vector<CensusRow> rows;
  long long total = 0;
};

ExpansionCensus enumerate_expansion_options(Mode mode = Mode::Basic,
                                            const ExpansionPolicy& policy = {});

// Sums a hand-built production table; exposed so restricted grammars can be
// counted directly.
ExpansionCensus census_from_table(std::vector<CensusRow> rows);

// JSON tree with fields kind, variant, payload, children in stable order.
std::string serialize_skeleton(const ParagraphSkeleton& skeleton,
                               const std::vector<std::string>& declared_actions);
ParagraphSkeleton parse_skeleton(const std::string& blob);

// Declared action ids stored inside a serialized blob.
std::vector<std::string> parse_skeleton_actions(const std::string& blob);

}  // namespace planprobe::grammar
