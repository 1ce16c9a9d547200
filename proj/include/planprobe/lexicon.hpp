#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "planprobe/grammar.hpp"
#include "planprobe/rng.hpp"

namespace planprobe {

// Surface forms for keyword terminals plus topic-scoped activity phrases.
// Immutable after load; freely shared across workers.
struct Lexicon {
  std::map<grammar::KeywordClass, std::vector<std::string>> keyword_forms;
  std::map<std::string, std::vector<std::string>> topics;
  std::vector<std::string> conjunction_tokens;
  std::string version;

  std::vector<std::string> topic_names() const;
};

// The static, human-audited lexicon shipped with the repo. Satisfies every
// Lexicon invariant; tests are hermetic against it.
const Lexicon& builtin_lexicon();

// Throws ValidationError listing offending entries on any invariant breach:
// form counts, topic/activity counts, within-topic distinctness (raw and
// tool-name normalized), cross-direction form collisions.
void validate_lexicon(const Lexicon& lexicon);

std::string sample_form(const Lexicon& lexicon, const grammar::KeywordClass& kc, Rng& rng);
std::string sample_topic(const Lexicon& lexicon, Rng& rng);
// n distinct activity phrases from one topic. Throws ValidationError for an
// unknown topic or when n exceeds the pool.
std::vector<std::string> sample_activities(const Lexicon& lexicon, const std::string& topic,
                                           int n, Rng& rng);

// Verb-phrase surface realization: base forms are stored in the lexicon
// ("come after", "be executed"); conjugation happens at render time.
std::string conjugate(const std::string& base_verb_phrase, bool plural_subject);

std::string lexicon_to_json(const Lexicon& lexicon);
Lexicon lexicon_from_json(const std::string& blob);  // schema-validated
void save_lexicon(const Lexicon& lexicon, const std::string& path);
Lexicon load_lexicon(const std::string& path);

// Chat-completion hook used to rebuild the topic lists from a live model.
// Given a prompt, returns the raw completion text. Transport failures must
// throw TransportError.
using CompletionFn = std::function<std::string(const std::string& prompt)>;

// Issues the job-list prompt and one activities prompt per job, parses the
// numbered replies, and validates the result against all invariants.
// Invalid model output raises ValidationError (never repaired silently).
Lexicon regenerate_lexicon(const CompletionFn& complete);

// Convenience wrapper speaking an OpenAI-compatible chat endpoint.
Lexicon regenerate_lexicon_http(const std::string& base_url, const std::string& model,
                                const std::string& api_key);

}  // namespace planprobe
