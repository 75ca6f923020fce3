//! Shared result type and the [`Stemmer`] trait.

use serde::Serialize;

use crate::ruleset::SuffixRule;
use crate::script::GraphemeWord;

/// One rule application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: SuffixRule,
    pub before: GraphemeWord,
    pub after: GraphemeWord,
    /// Light stemmer pass the step belongs to; always 0 for the strip stemmer.
    pub pass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StemResult {
    pub stem: GraphemeWord,
    pub trace: Vec<TraceStep>,
}

impl StemResult {
    pub fn unchanged(word: &GraphemeWord) -> Self {
        StemResult {
            stem: word.clone(),
            trace: Vec::new(),
        }
    }

    /// Re-applies the trace to `input` and checks it lands on `stem`.
    pub fn replays_from(&self, input: &GraphemeWord) -> bool {
        let mut cur = input.clone();
        for step in &self.trace {
            if step.before != cur || !step.rule.applies_to(&cur) {
                return false;
            }
            cur = step.rule.apply(&cur);
            if cur != step.after {
                return false;
            }
        }
        cur == self.stem
    }
}

pub trait Stemmer: Sync {
    fn name(&self) -> &'static str;

    fn stem(&self, word: &GraphemeWord) -> StemResult;

    fn stem_all(&self, words: &[GraphemeWord]) -> Vec<StemResult> {
        words.iter().map(|w| self.stem(w)).collect()
    }
}
