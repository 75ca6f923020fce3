//! Light stemmer.
//!
//! Stripping runs from the outermost suffix inward. Each applied rule names
//! the classes that may come next, so a case ending is followed only by a
//! plural, a person ending only by a participle, and a plural ends the pass.
//! Plural elimination, participle-to-verb substitution and tense elimination
//! are the class-restricted single steps of that loop and are exposed on
//! their own.
//!
//! A pass ends when the allowed set is empty or nothing in it matches. If the
//! pass changed the word, another pass starts from the full class set, so the
//! output never has an applicable rule left and stemming a stem is a no-op.

use crate::ruleset::{ClassSet, RuleSet, SuffixClass};
use crate::script::GraphemeWord;
use crate::stem::{StemResult, Stemmer, TraceStep};

/// Classes a pass may start with.
pub const INITIAL_CLASSES: ClassSet = ClassSet::ALL;

fn apply_once(word: &GraphemeWord, rules: &RuleSet, allowed: ClassSet) -> GraphemeWord {
    match rules.best(word, allowed) {
        Some(rule) => rule.apply(word),
        None => word.clone(),
    }
}

fn classes(list: &[SuffixClass]) -> ClassSet {
    list.iter().copied().collect()
}

/// Applies the longest plural rule, if any.
pub fn strip_plural(word: &GraphemeWord, rules: &RuleSet) -> GraphemeWord {
    apply_once(word, rules, classes(&[SuffixClass::Plural]))
}

/// Rewrites an adjectival participle to its verb (`ஓடிய` -> `ஓடு`).
pub fn adjectival_to_verb(word: &GraphemeWord, rules: &RuleSet) -> GraphemeWord {
    apply_once(word, rules, classes(&[SuffixClass::AdjectivalParticiple]))
}

/// Applies the longest tense, negative or person ending, if any.
pub fn strip_tense(word: &GraphemeWord, rules: &RuleSet) -> GraphemeWord {
    apply_once(
        word,
        rules,
        classes(&[
            SuffixClass::Tense,
            SuffixClass::NegativeCompound,
            SuffixClass::PersonNumberGender,
        ]),
    )
}

pub fn light_stem(word: &GraphemeWord, rules: &RuleSet) -> StemResult {
    let mut cur = word.clone();
    let mut trace = Vec::new();
    let mut pass = 0;
    loop {
        let before = trace.len();
        let mut allowed = INITIAL_CLASSES;
        while !allowed.is_empty() {
            let Some(rule) = rules.best(&cur, allowed) else {
                break;
            };
            let next = rule.apply(&cur);
            debug_assert!(next.len() < cur.len());
            allowed = rule.next_classes;
            trace.push(TraceStep {
                rule: rule.clone(),
                before: cur,
                after: next.clone(),
                pass,
            });
            cur = next;
        }
        if trace.len() == before {
            break;
        }
        pass += 1;
    }
    StemResult { stem: cur, trace }
}

#[derive(Debug, Clone, Copy)]
pub struct LightStemmer<'r> {
    rules: &'r RuleSet,
}

impl<'r> LightStemmer<'r> {
    pub fn new(rules: &'r RuleSet) -> Self {
        LightStemmer { rules }
    }
}

impl Stemmer for LightStemmer<'_> {
    fn name(&self) -> &'static str {
        "light"
    }

    fn stem(&self, word: &GraphemeWord) -> StemResult {
        light_stem(word, self.rules)
    }
}
