//! Baseline suffix stripper: iterative longest match over the pooled rule
//! list, ignoring class transitions.

use crate::ruleset::{ClassSet, RuleSet};
use crate::script::GraphemeWord;
use crate::stem::{StemResult, Stemmer, TraceStep};

/// Strips the longest applicable rule from any class until none applies.
pub fn strip_stem(word: &GraphemeWord, rules: &RuleSet) -> StemResult {
    let mut cur = word.clone();
    let mut trace = Vec::new();
    while let Some(rule) = rules.best(&cur, ClassSet::ALL) {
        let next = rule.apply(&cur);
        // Every rule shortens; re-clustering at the joint can only merge.
        debug_assert!(next.len() < cur.len());
        trace.push(TraceStep {
            rule: rule.clone(),
            before: cur,
            after: next.clone(),
            pass: 0,
        });
        cur = next;
    }
    StemResult { stem: cur, trace }
}

pub fn stem_batch(words: &[GraphemeWord], rules: &RuleSet) -> Vec<StemResult> {
    words.iter().map(|w| strip_stem(w, rules)).collect()
}

#[derive(Debug, Clone, Copy)]
pub struct StripStemmer<'r> {
    rules: &'r RuleSet,
}

impl<'r> StripStemmer<'r> {
    pub fn new(rules: &'r RuleSet) -> Self {
        StripStemmer { rules }
    }
}

impl Stemmer for StripStemmer<'_> {
    fn name(&self) -> &'static str {
        "strip"
    }

    fn stem(&self, word: &GraphemeWord) -> StemResult {
        strip_stem(word, self.rules)
    }

    fn stem_all(&self, words: &[GraphemeWord]) -> Vec<StemResult> {
        stem_batch(words, self.rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ruleset::{builtin_rules, parse_rules, SuffixClass};

    fn w(s: &str) -> GraphemeWord {
        GraphemeWord::new(s)
    }

    fn stem(s: &str) -> String {
        strip_stem(&w(s), builtin_rules()).stem.into_string()
    }

    #[test]
    fn past_first_singular() {
        assert_eq!(stem("படித்தேன்"), "படி");
    }

    #[test]
    fn bare_root_is_untouched() {
        let r = strip_stem(&w("படி"), builtin_rules());
        assert_eq!(r.stem.as_str(), "படி");
        assert!(r.trace.is_empty());
    }

    #[test]
    fn plural_dative_am_noun() {
        let r = strip_stem(&w("மரங்களுக்கு"), builtin_rules());
        assert_eq!(r.stem.as_str(), "மரம்");
        let steps: Vec<(&str, &str)> = r
            .trace
            .iter()
            .map(|s| (s.rule.pattern.as_str(), s.after.as_str()))
            .collect();
        assert_eq!(steps, [("ளுக்கு", "மரங்கள்"), ("ங்கள்", "மரம்")]);
        assert!(r.replays_from(&w("மரங்களுக்கு")));
    }

    #[test]
    fn ignores_class_transitions() {
        // Plural is terminal for the light stemmer; the stripper keeps going.
        let rules = parse_rules("Plural\tகள்\t\t2\t\nCase\tக்கு\t\t2\tPlural\n").unwrap();
        let r = strip_stem(&w("கணக்குகள்"), &rules);
        assert_eq!(r.stem.as_str(), "கண");
        assert_eq!(r.trace[0].rule.class, SuffixClass::Plural);
    }

    #[test]
    fn romanized_rules_work_too() {
        let rules = parse_rules(
            "PersonNumberGender\tththEn\t\t2\t\nCase\tukku\t\t2\tPlural\nPlural\tngaL\tm\t2\t\n",
        )
        .unwrap();
        assert_eq!(strip_stem(&w("padiththEn"), &rules).stem.as_str(), "padi");
        assert_eq!(
            strip_stem(&w("marangaLukku"), &rules).stem.as_str(),
            "maram"
        );
    }

    #[test]
    fn batch_matches_single_calls() {
        assert!(stem_batch(&[], builtin_rules()).is_empty());
        let words = [w("படித்தேன்"), w("படி"), w("பெண்களுக்கு")];
        let batch = stem_batch(&words, builtin_rules());
        let stems: Vec<&str> = batch.iter().map(|r| r.stem.as_str()).collect();
        assert_eq!(stems, ["படி", "படி", "பெண்"]);
        for (word, r) in words.iter().zip(&batch) {
            assert_eq!(r, &strip_stem(word, builtin_rules()));
        }
    }

    #[test]
    fn non_tamil_passes_through() {
        let r = strip_stem(&w("hello"), builtin_rules());
        assert_eq!(r.stem.as_str(), "hello");
        assert!(r.trace.is_empty());
        assert!(strip_stem(&GraphemeWord::empty(), builtin_rules())
            .trace
            .is_empty());
    }
}
