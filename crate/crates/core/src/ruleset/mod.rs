//! Suffix rules: data model, rule-file parser, built-in inventory and the
//! paradigm generator used to synthesize gold data.

mod paradigm;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::script::GraphemeWord;

pub use paradigm::{generate_forms, GeneratedForm, Paradigm, ParadigmError};
pub use parse::{parse_rules, render_rules, validate_rules, RuleError};

/// Grammatical layer a suffix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SuffixClass {
    Vocative,
    Case,
    Plural,
    AdjectivalParticiple,
    Tense,
    PersonNumberGender,
    NegativeCompound,
}

impl SuffixClass {
    pub const ALL: [SuffixClass; 7] = [
        SuffixClass::Vocative,
        SuffixClass::Case,
        SuffixClass::Plural,
        SuffixClass::AdjectivalParticiple,
        SuffixClass::Tense,
        SuffixClass::PersonNumberGender,
        SuffixClass::NegativeCompound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuffixClass::Vocative => "Vocative",
            SuffixClass::Case => "Case",
            SuffixClass::Plural => "Plural",
            SuffixClass::AdjectivalParticiple => "AdjectivalParticiple",
            SuffixClass::Tense => "Tense",
            SuffixClass::PersonNumberGender => "PersonNumberGender",
            SuffixClass::NegativeCompound => "NegativeCompound",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for SuffixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuffixClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuffixClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| s.to_owned())
    }
}

/// A set of suffix classes. The empty set marks a terminal rule.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ClassSet(u8);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);
    pub const ALL: ClassSet = ClassSet(0x7F);

    pub fn contains(self, class: SuffixClass) -> bool {
        self.0 & class.bit() != 0
    }

    pub fn insert(&mut self, class: SuffixClass) {
        self.0 |= class.bit();
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = SuffixClass> {
        SuffixClass::ALL
            .into_iter()
            .filter(move |c| self.contains(*c))
    }
}

impl FromIterator<SuffixClass> for ClassSet {
    fn from_iter<I: IntoIterator<Item = SuffixClass>>(iter: I) -> Self {
        let mut set = ClassSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(SuffixClass::name).collect();
        f.write_str(&names.join(","))
    }
}

impl Serialize for ClassSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// One strip-or-substitute rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuffixRule {
    pub class: SuffixClass,
    pub pattern: GraphemeWord,
    pub replacement: GraphemeWord,
    /// Clusters that must remain after the rule is applied.
    pub min_stem: usize,
    pub next_classes: ClassSet,
    /// Position in the source file.
    pub order: usize,
}

impl SuffixRule {
    /// Whether the rule matches `word` and leaves at least `min_stem` clusters.
    pub fn applies_to(&self, word: &GraphemeWord) -> bool {
        word.ends_with(&self.pattern)
            && word.len() - self.pattern.len() + self.replacement.len() >= self.min_stem
    }

    /// Rewrites the matched suffix. Callers check [`applies_to`](Self::applies_to) first.
    pub fn apply(&self, word: &GraphemeWord) -> GraphemeWord {
        debug_assert!(word.ends_with(&self.pattern));
        word.replace_suffix(self.pattern.len(), &self.replacement)
    }

    pub fn is_terminal(&self) -> bool {
        self.next_classes.is_empty()
    }
}

impl fmt::Display for SuffixRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}", self.class, self.pattern)?;
        if !self.replacement.is_empty() {
            write!(f, " -> -{}", self.replacement)?;
        }
        Ok(())
    }
}

/// Validated, immutable rule collection.
#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<SuffixRule>,
    /// Rule indices per class, longest pattern first, then file order.
    by_class: [Vec<usize>; 7],
    /// Rule indices keyed by the pattern's final cluster, same ordering.
    by_last: HashMap<String, Vec<usize>>,
}

impl PartialEq for RuleSet {
    fn eq(&self, other: &Self) -> bool {
        self.rules == other.rules
    }
}

impl Eq for RuleSet {}

fn match_order(rules: &[SuffixRule]) -> impl Fn(&usize, &usize) -> std::cmp::Ordering + '_ {
    |&a, &b| {
        rules[b]
            .pattern
            .len()
            .cmp(&rules[a].pattern.len())
            .then(rules[a].order.cmp(&rules[b].order))
    }
}

impl RuleSet {
    /// Builds the indices. Rules must already be validated; `order` is
    /// reassigned from position.
    pub(crate) fn from_validated(mut rules: Vec<SuffixRule>) -> Self {
        for (i, r) in rules.iter_mut().enumerate() {
            r.order = i;
        }
        let mut by_class: [Vec<usize>; 7] = Default::default();
        let mut by_last: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_class[r.class as usize].push(i);
            if let Some(last) = r.pattern.last() {
                by_last.entry(last.to_owned()).or_default().push(i);
            }
        }
        {
            let cmp = match_order(&rules);
            for v in by_class.iter_mut() {
                v.sort_by(&cmp);
            }
            for v in by_last.values_mut() {
                v.sort_by(&cmp);
            }
        }
        RuleSet {
            rules,
            by_class,
            by_last,
        }
    }

    pub fn empty() -> Self {
        Self::from_validated(Vec::new())
    }

    pub fn rules(&self) -> &[SuffixRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules of one class in match order.
    pub fn class_rules(&self, class: SuffixClass) -> impl Iterator<Item = &SuffixRule> {
        self.by_class[class as usize]
            .iter()
            .map(|&i| &self.rules[i])
    }

    /// Applicable rules among `allowed` classes, longest pattern first with
    /// file order breaking ties.
    pub fn candidates(&self, word: &GraphemeWord, allowed: ClassSet) -> Vec<&SuffixRule> {
        self.ending_with_last(word)
            .iter()
            .map(|&i| &self.rules[i])
            .filter(|r| allowed.contains(r.class) && r.applies_to(word))
            .collect()
    }

    /// First element of [`candidates`](Self::candidates), without allocating.
    pub fn best(&self, word: &GraphemeWord, allowed: ClassSet) -> Option<&SuffixRule> {
        self.ending_with_last(word)
            .iter()
            .map(|&i| &self.rules[i])
            .find(|r| allowed.contains(r.class) && r.applies_to(word))
    }

    /// Rules whose pattern ends in the same cluster as `word`.
    fn ending_with_last(&self, word: &GraphemeWord) -> &[usize] {
        word.last()
            .and_then(|last| self.by_last.get(last))
            .map_or(&[], Vec::as_slice)
    }
}

static BUILTIN_TEXT: &str = include_str!("../../data/builtin.rules");

/// Source text of the built-in rule file.
pub fn builtin_rules_text() -> &'static str {
    BUILTIN_TEXT
}

/// The shipped rule inventory.
pub fn builtin_rules() -> &'static RuleSet {
    static RULES: OnceLock<RuleSet> = OnceLock::new();
    RULES.get_or_init(|| parse_rules(BUILTIN_TEXT).expect("built-in rule file is valid"))
}

/// Free-function form of [`RuleSet::candidates`].
pub fn candidates<'a>(
    rules: &'a RuleSet,
    word: &GraphemeWord,
    allowed: ClassSet,
) -> Vec<&'a SuffixRule> {
    rules.candidates(word, allowed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GraphemeWord {
        GraphemeWord::new(s)
    }

    fn find<'a>(rules: &'a RuleSet, class: SuffixClass, pattern: &str) -> Option<&'a SuffixRule> {
        rules
            .rules()
            .iter()
            .find(|r| r.class == class && r.pattern.as_str() == pattern)
    }

    #[test]
    fn builtins_parse_and_hold_invariants() {
        let rules = builtin_rules();
        assert!(rules.len() > 100);
        for r in rules.rules() {
            assert!(!r.pattern.is_empty());
            assert!(r.min_stem >= 1);
            assert!(r.replacement.len() < r.pattern.len(), "{r}");
        }
    }

    #[test]
    fn builtins_contain_table_suffixes() {
        let rules = builtin_rules();
        // dative -ukku after the plural and after -i/-ai nouns
        assert!(find(rules, SuffixClass::Case, "ளுக்கு").is_some());
        assert!(find(rules, SuffixClass::Case, "க்கு").is_some());
        let neg = find(rules, SuffixClass::NegativeCompound, "க்கமாட்டேன்").unwrap();
        assert!(neg.replacement.is_empty());
        let ngal = find(rules, SuffixClass::Plural, "ங்கள்").unwrap();
        assert_eq!(ngal.replacement.as_str(), "ம்");
        let diya = find(rules, SuffixClass::AdjectivalParticiple, "டிய").unwrap();
        assert_eq!(diya.replacement.as_str(), "டு");
        let obl = find(rules, SuffixClass::Case, "த்தில்").unwrap();
        assert_eq!(obl.replacement.as_str(), "ம்");
        assert!(find(rules, SuffixClass::NegativeCompound, "க்கவில்லை").is_some());
    }

    #[test]
    fn class_index_is_consistent() {
        let rules = builtin_rules();
        let mut seen = 0;
        for class in SuffixClass::ALL {
            let v: Vec<&SuffixRule> = rules.class_rules(class).collect();
            assert!(v.iter().all(|r| r.class == class));
            for pair in v.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                assert!(
                    a.pattern.len() > b.pattern.len()
                        || (a.pattern.len() == b.pattern.len() && a.order < b.order)
                );
            }
            seen += v.len();
        }
        assert_eq!(seen, rules.len());
    }

    #[test]
    fn candidates_head_with_longest_pattern() {
        let rules = builtin_rules();
        let verbal: ClassSet = [
            SuffixClass::Tense,
            SuffixClass::PersonNumberGender,
            SuffixClass::NegativeCompound,
        ]
        .into_iter()
        .collect();
        let c = rules.candidates(&w("படித்தேன்"), verbal);
        assert_eq!(c[0].pattern.as_str(), "த்தேன்");
        assert_eq!(c[0].class, SuffixClass::PersonNumberGender);
        assert!(rules.candidates(&w("படி"), ClassSet::ALL).is_empty());
        assert!(rules
            .candidates(&GraphemeWord::empty(), ClassSet::ALL)
            .is_empty());
        assert!(rules.candidates(&w("படித்தேன்"), ClassSet::EMPTY).is_empty());
    }

    #[test]
    fn candidates_respect_min_stem() {
        // "கள்" alone would leave nothing.
        assert!(builtin_rules()
            .candidates(&w("கள்"), ClassSet::ALL)
            .is_empty());
        // Two clusters left over is allowed.
        let c = builtin_rules().candidates(&w("கிளிகள்"), ClassSet::ALL);
        assert_eq!(c[0].pattern.as_str(), "கள்");
    }

    #[test]
    fn class_names_round_trip() {
        for c in SuffixClass::ALL {
            assert_eq!(c.name().parse::<SuffixClass>().unwrap(), c);
        }
        assert!("case".parse::<SuffixClass>().is_err());
    }
}
