//! Tamil stemming.
//!
//! Two stemmers share one declarative suffix-rule table:
//!
//! - [`light::light_stem`] strips from the outermost suffix inward, letting
//!   each rule decide which suffix classes may follow it, and restores base
//!   forms through substitutions (`மரங்கள்` -> `மரம்`, `ஓடிய` -> `ஓடு`).
//! - [`strip::strip_stem`] is the plain baseline: repeatedly remove the
//!   longest matching suffix of any class.
//!
//! All matching happens over grapheme clusters ([`script::GraphemeWord`]), so
//! a rule for `-ai` never splits a consonant from its vowel sign.
//!
//! ```
//! use tamil_stem::{builtin_rules, light_stem, GraphemeWord};
//!
//! let word = GraphemeWord::new("பெண்களுக்கு");
//! assert_eq!(light_stem(&word, builtin_rules()).stem.as_str(), "பெண்");
//! ```

pub mod corpus;
pub mod eval;
pub mod light;
pub mod ruleset;
pub mod script;
pub mod stem;
pub mod strip;

pub use eval::{
    accuracy, compare, dataset_stats, evaluate, load_gold, render, Accuracy, DatasetStats,
    EvalError, EvalReport, EvalRow, GoldEntry, ReportFormat,
};
pub use light::{adjectival_to_verb, light_stem, strip_plural, strip_tense, LightStemmer};
pub use ruleset::{
    builtin_rules, generate_forms, parse_rules, ClassSet, Paradigm, RuleError, RuleSet,
    SuffixClass, SuffixRule,
};
pub use script::{normalize, segment, GraphemeWord};
pub use stem::{StemResult, Stemmer, TraceStep};
pub use strip::{stem_batch, strip_stem, StripStemmer};
