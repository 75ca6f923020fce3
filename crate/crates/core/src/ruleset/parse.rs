use std::collections::HashMap;

use thiserror::Error;

use super::{ClassSet, RuleSet, SuffixClass, SuffixRule};
use crate::script::GraphemeWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown suffix class `{name}`")]
    UnknownClass { line: usize, name: String },
    #[error("line {line}: {class} rule `{pattern}` duplicates the rule on line {first_line}")]
    Conflict {
        class: SuffixClass,
        pattern: String,
        first_line: usize,
        line: usize,
    },
    #[error("line {line}: replacement `{replacement}` is not shorter than pattern `{pattern}`")]
    NonShortening {
        line: usize,
        pattern: String,
        replacement: String,
    },
}

impl RuleError {
    pub fn line(&self) -> usize {
        match self {
            RuleError::Syntax { line, .. }
            | RuleError::UnknownClass { line, .. }
            | RuleError::Conflict { line, .. }
            | RuleError::NonShortening { line, .. } => *line,
        }
    }

    /// Conflicts and termination violations, as opposed to malformed lines.
    pub fn is_conflict(&self) -> bool {
        matches!(
            self,
            RuleError::Conflict { .. } | RuleError::NonShortening { .. }
        )
    }
}

fn syntax(line: usize, message: impl Into<String>) -> RuleError {
    RuleError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_line(line_no: usize, line: &str) -> Result<SuffixRule, RuleError> {
    let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
    // A terminal rule's empty last field is often lost to trailing-whitespace
    // trimming in editors, so four fields are accepted too.
    if !(4..=5).contains(&fields.len()) {
        return Err(syntax(
            line_no,
            format!("expected 5 tab-separated fields, found {}", fields.len()),
        ));
    }
    let class = fields[0]
        .parse::<SuffixClass>()
        .map_err(|name| RuleError::UnknownClass {
            line: line_no,
            name,
        })?;
    let pattern = GraphemeWord::new(fields[1]);
    if pattern.is_empty() {
        return Err(syntax(line_no, "empty pattern"));
    }
    let replacement = GraphemeWord::new(fields[2]);
    let min_stem: usize = fields[3]
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid min_stem `{}`", fields[3])))?;
    if min_stem == 0 {
        return Err(syntax(line_no, "min_stem must be at least 1"));
    }
    let mut next_classes = ClassSet::EMPTY;
    for name in fields.get(4).copied().unwrap_or("").split(',') {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        let c = name
            .parse::<SuffixClass>()
            .map_err(|name| RuleError::UnknownClass {
                line: line_no,
                name,
            })?;
        next_classes.insert(c);
    }
    if replacement.len() >= pattern.len() {
        return Err(RuleError::NonShortening {
            line: line_no,
            pattern: pattern.into_string(),
            replacement: replacement.into_string(),
        });
    }
    Ok(SuffixRule {
        class,
        pattern,
        replacement,
        min_stem,
        next_classes,
        order: 0,
    })
}

fn scan(text: &str) -> (Vec<SuffixRule>, Vec<RuleError>) {
    let mut rules = Vec::new();
    let mut errors = Vec::new();
    let mut seen: HashMap<(SuffixClass, String), usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        match parse_line(line_no, content) {
            Ok(rule) => {
                let key = (rule.class, rule.pattern.as_str().to_owned());
                if let Some(&first_line) = seen.get(&key) {
                    errors.push(RuleError::Conflict {
                        class: rule.class,
                        pattern: key.1,
                        first_line,
                        line: line_no,
                    });
                } else {
                    seen.insert(key, line_no);
                    rules.push(rule);
                }
            }
            Err(e) => errors.push(e),
        }
    }
    (rules, errors)
}

/// Parses a rule file, failing on the first problem.
pub fn parse_rules(text: &str) -> Result<RuleSet, RuleError> {
    let (rules, mut errors) = scan(text);
    if errors.is_empty() {
        Ok(RuleSet::from_validated(rules))
    } else {
        Err(errors.swap_remove(0))
    }
}

/// Every problem in a rule file, in line order.
pub fn validate_rules(text: &str) -> Vec<RuleError> {
    scan(text).1
}

/// Serializes a rule set in the rule-file format.
pub fn render_rules(rules: &RuleSet) -> String {
    let mut out = String::new();
    for r in rules.rules() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.class, r.pattern, r.replacement, r.min_stem, r.next_classes
        ));
    }
    out
}
