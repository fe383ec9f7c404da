//! Per-language cleaning rules, preloaded with the thresholds used for
//! Python, JavaScript, Java, and C++ and loadable from a TOML file keyed
//! by language name.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LanguageRuleSet {
    pub language: String,
    /// A file fails when any physical line is strictly longer than this.
    pub max_line_chars: usize,
    /// A file fails when it has strictly fewer whitespace tokens.
    pub min_tokens: usize,
    /// A file fails when it has strictly more whitespace tokens.
    pub max_tokens: usize,
    #[serde(default)]
    pub line_comments: Vec<String>,
    #[serde(default)]
    pub block_comments: Vec<(String, String)>,
    /// Single-line string delimiters; a newline inside one is an
    /// unterminated literal.
    #[serde(default)]
    pub string_delimiters: Vec<char>,
    /// Delimiters of strings that may span lines (triple quotes, backtick).
    #[serde(default)]
    pub multiline_strings: Vec<String>,
    /// Literal markers of known-bad files (minified/generated artifacts);
    /// matched as substrings of the document text or its id.
    #[serde(default)]
    pub bad_patterns: Vec<String>,
    pub keywords: Vec<String>,
    /// A trimmed line starting with one of these is not executable.
    #[serde(default)]
    pub non_executable_prefixes: Vec<String>,
    /// A trimmed line equal to one of these is not executable.
    #[serde(default)]
    pub non_executable_exact: Vec<String>,
    /// Soft-wrap detection before the long-line rule; off by default and
    /// currently a no-op placeholder for an external hook.
    #[serde(default)]
    pub soft_wrap_detection: bool,
}

impl LanguageRuleSet {
    pub fn validate(&self) -> Result<()> {
        if self.max_line_chars == 0 {
            return Err(Error::Config(format!("{}: max_line_chars must be positive", self.language)));
        }
        if self.min_tokens >= self.max_tokens {
            return Err(Error::Config(format!(
                "{}: min_tokens ({}) must be < max_tokens ({})",
                self.language, self.min_tokens, self.max_tokens
            )));
        }
        Ok(())
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.keywords.iter().any(|k| k == word)
    }
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn python_rules() -> LanguageRuleSet {
    LanguageRuleSet {
        language: "python".into(),
        max_line_chars: 200,
        min_tokens: 10,
        max_tokens: 10_000,
        line_comments: strings(&["#"]),
        block_comments: vec![],
        string_delimiters: vec!['"', '\''],
        multiline_strings: strings(&["\"\"\"", "'''"]),
        bad_patterns: strings(&[".pyc", "__pycache__"]),
        keywords: strings(&[
            "def", "return", "if", "elif", "else", "for", "while", "in", "import", "from", "as",
            "class", "try", "except", "finally", "with", "lambda", "pass", "break", "continue",
            "global", "nonlocal", "yield", "assert", "raise", "del", "not", "and", "or", "is",
            "None", "True", "False", "async", "await", "match", "case",
        ]),
        non_executable_prefixes: strings(&["import ", "from ", "@"]),
        non_executable_exact: vec![],
        soft_wrap_detection: false,
    }
}

fn javascript_rules() -> LanguageRuleSet {
    LanguageRuleSet {
        language: "javascript".into(),
        max_line_chars: 150,
        min_tokens: 10,
        max_tokens: 8_000,
        line_comments: strings(&["//"]),
        block_comments: vec![("/*".into(), "*/".into())],
        string_delimiters: vec!['"', '\''],
        multiline_strings: strings(&["`"]),
        bad_patterns: strings(&[".min.js", "!function(e,t)"]),
        keywords: strings(&[
            "function", "return", "if", "else", "for", "while", "do", "var", "let", "const",
            "class", "new", "this", "typeof", "instanceof", "import", "export", "from", "default",
            "try", "catch", "finally", "throw", "switch", "case", "break", "continue", "null",
            "undefined", "true", "false", "async", "await", "yield", "delete", "in", "of", "void",
            "static", "get", "set", "extends", "super",
        ]),
        non_executable_prefixes: strings(&["import ", "export ", "require("]),
        non_executable_exact: vec![],
        soft_wrap_detection: false,
    }
}

fn java_rules() -> LanguageRuleSet {
    LanguageRuleSet {
        language: "java".into(),
        max_line_chars: 150,
        min_tokens: 15,
        max_tokens: 9_000,
        line_comments: strings(&["//"]),
        block_comments: vec![("/*".into(), "*/".into())],
        string_delimiters: vec!['"', '\''],
        multiline_strings: strings(&["\"\"\""]),
        bad_patterns: strings(&["@Generated", "lombok.", "DO NOT EDIT"]),
        keywords: strings(&[
            "public", "private", "protected", "static", "final", "void", "int", "long", "double",
            "float", "boolean", "char", "byte", "short", "class", "interface", "enum", "extends",
            "implements", "return", "if", "else", "for", "while", "do", "switch", "case", "break",
            "continue", "new", "this", "super", "import", "package", "try", "catch", "finally",
            "throw", "throws", "abstract", "synchronized", "volatile", "transient", "native",
            "instanceof", "null", "true", "false", "var", "record",
        ]),
        non_executable_prefixes: strings(&["import ", "package ", "@"]),
        non_executable_exact: vec![],
        soft_wrap_detection: false,
    }
}

fn cpp_rules() -> LanguageRuleSet {
    LanguageRuleSet {
        language: "cpp".into(),
        max_line_chars: 150,
        min_tokens: 15,
        max_tokens: 9_000,
        line_comments: strings(&["//"]),
        block_comments: vec![("/*".into(), "*/".into())],
        string_delimiters: vec!['"', '\''],
        multiline_strings: vec![],
        bad_patterns: strings(&["automatically generated", "DO NOT EDIT", "swig", "generated by"]),
        keywords: strings(&[
            "int", "long", "double", "float", "bool", "char", "void", "auto", "const", "static",
            "class", "struct", "enum", "union", "template", "typename", "namespace", "using",
            "return", "if", "else", "for", "while", "do", "switch", "case", "break", "continue",
            "new", "delete", "this", "public", "private", "protected", "virtual", "override",
            "final", "try", "catch", "throw", "nullptr", "true", "false", "constexpr", "inline",
            "friend", "operator", "sizeof", "typedef", "unsigned", "signed", "short",
        ]),
        non_executable_prefixes: strings(&["#include", "#pragma", "using "]),
        non_executable_exact: strings(&["public:", "private:", "protected:"]),
        soft_wrap_detection: false,
    }
}

/// The built-in table of per-language thresholds.
pub fn builtin_rules() -> BTreeMap<String, LanguageRuleSet> {
    let mut map = BTreeMap::new();
    for rules in [python_rules(), javascript_rules(), java_rules(), cpp_rules()] {
        map.insert(rules.language.clone(), rules);
    }
    map
}

/// Parse rule sets from TOML keyed by language name.
pub fn parse_rules(source: &str) -> Result<BTreeMap<String, LanguageRuleSet>> {
    let map: BTreeMap<String, LanguageRuleSet> =
        toml::from_str(source).map_err(|e| Error::Config(format!("rules file: {e}")))?;
    for (name, rules) in &map {
        rules.validate()?;
        if &rules.language != name {
            return Err(Error::Config(format!(
                "rules key `{name}` does not match language field `{}`",
                rules.language
            )));
        }
    }
    Ok(map)
}

/// Load rules from a file, or the built-in table when `path` is `None`.
pub fn load_rules(path: Option<&Path>) -> Result<BTreeMap<String, LanguageRuleSet>> {
    match path {
        Some(p) => parse_rules(&std::fs::read_to_string(p)?),
        None => Ok(builtin_rules()),
    }
}

/// Serialize a rule table to TOML (used by `--dump-rules`).
pub fn rules_to_toml(rules: &BTreeMap<String, LanguageRuleSet>) -> String {
    toml::to_string_pretty(rules).expect("rule serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_thresholds_match_table() {
        let rules = builtin_rules();
        let py = &rules["python"];
        assert_eq!((py.max_line_chars, py.min_tokens, py.max_tokens), (200, 10, 10_000));
        let js = &rules["javascript"];
        assert_eq!((js.max_line_chars, js.min_tokens, js.max_tokens), (150, 10, 8_000));
        let java = &rules["java"];
        assert_eq!((java.max_line_chars, java.min_tokens, java.max_tokens), (150, 15, 9_000));
        let cpp = &rules["cpp"];
        assert_eq!((cpp.max_line_chars, cpp.min_tokens, cpp.max_tokens), (150, 15, 9_000));
    }

    #[test]
    fn toml_roundtrip() {
        let rules = builtin_rules();
        let text = rules_to_toml(&rules);
        let back = parse_rules(&text).unwrap();
        assert_eq!(back.len(), rules.len());
        assert_eq!(back["python"].max_tokens, 10_000);
    }

    #[test]
    fn invalid_bounds_rejected() {
        let mut r = python_rules();
        r.min_tokens = 100;
        r.max_tokens = 10;
        assert!(r.validate().is_err());
    }
}
