//! Comment- and string-aware source scanner. One pass produces the
//! comment-stripped text plus the syntax facts (bracket balance,
//! unterminated literals) the filters need. String literals are never
//! scanned for comment markers.

use super::rules::LanguageRuleSet;

#[derive(Debug, Default)]
pub struct ScanResult {
    /// Input with line comments truncated and block comments removed.
    pub stripped: String,
    /// A single-line string hit a newline/EOF, or a multiline string hit EOF.
    pub unterminated_string: bool,
    /// A block comment ran to end of text.
    pub unterminated_block: bool,
    /// `()`, `[]`, `{}` outside strings/comments balance and nest properly.
    pub brackets_balanced: bool,
    /// `{`/`}` balance outside strings/comments (for the format check).
    pub braces_balanced: bool,
}

fn match_at<'a>(bytes: &[u8], i: usize, needles: &'a [String]) -> Option<&'a str> {
    needles
        .iter()
        .find(|n| !n.is_empty() && bytes[i..].starts_with(n.as_bytes()))
        .map(|n| n.as_str())
}

fn closer_for(open: u8) -> u8 {
    match open {
        b'(' => b')',
        b'[' => b']',
        _ => b'}',
    }
}

pub fn scan(text: &str, rules: &LanguageRuleSet) -> ScanResult {
    let bytes = text.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut stack: Vec<u8> = Vec::new();
    let mut brace_depth: i64 = 0;
    let mut result = ScanResult { brackets_balanced: true, braces_balanced: true, ..Default::default() };

    let mut i = 0;
    while i < bytes.len() {
        // multiline strings first: their delimiters often extend single
        // ones (""" vs "), so longest match wins
        if let Some(delim) = match_at(bytes, i, &rules.multiline_strings) {
            out.extend_from_slice(delim.as_bytes());
            i += delim.len();
            let mut closed = false;
            while i < bytes.len() {
                if bytes[i] == b'\\' && i + 1 < bytes.len() {
                    out.extend_from_slice(&bytes[i..i + 2]);
                    i += 2;
                    continue;
                }
                if bytes[i..].starts_with(delim.as_bytes()) {
                    out.extend_from_slice(delim.as_bytes());
                    i += delim.len();
                    closed = true;
                    break;
                }
                out.push(bytes[i]);
                i += 1;
            }
            if !closed {
                result.unterminated_string = true;
            }
            continue;
        }

        if let Some((open, close)) = rules
            .block_comments
            .iter()
            .find(|(open, _)| bytes[i..].starts_with(open.as_bytes()))
        {
            i += open.len();
            let mut closed = false;
            while i < bytes.len() {
                if bytes[i..].starts_with(close.as_bytes()) {
                    i += close.len();
                    closed = true;
                    break;
                }
                // keep line structure so line counts survive stripping
                if bytes[i] == b'\n' {
                    out.push(b'\n');
                }
                i += 1;
            }
            if !closed {
                result.unterminated_block = true;
            }
            continue;
        }

        if match_at(bytes, i, &rules.line_comments).is_some() {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }

        let c = bytes[i];
        if c.is_ascii() && rules.string_delimiters.contains(&(c as char)) {
            out.push(c);
            i += 1;
            let mut closed = false;
            while i < bytes.len() {
                if bytes[i] == b'\\' && i + 1 < bytes.len() {
                    out.extend_from_slice(&bytes[i..i + 2]);
                    i += 2;
                    continue;
                }
                if bytes[i] == c {
                    out.push(c);
                    i += 1;
                    closed = true;
                    break;
                }
                if bytes[i] == b'\n' {
                    break;
                }
                out.push(bytes[i]);
                i += 1;
            }
            if !closed {
                result.unterminated_string = true;
            }
            continue;
        }

        match c {
            b'(' | b'[' | b'{' => {
                stack.push(c);
                if c == b'{' {
                    brace_depth += 1;
                }
            }
            b')' | b']' | b'}' => {
                match stack.pop() {
                    Some(open) if closer_for(open) == c => {}
                    _ => result.brackets_balanced = false,
                }
                if c == b'}' {
                    brace_depth -= 1;
                    if brace_depth < 0 {
                        result.braces_balanced = false;
                    }
                }
            }
            _ => {}
        }
        out.push(c);
        i += 1;
    }

    if !stack.is_empty() {
        result.brackets_balanced = false;
    }
    if brace_depth != 0 {
        result.braces_balanced = false;
    }
    result.stripped = String::from_utf8(out).expect("scanner preserves UTF-8");
    result
}

/// Remove comments: line comments truncated at the marker, block
/// comments removed (newlines inside them preserved). An unterminated
/// block comment is removed to end of text.
pub fn strip_comments(text: &str, rules: &LanguageRuleSet) -> String {
    scan(text, rules).stripped
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_filter::builtin_rules;

    #[test]
    fn line_comment_truncated() {
        let rules = builtin_rules();
        assert_eq!(strip_comments("x = 1 # hi", &rules["python"]), "x = 1 ");
    }

    #[test]
    fn block_comment_removed() {
        let rules = builtin_rules();
        assert_eq!(strip_comments("/* a */ y;", &rules["cpp"]), " y;");
    }

    #[test]
    fn string_literal_protected() {
        let rules = builtin_rules();
        let src = "s = \"#not a comment\"";
        assert_eq!(strip_comments(src, &rules["python"]), src);
    }

    #[test]
    fn unterminated_block_removed_to_end() {
        let rules = builtin_rules();
        let r = scan("x; /* trailing", &rules["cpp"]);
        assert_eq!(r.stripped, "x; ");
        assert!(r.unterminated_block);
    }

    #[test]
    fn block_comment_keeps_line_count() {
        let rules = builtin_rules();
        let src = "a;\n/* one\ntwo */\nb;";
        let stripped = strip_comments(src, &rules["cpp"]);
        assert_eq!(stripped.lines().count(), src.lines().count());
    }

    #[test]
    fn triple_quoted_string_spans_lines() {
        let rules = builtin_rules();
        let src = "s = \"\"\"line1\nline2\"\"\"\nx = 1";
        let r = scan(src, &rules["python"]);
        assert!(!r.unterminated_string);
        assert_eq!(r.stripped, src);
    }

    #[test]
    fn comment_marker_inside_comment_text() {
        let rules = builtin_rules();
        assert_eq!(strip_comments("y = 2 # first # second", &rules["python"]), "y = 2 ");
    }
}
