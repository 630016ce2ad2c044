//! Parenthesized tree notation.
//!
//! Plain trees: `tree ::= '(' tree* ')'`, whitespace ignored, children in the
//! order written.
//!
//! Delayed trees: `dtree ::= '(' item* ')'`, `item ::= dtree | DIGIT | '<' INT '>'`.
//! A digit `1`..`9` is a leaf with that delay, `<n>` is a leaf with delay `n`
//! (for values above 9), and an empty group `()` below the root is a leaf
//! with delay 1. So `(32123)` is a five-leaf hedgehog.

use super::{DelayAssignment, PlaneRootedTree, TreeError};

pub fn parse_tree(text: &str) -> Result<PlaneRootedTree, TreeError> {
    let mut stack: Vec<Vec<PlaneRootedTree>> = Vec::new();
    let mut root = None;
    for (offset, ch) in text.char_indices() {
        if ch.is_whitespace() {
            continue;
        }
        if root.is_some() {
            return Err(TreeError::syntax(
                offset,
                "unexpected input after the root group",
            ));
        }
        match ch {
            '(' => stack.push(Vec::new()),
            ')' => {
                let children = stack
                    .pop()
                    .ok_or_else(|| TreeError::syntax(offset, "unmatched ')'"))?;
                let node = PlaneRootedTree::from_children(children);
                match stack.last_mut() {
                    Some(parent) => parent.push(node),
                    None => root = Some(node),
                }
            }
            other => {
                return Err(TreeError::syntax(
                    offset,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    root.ok_or_else(|| {
        if stack.is_empty() {
            TreeError::syntax(text.len(), "empty input")
        } else {
            TreeError::syntax(text.len(), "unbalanced parentheses: missing ')'")
        }
    })
}

pub fn serialize_tree(tree: &PlaneRootedTree) -> String {
    fn write(t: &PlaneRootedTree, out: &mut String) {
        out.push('(');
        for c in t.children() {
            write(c, out);
        }
        out.push(')');
    }
    let mut out = String::with_capacity(2 * tree.node_count());
    write(tree, &mut out);
    out
}

enum Item {
    Node(PlaneRootedTree),
    Leaf,
}

fn leaf_from_items(items: Vec<Item>) -> PlaneRootedTree {
    PlaneRootedTree::from_children(
        items
            .into_iter()
            .map(|item| match item {
                Item::Node(t) => t,
                Item::Leaf => PlaneRootedTree::vertex(),
            })
            .collect(),
    )
}

pub fn parse_delayed_tree(text: &str) -> Result<(PlaneRootedTree, DelayAssignment), TreeError> {
    let bytes = text.as_bytes();
    let mut stack: Vec<Vec<Item>> = Vec::new();
    let mut delays = Vec::new();
    let mut root = None;
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let offset = i;
        i += 1;
        if b.is_ascii_whitespace() {
            continue;
        }
        if root.is_some() {
            return Err(TreeError::syntax(
                offset,
                "unexpected input after the root group",
            ));
        }
        match b {
            b'(' => stack.push(Vec::new()),
            b')' => {
                let items = stack
                    .pop()
                    .ok_or_else(|| TreeError::syntax(offset, "unmatched ')'"))?;
                match stack.last_mut() {
                    None => root = Some(leaf_from_items(items)),
                    Some(parent) if items.is_empty() => {
                        parent.push(Item::Leaf);
                        delays.push(1);
                    }
                    Some(parent) => parent.push(Item::Node(leaf_from_items(items))),
                }
            }
            b'0'..=b'9' => {
                let parent = stack
                    .last_mut()
                    .ok_or_else(|| TreeError::syntax(offset, "delay value outside any group"))?;
                let value = u32::from(b - b'0');
                if value == 0 {
                    return Err(TreeError::ZeroDelay { offset });
                }
                parent.push(Item::Leaf);
                delays.push(value);
            }
            b'<' => {
                let parent = stack
                    .last_mut()
                    .ok_or_else(|| TreeError::syntax(offset, "delay value outside any group"))?;
                let close = text[i..]
                    .find('>')
                    .map(|k| i + k)
                    .ok_or_else(|| TreeError::syntax(offset, "unterminated '<'"))?;
                let digits = text[i..close].trim();
                let value: u32 = digits.parse().map_err(|_| {
                    TreeError::syntax(offset, format!("bad delay value {digits:?}"))
                })?;
                if value == 0 {
                    return Err(TreeError::ZeroDelay { offset });
                }
                parent.push(Item::Leaf);
                delays.push(value);
                i = close + 1;
            }
            _ => {
                let ch = text[offset..].chars().next().unwrap_or('?');
                return Err(TreeError::syntax(
                    offset,
                    format!("unexpected character {ch:?}"),
                ));
            }
        }
    }
    let root = root.ok_or_else(|| {
        if stack.is_empty() {
            TreeError::syntax(text.len(), "empty input")
        } else {
            TreeError::syntax(text.len(), "unbalanced parentheses: missing ')'")
        }
    })?;
    Ok((root, DelayAssignment(delays)))
}

fn push_delay(value: u32, out: &mut String) {
    if value <= 9 {
        out.push(char::from(b'0' + value as u8));
    } else {
        out.push('<');
        out.push_str(&value.to_string());
        out.push('>');
    }
}

/// Inverse of [`parse_delayed_tree`]. Every leaf is written as its delay
/// value, so `(2((3))1)` round-trips unchanged.
pub fn serialize_delayed_tree(tree: &PlaneRootedTree, delays: &DelayAssignment) -> String {
    fn write(t: &PlaneRootedTree, delays: &mut std::slice::Iter<'_, u32>, out: &mut String) {
        out.push('(');
        for c in t.children() {
            if c.children().is_empty() {
                push_delay(*delays.next().expect("one delay per leaf"), out);
            } else {
                write(c, delays, out);
            }
        }
        out.push(')');
    }
    let mut out = String::with_capacity(2 * tree.node_count());
    write(tree, &mut delays.values().iter(), &mut out);
    out
}

/// Hedgehog delay string: compact digits (`32123`) when every value is a
/// single digit, space-separated otherwise.
pub fn format_delays(delays: &[u32]) -> String {
    if delays.iter().all(|&d| d <= 9) {
        delays.iter().map(|d| d.to_string()).collect()
    } else {
        delays
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses hedgehog delay shorthand: `32123`, `3 2 1 2 3`, `3,2,1,2,3` or
/// run-length `1^2 4^3 1^2`. A lone token of several digits is read one digit
/// per leaf.
pub fn parse_hedgehog_shorthand(text: &str) -> Result<Vec<u32>, TreeError> {
    let tokens: Vec<(usize, &str)> = split_tokens(text);
    if tokens.is_empty() {
        return Err(TreeError::syntax(0, "empty delay string"));
    }
    let compact = tokens.len() == 1 && !tokens[0].1.contains('^');
    let mut out = Vec::new();
    for (offset, tok) in tokens {
        if compact {
            for (k, ch) in tok.char_indices() {
                let value = ch
                    .to_digit(10)
                    .ok_or_else(|| TreeError::syntax(offset + k, format!("not a digit: {ch:?}")))?;
                if value == 0 {
                    return Err(TreeError::ZeroDelay { offset: offset + k });
                }
                out.push(value);
            }
            continue;
        }
        let (value_text, count) = match tok.split_once('^') {
            Some((v, c)) => {
                let count: usize = c.parse().map_err(|_| {
                    TreeError::syntax(offset, format!("bad repeat count in {tok:?}"))
                })?;
                (v, count)
            }
            None => (tok, 1),
        };
        let value: u32 = value_text
            .parse()
            .map_err(|_| TreeError::syntax(offset, format!("bad delay value in {tok:?}")))?;
        if value == 0 {
            return Err(TreeError::ZeroDelay { offset });
        }
        out.extend(std::iter::repeat_n(value, count));
    }
    Ok(out)
}

fn split_tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let sep = ch.is_whitespace() || ch == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_trees() {
        assert_eq!(parse_tree("()").unwrap(), PlaneRootedTree::vertex());
        assert_eq!(
            parse_tree("(()()())").unwrap(),
            PlaneRootedTree::hedgehog(3)
        );
        let t = parse_tree(" ( ()\n (() ()) ) ").unwrap();
        assert_eq!(serialize_tree(&t), "(()(()()))");
        assert_eq!(t.edge_count(), 4);
    }

    #[test]
    fn plain_syntax_errors_carry_offsets() {
        assert_eq!(
            parse_tree("(()("),
            Err(TreeError::syntax(4, "unbalanced parentheses: missing ')'"))
        );
        assert!(matches!(
            parse_tree("())"),
            Err(TreeError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_tree("(x)"),
            Err(TreeError::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse_tree(""),
            Err(TreeError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_tree("()()"),
            Err(TreeError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_tree(")"),
            Err(TreeError::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn parses_delayed_trees() {
        let (t, f) = parse_delayed_tree("(2((3))1)").unwrap();
        assert_eq!(serialize_tree(&t), "(()((()))())");
        assert_eq!(f.values(), &[2, 3, 1]);

        let (t, f) = parse_delayed_tree("(32123)").unwrap();
        assert_eq!(t, PlaneRootedTree::hedgehog(5));
        assert_eq!(f.values(), &[3, 2, 1, 2, 3]);

        let (t, f) = parse_delayed_tree("(11)").unwrap();
        assert_eq!(t, PlaneRootedTree::hedgehog(2));
        assert_eq!(f.values(), &[1, 1]);

        let (t, f) = parse_delayed_tree("(()(2 <12>))").unwrap();
        assert_eq!(serialize_tree(&t), "(()(()()))");
        assert_eq!(f.values(), &[1, 2, 12]);
        assert_eq!(serialize_delayed_tree(&t, &f), "(1(2<12>))");

        let (t, f) = parse_delayed_tree("()").unwrap();
        assert_eq!(t, PlaneRootedTree::vertex());
        assert!(f.is_empty());
    }

    #[test]
    fn delayed_errors() {
        assert_eq!(
            parse_delayed_tree("(10)"),
            Err(TreeError::ZeroDelay { offset: 2 })
        );
        assert_eq!(
            parse_delayed_tree("(<0>)"),
            Err(TreeError::ZeroDelay { offset: 1 })
        );
        assert!(matches!(
            parse_delayed_tree("(1"),
            Err(TreeError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_delayed_tree("1"),
            Err(TreeError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_delayed_tree("(<3)"),
            Err(TreeError::Syntax { .. })
        ));
        assert!(matches!(
            parse_delayed_tree("(a)"),
            Err(TreeError::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn delayed_round_trip() {
        for s in ["(2((3))1)", "(32123)", "(1(2<12>)((1)9))", "()"] {
            let (t, f) = parse_delayed_tree(s).unwrap();
            assert_eq!(serialize_delayed_tree(&t, &f), s);
        }
    }

    #[test]
    fn hedgehog_shorthand() {
        assert_eq!(
            parse_hedgehog_shorthand("32123").unwrap(),
            vec![3, 2, 1, 2, 3]
        );
        assert_eq!(
            parse_hedgehog_shorthand("3 2 1 2 3").unwrap(),
            vec![3, 2, 1, 2, 3]
        );
        assert_eq!(
            parse_hedgehog_shorthand("3,2,1,2,3").unwrap(),
            vec![3, 2, 1, 2, 3]
        );
        assert_eq!(
            parse_hedgehog_shorthand("1^2 4^3 1^2").unwrap(),
            vec![1, 1, 4, 4, 4, 1, 1]
        );
        assert_eq!(parse_hedgehog_shorthand("12 1").unwrap(), vec![12, 1]);
        assert_eq!(parse_hedgehog_shorthand("7").unwrap(), vec![7]);
        assert_eq!(parse_hedgehog_shorthand("1^2").unwrap(), vec![1, 1]);
        assert!(parse_hedgehog_shorthand("").is_err());
        assert!(parse_hedgehog_shorthand("3a1").is_err());
        assert_eq!(
            parse_hedgehog_shorthand("302"),
            Err(TreeError::ZeroDelay { offset: 1 })
        );
        assert!(parse_hedgehog_shorthand("0^2 1").is_err());
    }

    #[test]
    fn delay_strings() {
        assert_eq!(format_delays(&[2, 1, 4, 1, 2]), "21412");
        assert_eq!(format_delays(&[12, 1]), "12 1");
        assert_eq!(format_delays(&[]), "");
    }
}
