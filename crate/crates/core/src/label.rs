//! Hierarchical vertex labels.
//!
//! Constructed graphs name their vertices by the path of copies they came
//! from, e.g. `B(a,b,c)/D12/A1(0,2)`: the vertex `(0,2)` of grid copy `A1`
//! inside the `D12` copy of the block for the triple `(a,b,c)`. A label is a
//! `/`-separated list of segments; each segment is a name optionally followed
//! by a parenthesised, comma-separated argument list. Plain labels such as
//! `0` or `a` are single segments without arguments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub name: String,
    pub args: Option<Vec<String>>,
}

impl Segment {
    pub fn plain(name: impl Into<String>) -> Self {
        Segment { name: name.into(), args: None }
    }

    pub fn with_args<I, S>(name: impl Into<String>, args: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Segment {
            name: name.into(),
            args: Some(args.into_iter().map(|a| a.to_string()).collect()),
        }
    }
}

/// A parsed vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub segments: Vec<Segment>,
}

/// Characters allowed in segment names and arguments.
pub fn is_atom_char(c: char) -> bool {
    !matches!(c, '/' | '(' | ')' | ',') && !c.is_whitespace() && c != '"'
}

pub fn is_atom(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_atom_char)
}

impl Label {
    pub fn new(segments: Vec<Segment>) -> Self {
        Label { segments }
    }

    /// Namespaces `label` under `prefix`.
    ///
    /// When the first segment of `label` is a bare argument tuple such as
    /// `(0,2)`, the prefix becomes that segment's name (`A1` + `(0,2)` gives
    /// `A1(0,2)`); otherwise the prefix is pushed as a new leading segment
    /// (`D12` + `A1(0,2)` gives `D12/A1(0,2)`).
    pub fn prefixed(prefix: &str, label: &str) -> String {
        if label.starts_with('(') {
            format!("{prefix}{label}")
        } else {
            format!("{prefix}/{label}")
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedLabel(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let mut segments = Vec::new();
        for part in s.split('/') {
            let (name, args) = match part.find('(') {
                None => (part, None),
                Some(open) => {
                    let rest = &part[open + 1..];
                    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                    let args: Vec<String> = inner.split(',').map(str::to_string).collect();
                    if args.iter().any(|a| !is_atom(a)) {
                        return Err(bad());
                    }
                    (&part[..open], Some(args))
                }
            };
            if !(name.is_empty() || is_atom(name)) || (name.is_empty() && args.is_none()) {
                return Err(bad());
            }
            segments.push(Segment { name: name.to_string(), args });
        }
        Ok(Label { segments })
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if let Some(args) = &self.args {
            write!(f, "({})", args.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{seg}")?;
        }
        Ok(())
    }
}
