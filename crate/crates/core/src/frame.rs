//! Frames of discernment and focal sets.
//!
//! A [`Frame`] is an ordered list of at most 64 singleton labels. Singleton `i`
//! owns bit `i` of a [`FocalSet`], so intersection, union and cardinality are
//! single machine-word operations.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_SINGLETONS: usize = 64;

const RESERVED: [&str; 4] = ["THETA", "Θ", "{}", "∅"];

/// Ordered set of mutually exclusive singleton hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Vec<String>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_SINGLETONS {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole frame, Θ.
    pub fn full(&self) -> FocalSet {
        FocalSet::full(self.len())
    }

    pub fn singleton(&self, index: usize) -> FocalSet {
        assert!(index < self.len(), "singleton index out of range");
        FocalSet(1 << index)
    }

    pub fn contains(&self, set: FocalSet) -> bool {
        set.0 & !self.full().0 == 0
    }

    /// Every subset of the frame in increasing bitmask order. Only sensible
    /// for small frames.
    pub fn subsets(&self) -> impl Iterator<Item = FocalSet> {
        assert!(self.len() < 32, "power set too large to enumerate");
        (0..(1u64 << self.len())).map(FocalSet)
    }

    /// Parses `A|C`, `A∪C`, `AuC`, `{}`/`∅` and `THETA`/`Θ`.
    pub fn parse(&self, expr: &str) -> Result<FocalSet> {
        let trimmed = expr.trim();
        let syntax = |message: &str| Error::Syntax {
            expr: expr.to_string(),
            message: message.to_string(),
        };
        if trimmed.is_empty() {
            return Err(syntax("empty expression"));
        }
        if trimmed == "{}" || trimmed == "∅" {
            return Ok(FocalSet::EMPTY);
        }
        let mut bits = FocalSet::EMPTY;
        for token in trimmed.split(['|', '∪']) {
            let token = token.trim();
            if token.is_empty() {
                return Err(syntax("empty operand"));
            }
            bits = bits | self.parse_operand(token)?;
        }
        Ok(bits)
    }

    fn parse_operand(&self, token: &str) -> Result<FocalSet> {
        if token == "THETA" || token == "Θ" {
            return Ok(self.full());
        }
        if let Some(i) = self.index_of(token) {
            return Ok(self.singleton(i));
        }
        // ASCII union written as `AuC`.
        if token.contains('u') {
            let parts: Vec<&str> = token.split('u').collect();
            if parts.iter().all(|p| !p.is_empty()) {
                let mut bits = FocalSet::EMPTY;
                let mut all_known = true;
                for part in &parts {
                    match self.index_of(part) {
                        Some(i) => bits = bits | self.singleton(i),
                        None if *part == "THETA" => bits = bits | self.full(),
                        None => {
                            all_known = false;
                            break;
                        }
                    }
                }
                if all_known {
                    return Ok(bits);
                }
            }
        }
        Err(Error::UnknownLabel(token.to_string()))
    }

    /// Canonical ASCII form: `{}`, `THETA`, or singleton labels joined by `|`
    /// in frame order.
    pub fn format(&self, set: FocalSet) -> String {
        if set.is_empty() {
            "{}".to_string()
        } else if set == self.full() {
            "THETA".to_string()
        } else {
            set.indices()
                .map(|i| self.labels[i].as_str())
                .collect::<Vec<_>>()
                .join("|")
        }
    }
}

fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !RESERVED.contains(&label)
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '|' | '∪' | ',' | '#' | ':' | '"'))
}

/// A subset of a frame encoded as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FocalSet(pub u64);

impl FocalSet {
    pub const EMPTY: FocalSet = FocalSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            FocalSet(u64::MAX)
        } else {
            FocalSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn intersects(self, other: FocalSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: FocalSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn contains_singleton(self, index: usize) -> bool {
        index < 64 && self.0 & (1 << index) != 0
    }

    /// Indices of the singletons in the set, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl std::ops::BitAnd for FocalSet {
    type Output = FocalSet;
    fn bitand(self, rhs: FocalSet) -> FocalSet {
        FocalSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for FocalSet {
    type Output = FocalSet;
    fn bitor(self, rhs: FocalSet) -> FocalSet {
        FocalSet(self.0 | rhs.0)
    }
}

impl fmt::Display for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
