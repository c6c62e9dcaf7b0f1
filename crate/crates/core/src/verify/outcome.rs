//! Rows, statuses and per-instance results.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    EqualityHolds,
    Strict,
    BoundHolds,
    Violation,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::EqualityHolds => "EQUALITY_HOLDS",
            Status::Strict => "STRICT",
            Status::BoundHolds => "BOUND_HOLDS",
            Status::Violation => "VIOLATION",
            Status::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// Where a compared quantity lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Loc {
    Whole,
    /// Original vertex `v` of `G`.
    V(usize),
    /// Edge `j` of `G` (lexicographic order).
    E(usize),
    VPair(usize, usize),
    EPair(usize, usize),
    /// Vertex `u` of `H1`, in copy `copy` for coronas.
    H1(Option<usize>, usize),
    H2(Option<usize>, usize),
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Loc::Whole => f.write_str("graph"),
            Loc::V(v) => write!(f, "v{v}"),
            Loc::E(j) => write!(f, "e{j}"),
            Loc::VPair(a, b) => write!(f, "(v{a},v{b})"),
            Loc::EPair(a, b) => write!(f, "(e{a},e{b})"),
            Loc::H1(None, u) => write!(f, "h1.u{u}"),
            Loc::H1(Some(i), u) => write!(f, "h1[{i}].u{u}"),
            Loc::H2(None, u) => write!(f, "h2.u{u}"),
            Loc::H2(Some(j), u) => write!(f, "h2[{j}].u{u}"),
        }
    }
}

/// One comparison: a BFS-measured value against the claimed bound(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub quantity: &'static str,
    pub loc: Loc,
    pub actual: i64,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
}

impl Row {
    pub fn eq(quantity: &'static str, loc: Loc, actual: i64, expected: i64) -> Self {
        Row { quantity, loc, actual, lower: Some(expected), upper: Some(expected) }
    }

    pub fn range(quantity: &'static str, loc: Loc, actual: i64, lower: i64, upper: i64) -> Self {
        Row { quantity, loc, actual, lower: Some(lower), upper: Some(upper) }
    }

    pub fn at_least(quantity: &'static str, loc: Loc, actual: i64, lower: i64) -> Self {
        Row { quantity, loc, actual, lower: Some(lower), upper: None }
    }

    pub fn at_most(quantity: &'static str, loc: Loc, actual: i64, upper: i64) -> Self {
        Row { quantity, loc, actual, lower: None, upper: Some(upper) }
    }

    pub fn holds(&self) -> bool {
        self.lower.is_none_or(|l| self.actual >= l) && self.upper.is_none_or(|u| self.actual <= u)
    }

    pub fn is_exact(&self) -> bool {
        self.lower.is_some() && self.lower == self.upper
    }

    pub fn witness(&self) -> Witness {
        Witness {
            quantity: self.quantity.to_string(),
            location: self.loc.to_string(),
            actual: self.actual,
            lower: self.lower,
            upper: self.upper,
        }
    }
}

/// The first disagreeing row of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub quantity: String,
    pub location: String,
    pub actual: i64,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
}

/// Outcome of one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    /// graph6 strings of the inputs, in argument order.
    pub instance: Vec<String>,
    pub status: Status,
    /// Sum of the BFS-measured quantities over all rows.
    pub lhs: Option<i64>,
    /// Sums of the claimed bounds over all rows, when every row has one.
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
}
