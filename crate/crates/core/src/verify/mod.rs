//! Claim auditing: a registry of closed-form statements, a per-instance
//! evaluator, seeded sweeps and a counterexample search.
//!
//! The measured side of every comparison comes from BFS on an explicitly
//! constructed graph. Closed forms only ever supply the bounds.

mod claims;
mod context;
mod counterexample;
mod formulas;
mod outcome;
mod sweep;

pub use claims::{find, registry, Applicability, Claim, ClaimInfo, EqualityClass, StatementKind};
pub use context::{Built, Context, Facts};
pub use counterexample::{find_counterexample, find_counterexample_in, Counterexample, Restriction, PROPERTIES};
pub use formulas::{Base, Bounds, HSizes};
pub use outcome::{ClaimResult, Loc, Row, Status, Witness};
pub use sweep::{default_h_family, sweep, ClaimTally, Family, SweepConfig, SweepReport};

use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::Graph;

/// Evaluates one claim on one instance.
pub fn check_claim(id: &str, instance: &[Graph]) -> Result<ClaimResult> {
    let claim = find(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    if instance.len() != claim.arity {
        return Err(Error::ArityMismatch { id: id.to_string(), expected: claim.arity, got: instance.len() });
    }
    let ctx = Context::new(instance);
    Ok(evaluate(claim, &ctx, describe(instance)))
}

pub(crate) fn describe(instance: &[Graph]) -> Vec<String> {
    instance.iter().map(|g| write_graph6(g).unwrap_or_else(|_| format!("<n={}>", g.n()))).collect()
}

/// Status and evidence for `claim` on the instance held by `ctx`.
pub fn evaluate(claim: &Claim, ctx: &Context, instance: Vec<String>) -> ClaimResult {
    let mut result = ClaimResult {
        claim_id: claim.id.to_string(),
        instance,
        status: Status::NotApplicable,
        lhs: None,
        lower: None,
        upper: None,
        witness: None,
        reason: None,
    };
    if let Err(reason) = claim.applicability.evaluate(ctx) {
        result.reason = Some(reason);
        return result;
    }
    let rows = (claim.check)(ctx);
    result.lhs = Some(rows.iter().map(|r| r.actual).sum());
    result.lower = rows.iter().map(|r| r.lower).sum();
    result.upper = rows.iter().map(|r| r.upper).sum();

    if let Some(bad) = rows.iter().find(|r| !r.holds()) {
        result.status = Status::Violation;
        result.witness = Some(bad.witness());
        return result;
    }
    result.status = match claim.equality_iff {
        Some(class) => {
            let in_class = match class {
                EqualityClass::C3C4Free => ctx.facts().c3c4_free,
                EqualityClass::TriangleFree => ctx.facts().triangle_free,
            };
            let slack = rows.iter().find(|r| !is_tight(r));
            match (in_class, slack) {
                (true, None) => Status::EqualityHolds,
                (false, Some(_)) => Status::Strict,
                (true, Some(r)) => {
                    result.witness = Some(r.witness());
                    result.reason = Some("strict inequality inside the equality class".into());
                    Status::Violation
                }
                (false, None) => {
                    result.reason = Some("equality outside the equality class".into());
                    Status::Violation
                }
            }
        }
        None => match claim.kind {
            StatementKind::Equality | StatementKind::CaseTable if rows.iter().all(Row::is_exact) => {
                Status::EqualityHolds
            }
            _ => Status::BoundHolds,
        },
    };
    result
}

/// Whether the row meets one of its bounds with equality.
fn is_tight(r: &Row) -> bool {
    r.lower == Some(r.actual) || r.upper == Some(r.actual)
}
