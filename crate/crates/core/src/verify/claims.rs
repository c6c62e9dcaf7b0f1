//! The claim registry: one entry per numbered statement, each a checkable
//! object with an applicability predicate and a BFS-backed check.

use std::sync::OnceLock;

use serde::Serialize;

use super::context::Context;
use super::formulas::{self as f, Base, HSizes};
use super::outcome::{Loc, Row};
use crate::compositions::{JoinKind, JoinTag};
use crate::constructions::DerivedKind;
use crate::coronas::{corona_d2_table_with, corona_ecc_table_with, CoronaTag};
use crate::predicates::is_connected;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatementKind {
    Equality,
    LowerBound,
    UpperBound,
    Sandwich,
    CaseTable,
}

/// Class on which an inequality is claimed to be tight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityClass {
    /// Girth at least 5, or acyclic.
    C3C4Free,
    TriangleFree,
}

/// Conditions an instance must meet for a claim to apply. The base graph is
/// always required to be connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Applicability {
    pub min_n: usize,
    /// `Some(true)`: star only; `Some(false)`: non-star only.
    pub star: Option<bool>,
    pub bipartite: bool,
    pub c3c4_free: bool,
    pub pendant: bool,
    /// Every `H` input must be connected (joins) rather than merely nonempty.
    pub h_connected: bool,
}

impl Applicability {
    const fn base(min_n: usize) -> Self {
        Applicability { min_n, star: None, bipartite: false, c3c4_free: false, pendant: false, h_connected: false }
    }

    const fn star(mut self, star: bool) -> Self {
        self.star = Some(star);
        self
    }

    const fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    const fn c3c4(mut self) -> Self {
        self.c3c4_free = true;
        self
    }

    const fn pendant(mut self) -> Self {
        self.pendant = true;
        self
    }

    const fn h_connected(mut self) -> Self {
        self.h_connected = true;
        self
    }

    /// `Err(reason)` when the instance falls outside the claim's hypotheses.
    pub fn evaluate(&self, ctx: &Context) -> Result<(), String> {
        let facts = ctx.facts();
        if !facts.connected {
            return Err("g is disconnected".into());
        }
        if ctx.g().n() < self.min_n {
            return Err(format!("g has n < {}", self.min_n));
        }
        for h in &ctx.graphs[1..] {
            if h.n() == 0 {
                return Err("an H input is empty".into());
            }
            if self.h_connected && !is_connected(h) {
                return Err("an H input is disconnected".into());
            }
        }
        match self.star {
            Some(true) if !facts.star => return Err("g is not a star".into()),
            Some(false) if facts.star => return Err("g is a star".into()),
            _ => {}
        }
        if self.bipartite && !facts.bipartite {
            return Err("g is not bipartite".into());
        }
        if self.c3c4_free && !facts.c3c4_free {
            return Err("g contains C3 or C4".into());
        }
        if self.pendant && !facts.pendant {
            return Err("some eccentricity of g is not attained at a pendant vertex".into());
        }
        Ok(())
    }
}

pub type CheckFn = fn(&Context) -> Vec<Row>;

/// A registered statement.
#[derive(Clone)]
pub struct Claim {
    pub id: &'static str,
    pub kind: StatementKind,
    pub arity: usize,
    pub summary: &'static str,
    /// Reading notes: typo reconciliations and interpretation choices.
    pub note: Option<&'static str>,
    pub applicability: Applicability,
    /// For "with equality iff" statements: the class on which every row must
    /// be tight, and off which at least one row must be strict.
    pub equality_iff: Option<EqualityClass>,
    pub check: CheckFn,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

/// Serializable description of a claim for listings and reports.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub kind: StatementKind,
    pub arity: usize,
    pub summary: &'static str,
    pub note: Option<&'static str>,
    pub applicability: Applicability,
    pub equality_iff: Option<EqualityClass>,
}

impl Claim {
    pub fn info(&self) -> ClaimInfo {
        ClaimInfo {
            id: self.id,
            kind: self.kind,
            arity: self.arity,
            summary: self.summary,
            note: self.note,
            applicability: self.applicability,
            equality_iff: self.equality_iff,
        }
    }
}

pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn find(id: &str) -> Option<&'static Claim> {
    registry().iter().find(|c| c.id == id)
}

// Helpers shared by the checks.

fn base_invariants(ctx: &Context) -> Base {
    let g = ctx.base();
    Base { g: g.report, l: ctx.line().report, full: (0..g.graph.n()).filter(|&v| g.ecc[v] == 1).count() as i64 }
}

fn h_sizes(ctx: &Context) -> HSizes {
    let size = |i: usize| ctx.graphs.get(i).map_or((0, 0), |h| (h.n() as i64, h.m() as i64));
    let ((n1, m1), (n2, m2)) = (size(1), size(2));
    HSizes { n1, m1, n2, m2 }
}

fn whole_eq(quantity: &'static str, actual: i64, expected: i64) -> Vec<Row> {
    vec![Row::eq(quantity, Loc::Whole, actual, expected)]
}

fn whole_range(quantity: &'static str, actual: i64, (lo, hi): (i64, i64)) -> Vec<Row> {
    vec![Row::range(quantity, Loc::Whole, actual, lo, hi)]
}

fn lxi_of(ctx: &Context, kind: DerivedKind) -> i64 {
    ctx.derived(kind).1.report.lxi_c
}

type Sandwich = Option<(&'static str, fn(i64) -> (i64, i64))>;

/// Eccentricity rows for originals and edge vertices of `X(G)`.
fn derived_ecc_rows(
    ctx: &Context,
    kind: DerivedKind,
    originals: Sandwich,
    edges: Sandwich,
) -> Vec<Row> {
    let n = ctx.g().n();
    let x = &ctx.derived(kind).1;
    let mut rows = Vec::new();
    if let Some((q, bounds)) = originals {
        let g = ctx.base();
        for v in 0..n {
            let (lo, hi) = bounds(g.ecc[v]);
            rows.push(Row::range(q, Loc::V(v), x.ecc[v], lo, hi));
        }
    }
    if let Some((q, bounds)) = edges {
        let l = ctx.line();
        for j in 0..ctx.g().m() {
            let (lo, hi) = bounds(l.ecc[j]);
            rows.push(Row::range(q, Loc::E(j), x.ecc[n + j], lo, hi));
        }
    }
    rows
}

fn star_center(ctx: &Context) -> usize {
    let g = ctx.g();
    (0..g.n()).max_by_key(|&v| g.degree(v)).expect("nonempty")
}

// Section 2 checks.

fn lem_2_1_i(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::S, Some(("e(v|S)", |e| (2 * e, 2 * e + 1))), None)
}

fn lem_2_1_ii(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::S, None, Some(("e(e|S)", |e| (2 * e, 2 * e + 1))))
}

fn obs_bipartite_s(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::S, Some(("e(v|S)", |e| (2 * e, 2 * e))), None)
}

fn lem_2_2(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.g().n(), ctx.g().m());
    let g = ctx.base();
    let l = ctx.line();
    let s = &ctx.derived(DerivedKind::S).1;
    let q = &ctx.derived(DerivedKind::Q).1;
    let r = &ctx.derived(DerivedKind::R).1;
    let t = &ctx.derived(DerivedKind::T).1;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (loc, dg) = (Loc::VPair(a, b), g.d(a, b));
            rows.push(Row::eq("d_S(v,v')", loc, s.d(a, b), 2 * dg));
            rows.push(Row::eq("d_Q(v,v')", loc, q.d(a, b), dg + 1));
            rows.push(Row::eq("d_R(v,v')", loc, r.d(a, b), dg));
            rows.push(Row::eq("d_T(v,v')", loc, t.d(a, b), dg));
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            let (loc, dl) = (Loc::EPair(a, b), l.d(a, b));
            let (x, y) = (n + a, n + b);
            rows.push(Row::eq("d_S(e,e')", loc, s.d(x, y), 2 * dl));
            rows.push(Row::eq("d_Q(e,e')", loc, q.d(x, y), dl));
            rows.push(Row::eq("d_R(e,e')", loc, r.d(x, y), dl + 1));
            rows.push(Row::eq("d_T(e,e')", loc, t.d(x, y), dl));
        }
    }
    rows
}

fn lem_2_3(ctx: &Context) -> Vec<Row> {
    let r = ctx.base().report;
    vec![Row::at_most("sum d2(v|G)", Loc::Whole, r.sum_d2, r.m1 - 2 * r.m)]
}

fn lem_2_4(ctx: &Context) -> Vec<Row> {
    let n = ctx.g().n();
    let g = ctx.base();
    let l = ctx.line();
    let s = &ctx.derived(DerivedKind::S).1;
    let mut rows: Vec<Row> = (0..n).map(|v| Row::eq("d2(v|S)", Loc::V(v), s.d2[v], g.d1(v))).collect();
    rows.extend((0..ctx.g().m()).map(|j| Row::eq("d2(e|S)", Loc::E(j), s.d2[n + j], l.d1(j))));
    rows
}

fn thm_2_5(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(S(G))", lxi_of(ctx, DerivedKind::S), f::s_bounds(&base_invariants(ctx)))
}

fn cor_2_6(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(S(G))", lxi_of(ctx, DerivedKind::S), f::s_bounds_bipartite(&base_invariants(ctx)))
}

fn cor_2_7(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(S(G))", lxi_of(ctx, DerivedKind::S), f::s_bounds_bipartite(&base_invariants(ctx)).1)
}

fn lem_2_8_i(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::Q, Some(("e(v|Q)", |e| (e + 1, e + 1))), None)
}

fn lem_2_8_ii(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::Q, None, Some(("e(e|Q)", |e| (e, e + 1))))
}

/// `d2` rows on originals: `(actual in X, claimed lower)`.
fn d2_vertex_lower(ctx: &Context, kind: DerivedKind, q: &'static str, rhs: fn(i64, i64) -> i64) -> Vec<Row> {
    let g = ctx.base();
    let x = &ctx.derived(kind).1;
    (0..ctx.g().n()).map(|v| Row::at_least(q, Loc::V(v), x.d2[v], rhs(g.d1(v), g.d2[v]))).collect()
}

/// `d2` rows on edge vertices: `(actual in X, claimed upper)`.
fn d2_edge_upper(ctx: &Context, kind: DerivedKind, q: &'static str, rhs: fn(i64, i64) -> i64) -> Vec<Row> {
    let n = ctx.g().n();
    let l = ctx.line();
    let x = &ctx.derived(kind).1;
    (0..ctx.g().m()).map(|j| Row::at_most(q, Loc::E(j), x.d2[n + j], rhs(l.d1(j), l.d2[j]))).collect()
}

fn lem_2_9_i(ctx: &Context) -> Vec<Row> {
    d2_vertex_lower(ctx, DerivedKind::Q, "d2(v|Q)", |d1, d2| d1 + d2)
}

fn lem_2_9_ii(ctx: &Context) -> Vec<Row> {
    d2_edge_upper(ctx, DerivedKind::Q, "d2(e|Q)", |d1, d2| d1 + d2)
}

fn thm_2_10(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(Q(G))", lxi_of(ctx, DerivedKind::Q), f::q_bounds(&base_invariants(ctx)))
}

fn cor_2_11(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(Q(G))", lxi_of(ctx, DerivedKind::Q), f::q_bounds(&base_invariants(ctx)).1)
}

fn lem_2_12_i(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::R, Some(("e(v|R)", |e| (e, e + 1))), None)
}

fn lem_2_12_ii(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::R, None, Some(("e(e|R)", |e| (e + 1, e + 1))))
}

fn lem_2_13_i(ctx: &Context) -> Vec<Row> {
    d2_vertex_lower(ctx, DerivedKind::R, "d2(v|R)", |_, d2| 2 * d2)
}

fn lem_2_13_ii(ctx: &Context) -> Vec<Row> {
    d2_edge_upper(ctx, DerivedKind::R, "d2(e|R)", |d1, _| 2 * d1)
}

fn thm_2_14(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(R(G))", lxi_of(ctx, DerivedKind::R), f::r_bounds(&base_invariants(ctx)))
}

fn cor_2_15(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(R(G))", lxi_of(ctx, DerivedKind::R), f::r_bounds(&base_invariants(ctx)).0)
}

fn lem_2_16_i(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::T, Some(("e(v|T)", |e| (e, e + 1))), None)
}

fn lem_2_16_ii(ctx: &Context) -> Vec<Row> {
    derived_ecc_rows(ctx, DerivedKind::T, None, Some(("e(e|T)", |e| (e, e + 1))))
}

fn lem_2_17_i(ctx: &Context) -> Vec<Row> {
    d2_vertex_lower(ctx, DerivedKind::T, "d2(v|T)", |_, d2| 2 * d2)
}

fn lem_2_17_ii(ctx: &Context) -> Vec<Row> {
    d2_edge_upper(ctx, DerivedKind::T, "d2(e|T)", |d1, d2| d1 + d2)
}

fn thm_2_18(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(T(G))", lxi_of(ctx, DerivedKind::T), f::t_bounds(&base_invariants(ctx)))
}

fn cor_2_19(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(T(G))", lxi_of(ctx, DerivedKind::T), f::t_bounds_bipartite(&base_invariants(ctx)))
}

fn cor_2_20(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(T(G))", lxi_of(ctx, DerivedKind::T), f::t_bounds_bipartite(&base_invariants(ctx)).1)
}

fn cnt_derived(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.n(), ctx.m());
    let el = ctx.base().report.m1 / 2 - m;
    let mut rows = vec![Row::eq("|E(L(G))|", Loc::Whole, ctx.line().graph.m() as i64, el)];
    for (kind, q, edges) in [
        (DerivedKind::S, "|E(S(G))|", 2 * m),
        (DerivedKind::Q, "|E(Q(G))|", 2 * m + el),
        (DerivedKind::R, "|E(R(G))|", 3 * m),
        (DerivedKind::T, "|E(T(G))|", 3 * m + el),
    ] {
        let x = &ctx.derived(kind).0;
        rows.push(Row::eq("|V(X(G))|", Loc::Whole, x.graph.n() as i64, n + m));
        rows.push(Row::eq(q, Loc::Whole, x.graph.m() as i64, edges));
    }
    rows
}

fn lem_4_1(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.g().n(), ctx.g().m());
    let g = ctx.base();
    let l = ctx.line();
    let mut rows = Vec::new();
    for kind in DerivedKind::SUBDIVISION_KINDS {
        let x = &ctx.derived(kind).1;
        let (qv, qe, vmul, eadd) = match kind {
            DerivedKind::S => ("d1(v|S)", "d1(e|S)", 1, false),
            DerivedKind::Q => ("d1(v|Q)", "d1(e|Q)", 1, true),
            DerivedKind::R => ("d1(v|R)", "d1(e|R)", 2, false),
            _ => ("d1(v|T)", "d1(e|T)", 2, true),
        };
        rows.extend((0..n).map(|v| Row::eq(qv, Loc::V(v), x.d1(v), vmul * g.d1(v))));
        rows.extend((0..m).map(|j| {
            let claimed = if eadd { 2 + l.d1(j) } else { 2 };
            Row::eq(qe, Loc::E(j), x.d1(n + j), claimed)
        }));
    }
    rows
}

// Section 3 checks.

fn join_loc(tag: JoinTag) -> Loc {
    match tag {
        JoinTag::GOriginal { v } => Loc::V(v),
        JoinTag::GEdge { e, .. } => Loc::E(e),
        JoinTag::H1Vertex { u } => Loc::H1(None, u),
        JoinTag::H2Vertex { u } => Loc::H2(None, u),
    }
}

/// Rows comparing the join's BFS eccentricities against `claimed(tag) = (lo, hi)`.
fn join_ecc_rows(ctx: &Context, kind: JoinKind, claimed: &dyn Fn(JoinTag) -> (i64, i64)) -> Vec<Row> {
    let (j, built) = ctx.join(kind);
    j.provenance
        .iter()
        .enumerate()
        .map(|(x, &tag)| {
            let (lo, hi) = claimed(tag);
            Row::range("e(x|join)", join_loc(tag), built.ecc[x], lo, hi)
        })
        .collect()
}

fn join_d2_rows(ctx: &Context, kind: JoinKind, claimed: &dyn Fn(JoinTag) -> i64) -> Vec<Row> {
    let (j, built) = ctx.join(kind);
    j.provenance
        .iter()
        .enumerate()
        .map(|(x, &tag)| Row::eq("d2(x|join)", join_loc(tag), built.d2[x], claimed(tag)))
        .collect()
}

fn lem_3_2_i(ctx: &Context) -> Vec<Row> {
    let center = star_center(ctx);
    join_ecc_rows(ctx, JoinKind::Vertex, &|tag| match tag {
        JoinTag::GOriginal { v } if v == center => (2, 2),
        JoinTag::GOriginal { .. } | JoinTag::GEdge { .. } => (3, 3),
        _ => (2, 2),
    })
}

fn lem_3_2_ii(ctx: &Context) -> Vec<Row> {
    join_ecc_rows(ctx, JoinKind::Vertex, &|tag| match tag {
        JoinTag::GOriginal { .. } => (3, 3),
        JoinTag::GEdge { .. } => (3, 4),
        _ => (2, 2),
    })
}

fn lem_3_2_iii(ctx: &Context) -> Vec<Row> {
    let (n, m, n1) = (ctx.n(), ctx.m(), ctx.h1().n() as i64);
    let l = ctx.line();
    let h = ctx.h1();
    join_d2_rows(ctx, JoinKind::Vertex, &|tag| match tag {
        JoinTag::GOriginal { .. } => n - 1,
        JoinTag::GEdge { e, .. } => l.d1(e) + n1,
        JoinTag::H1Vertex { u } | JoinTag::H2Vertex { u } => n1 - 1 - h.degree(u) as i64 + m,
    })
}

fn join_lxi(ctx: &Context, kind: JoinKind) -> i64 {
    ctx.join(kind).1.report.lxi_c
}

fn thm_3_3(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(G vjoin H)", join_lxi(ctx, JoinKind::Vertex), f::vertex_join_star(&base_invariants(ctx), &h_sizes(ctx)))
}

fn thm_3_4(ctx: &Context) -> Vec<Row> {
    whole_range("LxiC(G vjoin H)", join_lxi(ctx, JoinKind::Vertex), f::vertex_join_bounds(&base_invariants(ctx), &h_sizes(ctx)))
}

fn cor_3_5(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(G vjoin H)", join_lxi(ctx, JoinKind::Vertex), f::vertex_join_bounds(&base_invariants(ctx), &h_sizes(ctx)).0)
}

fn lem_3_7_i(ctx: &Context) -> Vec<Row> {
    let center = star_center(ctx);
    join_ecc_rows(ctx, JoinKind::Edge, &|tag| match tag {
        JoinTag::GOriginal { v } if v == center => (2, 2),
        JoinTag::GOriginal { .. } => (4, 4),
        JoinTag::GEdge { .. } => (3, 3),
        _ => (2, 2),
    })
}

fn lem_3_7_ii(ctx: &Context) -> Vec<Row> {
    let g = ctx.base();
    join_ecc_rows(ctx, JoinKind::Edge, &|tag| match tag {
        JoinTag::GOriginal { v } if g.ecc[v] == 1 => (3, 3),
        JoinTag::GOriginal { .. } => (4, 4),
        JoinTag::GEdge { .. } => (3, 3),
        _ => (2, 2),
    })
}

fn lem_3_7_iii(ctx: &Context) -> Vec<Row> {
    let (n, m, n1) = (ctx.n(), ctx.m(), ctx.h1().n() as i64);
    let g = ctx.base();
    let h = ctx.h1();
    join_d2_rows(ctx, JoinKind::Edge, &|tag| match tag {
        JoinTag::GOriginal { v } => g.d1(v) + n1,
        JoinTag::GEdge { .. } => m - 1,
        JoinTag::H1Vertex { u } | JoinTag::H2Vertex { u } => n1 - 1 - h.degree(u) as i64 + n,
    })
}

fn thm_3_8(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(G ejoin H)", join_lxi(ctx, JoinKind::Edge), f::edge_join_star(&base_invariants(ctx), &h_sizes(ctx)))
}

fn thm_3_9(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(G ejoin H)", join_lxi(ctx, JoinKind::Edge), f::edge_join_nonstar(&base_invariants(ctx), &h_sizes(ctx)))
}

fn lem_3_11_i(ctx: &Context) -> Vec<Row> {
    let center = star_center(ctx);
    join_ecc_rows(ctx, JoinKind::VertexEdge, &|tag| match tag {
        JoinTag::GOriginal { v } if v == center => (2, 2),
        _ => (3, 3),
    })
}

fn lem_3_11_ii(ctx: &Context) -> Vec<Row> {
    join_ecc_rows(ctx, JoinKind::VertexEdge, &|_| (3, 3))
}

fn lem_3_11_iii(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.n(), ctx.m());
    let (h1, h2) = (ctx.h1(), ctx.h2());
    let (n1, n2) = (h1.n() as i64, h2.n() as i64);
    join_d2_rows(ctx, JoinKind::VertexEdge, &|tag| match tag {
        JoinTag::GOriginal { .. } => n - 1 + n2,
        JoinTag::GEdge { .. } => m - 1 + n1,
        JoinTag::H1Vertex { u } => n1 - 1 - h1.degree(u) as i64 + m,
        JoinTag::H2Vertex { u } => n2 - 1 - h2.degree(u) as i64 + n,
    })
}

fn thm_3_12(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(vertex-edge join)", join_lxi(ctx, JoinKind::VertexEdge), f::vertex_edge_join_star(&base_invariants(ctx), &h_sizes(ctx)))
}

fn thm_3_13(ctx: &Context) -> Vec<Row> {
    whole_eq("LxiC(vertex-edge join)", join_lxi(ctx, JoinKind::VertexEdge), f::vertex_edge_join_nonstar(&base_invariants(ctx), &h_sizes(ctx)))
}

fn cnt_join(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.n(), ctx.m());
    let (n1, m1) = (ctx.h1().n() as i64, ctx.h1().m() as i64);
    let vj = &ctx.join_graph(JoinKind::Vertex).graph;
    let ej = &ctx.join_graph(JoinKind::Edge).graph;
    vec![
        Row::eq("|V(vertex join)|", Loc::Whole, vj.n() as i64, n + m + n1),
        Row::eq("|E(vertex join)|", Loc::Whole, vj.m() as i64, 2 * m + n * n1 + m1),
        Row::eq("|V(edge join)|", Loc::Whole, ej.n() as i64, n + m + n1),
        Row::eq("|E(edge join)|", Loc::Whole, ej.m() as i64, 2 * m + m * n1 + m1),
    ]
}

fn cnt_vertex_edge_join(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.n(), ctx.m());
    let h = h_sizes(ctx);
    let j = &ctx.join_graph(JoinKind::VertexEdge).graph;
    vec![
        Row::eq("|V(vertex-edge join)|", Loc::Whole, j.n() as i64, n + m + h.n1 + h.n2),
        Row::eq("|E(vertex-edge join)|", Loc::Whole, j.m() as i64, 2 * m + n * h.n1 + m * h.n2 + h.m1 + h.m2),
    ]
}

// Section 4 checks.

fn corona_loc(tag: CoronaTag) -> Loc {
    match tag {
        CoronaTag::GOriginal { v } => Loc::V(v),
        CoronaTag::GEdge { e, .. } => Loc::E(e),
        CoronaTag::H1Copy { i, u } => Loc::H1(Some(i), u),
        CoronaTag::H2Copy { j, u } => Loc::H2(Some(j), u),
    }
}

fn corona_ecc_rows(ctx: &Context, kind: DerivedKind) -> Vec<Row> {
    let (c, built) = ctx.corona(kind);
    let base = &ctx.derived(kind).1;
    let table = corona_ecc_table_with(c, &base.dist).expect("X(G) is connected");
    table
        .into_iter()
        .enumerate()
        .map(|(x, (tag, claimed))| Row::eq("e(x|corona)", corona_loc(tag), built.ecc[x], claimed))
        .collect()
}

fn corona_d2_rows(ctx: &Context, kind: DerivedKind) -> Vec<Row> {
    let (c, built) = ctx.corona(kind);
    let base = &ctx.derived(kind).1;
    corona_d2_table_with(c, &base.dist)
        .into_iter()
        .enumerate()
        .map(|(x, (tag, claimed))| Row::eq("d2(x|corona)", corona_loc(tag), built.d2[x], claimed))
        .collect()
}

fn corona_lxi(ctx: &Context, kind: DerivedKind) -> i64 {
    ctx.corona(kind).1.report.lxi_c
}

fn corona_range(ctx: &Context, kind: DerivedKind, bounds: fn(&Base, &HSizes) -> (i64, i64)) -> Vec<Row> {
    whole_range("LxiC(corona)", corona_lxi(ctx, kind), bounds(&base_invariants(ctx), &h_sizes(ctx)))
}

fn corona_eq(ctx: &Context, kind: DerivedKind, bounds: fn(&Base, &HSizes) -> (i64, i64), upper: bool) -> Vec<Row> {
    let (lo, hi) = bounds(&base_invariants(ctx), &h_sizes(ctx));
    whole_eq("LxiC(corona)", corona_lxi(ctx, kind), if upper { hi } else { lo })
}

fn cnt_corona(ctx: &Context) -> Vec<Row> {
    let (n, m) = (ctx.n(), ctx.m());
    let h = h_sizes(ctx);
    let mut rows = Vec::new();
    for kind in DerivedKind::SUBDIVISION_KINDS {
        let c = &ctx.corona_graph(kind).graph;
        let base_m = ctx.derived(kind).0.graph.m() as i64;
        rows.push(Row::eq("|V(corona)|", Loc::Whole, c.n() as i64, n * (h.n1 + 1) + m * (h.n2 + 1)));
        rows.push(Row::eq(
            "|E(corona)|",
            Loc::Whole,
            c.m() as i64,
            base_m + n * (h.m1 + h.n1) + m * (h.m2 + h.n2),
        ));
    }
    rows
}

const SEC2: Applicability = Applicability::base(2);
const SEC3: Applicability = Applicability::base(3).h_connected();
const SEC4: Applicability = Applicability::base(2);

macro_rules! claim {
    ($id:literal, $kind:ident, $arity:literal, $app:expr, $check:expr, $summary:literal) => {
        Claim {
            id: $id,
            kind: StatementKind::$kind,
            arity: $arity,
            summary: $summary,
            note: None,
            applicability: $app,
            equality_iff: None,
            check: $check,
        }
    };
}

fn with_note(mut c: Claim, note: &'static str) -> Claim {
    c.note = Some(note);
    c
}

fn with_iff(mut c: Claim, class: EqualityClass) -> Claim {
    c.equality_iff = Some(class);
    c
}

fn build_registry() -> Vec<Claim> {
    use EqualityClass::*;
    vec![
        // Section 2.
        claim!("lem-2.1.i", Sandwich, 1, SEC2, lem_2_1_i, "2e(v|G) <= e(v|S(G)) <= 2e(v|G)+1 for v in V(G)"),
        claim!("lem-2.1.ii", Sandwich, 1, SEC2, lem_2_1_ii, "2e(e|L(G)) <= e(e|S(G)) <= 2e(e|L(G))+1 for e in E(G)"),
        claim!("obs-2.1.bipartite", Equality, 1, SEC2.bipartite(), obs_bipartite_s, "e(v|S(G)) = 2e(v|G) for v in V(G) when G is bipartite"),
        with_note(
            claim!("lem-2.2", Equality, 1, SEC2, lem_2_2, "distances between originals and between edge vertices in S, Q, R, T"),
            "checked on distinct pairs only: the +1 forms fail at distance 0",
        ),
        with_iff(claim!("lem-2.3", UpperBound, 1, SEC2, lem_2_3, "sum d2(v|G) <= M1(G) - 2m"), C3C4Free),
        claim!("lem-2.4", Equality, 1, SEC2, lem_2_4, "d2(v|S(G)) = d1(v|G) and d2(e|S(G)) = d1(e|L(G))"),
        claim!("thm-2.5", Sandwich, 1, SEC2, thm_2_5, "2xiC(G)+2xiC(L) <= LxiC(S(G)) <= 2xiC(G)+2m+2xiC(L)+2|E(L)|"),
        claim!("cor-2.6", Sandwich, 1, SEC2.bipartite(), cor_2_6, "bipartite G: LxiC(S(G)) <= 2xiC(G)+2xiC(L)+2|E(L)|"),
        claim!("cor-2.7", Equality, 1, SEC2.bipartite().pendant(), cor_2_7, "bipartite G, pendant eccentricities: LxiC(S(G)) = 2xiC(G)+2xiC(L)+2|E(L)|"),
        claim!("lem-2.8.i", Equality, 1, SEC2, lem_2_8_i, "e(v|Q(G)) = e(v|G)+1 for v in V(G)"),
        claim!("lem-2.8.ii", Sandwich, 1, SEC2, lem_2_8_ii, "e(e|L) <= e(e|Q(G)) <= e(e|L)+1 for e in E(G)"),
        with_iff(claim!("lem-2.9.i", LowerBound, 1, SEC2, lem_2_9_i, "d2(v|Q(G)) >= d1(v|G)+d2(v|G)"), C3C4Free),
        with_iff(claim!("lem-2.9.ii", UpperBound, 1, SEC2, lem_2_9_ii, "d2(e|Q(G)) <= d1(e|L)+d2(e|L)"), TriangleFree),
        claim!("thm-2.10", Sandwich, 1, SEC2.c3c4(), thm_2_10, "bounds on LxiC(Q(G)) for {C3,C4}-free G"),
        claim!("cor-2.11", Equality, 1, SEC2.c3c4().bipartite().pendant(), cor_2_11, "LxiC(Q(G)) equals the upper bound of thm-2.10"),
        claim!("lem-2.12.i", Sandwich, 1, SEC2, lem_2_12_i, "e(v|G) <= e(v|R(G)) <= e(v|G)+1"),
        claim!("lem-2.12.ii", Equality, 1, SEC2, lem_2_12_ii, "e(e|R(G)) = e(e|L)+1"),
        with_iff(claim!("lem-2.13.i", LowerBound, 1, SEC2, lem_2_13_i, "d2(v|R(G)) >= 2d2(v|G)"), C3C4Free),
        with_iff(claim!("lem-2.13.ii", UpperBound, 1, SEC2, lem_2_13_ii, "d2(e|R(G)) <= 2d1(e|L)"), TriangleFree),
        claim!("thm-2.14", Sandwich, 1, SEC2.c3c4(), thm_2_14, "bounds on LxiC(R(G)) for {C3,C4}-free G"),
        claim!("cor-2.15", Equality, 1, SEC2.c3c4().bipartite(), cor_2_15, "LxiC(R(G)) equals the lower bound of thm-2.14"),
        claim!("lem-2.16.i", Sandwich, 1, SEC2, lem_2_16_i, "e(v|G) <= e(v|T(G)) <= e(v|G)+1"),
        claim!("lem-2.16.ii", Sandwich, 1, SEC2, lem_2_16_ii, "e(e|L) <= e(e|T(G)) <= e(e|L)+1"),
        with_iff(claim!("lem-2.17.i", LowerBound, 1, SEC2, lem_2_17_i, "d2(v|T(G)) >= 2d2(v|G)"), C3C4Free),
        with_iff(claim!("lem-2.17.ii", UpperBound, 1, SEC2, lem_2_17_ii, "d2(e|T(G)) <= d1(e|L)+d2(e|L)"), TriangleFree),
        with_note(
            claim!("thm-2.18", Sandwich, 1, SEC2.c3c4(), thm_2_18, "bounds on LxiC(T(G)) for {C3,C4}-free G"),
            "printed upper bound has a doubled `++` before LxiC(L(G)); encoded with a single `+`, matching the proof chain",
        ),
        claim!("cor-2.19", Sandwich, 1, SEC2.c3c4().bipartite(), cor_2_19, "bipartite refinement of thm-2.18"),
        claim!("cor-2.20", Equality, 1, SEC2.c3c4().bipartite().pendant(), cor_2_20, "LxiC(T(G)) equals the upper bound of cor-2.19"),
        claim!("cnt-derived", Equality, 1, SEC2, cnt_derived, "vertex and edge counts of L, S, Q, R, T"),
        claim!("lem-4.1", CaseTable, 1, SEC2, lem_4_1, "degree tables of originals and edge vertices in S, Q, R, T"),
        // Section 3.
        with_note(
            claim!("lem-3.2.i", CaseTable, 2, SEC3.star(true), lem_3_2_i, "star G: eccentricities in the subdivision vertex join"),
            "the `2 or 3` row is read as: center 2, other originals 3",
        ),
        claim!("lem-3.2.ii", CaseTable, 2, SEC3.star(false), lem_3_2_ii, "non-star G: eccentricities in the subdivision vertex join"),
        claim!("lem-3.2.iii", CaseTable, 2, SEC3, lem_3_2_iii, "second degrees in the subdivision vertex join"),
        claim!("thm-3.3", Equality, 2, SEC3.star(true), thm_3_3, "LxiC of the subdivision vertex join, star G"),
        claim!("thm-3.4", Sandwich, 2, SEC3.star(false), thm_3_4, "bounds on LxiC of the subdivision vertex join, non-star G"),
        claim!("cor-3.5", Equality, 2, SEC3.star(false).pendant(), cor_3_5, "non-star G with pendant eccentricities attains the lower bound of thm-3.4"),
        with_note(
            claim!("lem-3.7.i", CaseTable, 2, SEC3.star(true), lem_3_7_i, "star G: eccentricities in the subdivision edge join"),
            "the `2 or 4` row is read as: center 2, other originals 4",
        ),
        claim!("lem-3.7.ii", CaseTable, 2, SEC3.star(false), lem_3_7_ii, "non-star G: eccentricities in the subdivision edge join"),
        claim!("lem-3.7.iii", CaseTable, 2, SEC3, lem_3_7_iii, "second degrees in the subdivision edge join"),
        claim!("thm-3.8", Equality, 2, SEC3.star(true), thm_3_8, "LxiC of the subdivision edge join, star G"),
        claim!("thm-3.9", Equality, 2, SEC3.star(false), thm_3_9, "LxiC of the subdivision edge join, non-star G"),
        claim!("cnt-join", Equality, 2, Applicability::base(2).h_connected(), cnt_join, "vertex and edge counts of the vertex and edge joins"),
        claim!("lem-3.11.i", CaseTable, 3, SEC3.star(true), lem_3_11_i, "star G: eccentricities in the subdivision vertex-edge join"),
        claim!("lem-3.11.ii", CaseTable, 3, SEC3.star(false), lem_3_11_ii, "non-star G: all eccentricities of the vertex-edge join are 3"),
        claim!("lem-3.11.iii", CaseTable, 3, SEC3, lem_3_11_iii, "second degrees in the subdivision vertex-edge join"),
        claim!("thm-3.12", Equality, 3, SEC3.star(true), thm_3_12, "LxiC of the vertex-edge join, star G"),
        claim!("thm-3.13", Equality, 3, SEC3.star(false), thm_3_13, "LxiC of the vertex-edge join, non-star G"),
        claim!("cnt-vejoin", Equality, 3, Applicability::base(2).h_connected(), cnt_vertex_edge_join, "vertex and edge counts of the vertex-edge join"),
        // Section 4.
        claim!("lem-4.3.i", CaseTable, 3, SEC4, |c| corona_ecc_rows(c, DerivedKind::S), "eccentricities in the S double corona"),
        claim!("lem-4.3.ii", CaseTable, 3, SEC4, |c| corona_d2_rows(c, DerivedKind::S), "second degrees in the S double corona"),
        claim!("thm-4.4", Sandwich, 3, SEC4, |c| corona_range(c, DerivedKind::S, f::s_corona_bounds), "bounds on LxiC of the S double corona"),
        claim!("cor-4.5", Sandwich, 3, SEC4.bipartite(), |c| corona_range(c, DerivedKind::S, f::s_corona_bounds_bipartite), "bipartite refinement of thm-4.4"),
        claim!("cor-4.6", Equality, 3, SEC4.bipartite().pendant(), |c| corona_eq(c, DerivedKind::S, f::s_corona_bounds_bipartite, true), "S double corona attains the upper bound of cor-4.5"),
        claim!("lem-4.8.i", CaseTable, 3, SEC4, |c| corona_ecc_rows(c, DerivedKind::Q), "eccentricities in the Q double corona"),
        claim!("lem-4.8.ii", CaseTable, 3, SEC4, |c| corona_d2_rows(c, DerivedKind::Q), "second degrees in the Q double corona"),
        claim!("thm-4.9", Sandwich, 3, SEC4.c3c4(), |c| corona_range(c, DerivedKind::Q, f::q_corona_bounds), "bounds on LxiC of the Q double corona"),
        claim!("cor-4.10", Equality, 3, SEC4.c3c4().bipartite().pendant(), |c| corona_eq(c, DerivedKind::Q, f::q_corona_bounds, true), "Q double corona attains the upper bound of thm-4.9"),
        claim!("lem-4.12.i", CaseTable, 3, SEC4, |c| corona_ecc_rows(c, DerivedKind::R), "eccentricities in the R double corona"),
        claim!("lem-4.12.ii", CaseTable, 3, SEC4, |c| corona_d2_rows(c, DerivedKind::R), "second degrees in the R double corona"),
        claim!("thm-4.13", Sandwich, 3, SEC4.c3c4(), |c| corona_range(c, DerivedKind::R, f::r_corona_bounds), "bounds on LxiC of the R double corona"),
        claim!("cor-4.14", Equality, 3, SEC4.c3c4().bipartite(), |c| corona_eq(c, DerivedKind::R, f::r_corona_bounds, false), "R double corona attains the lower bound of thm-4.13"),
        claim!("lem-4.16.i", CaseTable, 3, SEC4, |c| corona_ecc_rows(c, DerivedKind::T), "eccentricities in the T double corona"),
        claim!("lem-4.16.ii", CaseTable, 3, SEC4, |c| corona_d2_rows(c, DerivedKind::T), "second degrees in the T double corona"),
        claim!("thm-4.17", Sandwich, 3, SEC4.c3c4(), |c| corona_range(c, DerivedKind::T, f::t_corona_bounds), "bounds on LxiC of the T double corona"),
        claim!("cor-4.18", Sandwich, 3, SEC4.c3c4().bipartite(), |c| corona_range(c, DerivedKind::T, f::t_corona_bounds_bipartite), "bipartite refinement of thm-4.17"),
        claim!("cor-4.19", Equality, 3, SEC4.c3c4().bipartite().pendant(), |c| corona_eq(c, DerivedKind::T, f::t_corona_bounds_bipartite, true), "T double corona attains the upper bound of cor-4.18"),
        claim!("cnt-corona", Equality, 3, SEC4, cnt_corona, "vertex and edge counts of the four double coronas"),
    ]
}
