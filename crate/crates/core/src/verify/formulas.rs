//! Closed forms in terms of invariants of the inputs.
//!
//! Every function here reads only `G`, `L(G)` and the sizes of `H1`/`H2`;
//! nothing is computed on the constructed graph.

use crate::invariants::IndexReport;

/// Invariants of the base graph and its line graph.
#[derive(Debug, Clone, Copy)]
pub struct Base {
    pub g: IndexReport,
    pub l: IndexReport,
    /// `|V_e^1(G)|`, the number of full vertices.
    pub full: i64,
}

impl Base {
    #[inline]
    pub fn n(&self) -> i64 {
        self.g.n
    }

    #[inline]
    pub fn m(&self) -> i64 {
        self.g.m
    }

    /// `|E(L(G))|`.
    #[inline]
    pub fn el(&self) -> i64 {
        self.l.m
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HSizes {
    pub n1: i64,
    pub m1: i64,
    pub n2: i64,
    pub m2: i64,
}

impl HSizes {
    /// `n1^2 - n1 - 2 m1`.
    fn k1(&self) -> i64 {
        self.n1 * self.n1 - self.n1 - 2 * self.m1
    }

    /// `2 n1 + n2^2 + n2 - 2 m2`, the coefficient of `theta(L(G))`.
    fn theta_l(&self) -> i64 {
        2 * self.n1 + self.n2 * self.n2 + self.n2 - 2 * self.m2
    }
}

pub type Bounds = (i64, i64);

// Derived graphs.

pub fn s_bounds(b: &Base) -> Bounds {
    let lo = 2 * b.g.xi_c + 2 * b.l.xi_c;
    (lo, lo + 2 * b.m() + 2 * b.el())
}

pub fn s_bounds_bipartite(b: &Base) -> Bounds {
    let lo = 2 * b.g.xi_c + 2 * b.l.xi_c;
    (lo, lo + 2 * b.el())
}

pub fn q_bounds(b: &Base) -> Bounds {
    let lo = b.g.xi_c + b.g.lxi_c + b.g.m1 + b.l.xi_c + b.l.lxi_c;
    (lo, lo + b.l.m1)
}

pub fn r_bounds(b: &Base) -> Bounds {
    let lo = 2 * b.g.lxi_c + 2 * b.l.xi_c + 4 * b.el();
    let hi = 2 * b.g.lxi_c + 2 * b.g.m1 - 4 * b.m() + 2 * b.l.xi_c + 4 * b.el();
    (lo, hi)
}

/// Upper bound read with a single `+` between `xiC(L(G))` and `LxiC(L(G))`.
pub fn t_bounds(b: &Base) -> Bounds {
    let lo = 2 * b.g.lxi_c + b.l.xi_c + b.l.lxi_c;
    (lo, lo + 2 * b.g.m1 - 4 * b.m() + b.l.m1)
}

pub fn t_bounds_bipartite(b: &Base) -> Bounds {
    let lo = 2 * b.g.lxi_c + b.l.xi_c + b.l.lxi_c;
    (lo, lo + b.l.m1)
}

// Subdivision joins.

pub fn vertex_join_star(b: &Base, h: &HSizes) -> i64 {
    let (n, n1) = (b.n(), h.n1);
    (3 * n - 1) * (n - 1) + (3 * n + 2 * n1 - 3) * (n + n1 - 2) - 4 * h.m1
}

pub fn vertex_join_bounds(b: &Base, h: &HSizes) -> Bounds {
    let (n, m, n1) = (b.n(), b.m(), h.n1);
    let lo = 3 * (n - 1) * n + 6 * b.el() + (2 * n1 + 5 * m - 2) * n1 - 4 * h.m1;
    let hi = 3 * (n - 1) * n + 8 * b.el() + 2 * (n1 + 3 * m - 1) * n1 - 4 * h.m1;
    (lo, hi)
}

pub fn edge_join_star(b: &Base, h: &HSizes) -> i64 {
    let (n, n1) = (b.n(), h.n1);
    (3 * n + 4 * n1 - 2) * (n - 1) + 2 * (n + n1 - 1) * (n1 + 1) - 4 * h.m1
}

pub fn edge_join_nonstar(b: &Base, h: &HSizes) -> i64 {
    let (n, m, n1) = (b.n(), b.m(), h.n1);
    m * (3 * m + 5) + 2 * n1 * (n1 + 3 * n - 1) - 4 * h.m1 - (n + n1 - 1) * b.full
}

pub fn vertex_edge_join_star(b: &Base, h: &HSizes) -> i64 {
    let (n, n1, n2) = (b.n(), h.n1, h.n2);
    3 * (n + n1 - 2) * (n + n1 - 1) + (n + n2 - 1) * (3 * n + 3 * n2 - 1) - 6 * (h.m1 + h.m2)
}

pub fn vertex_edge_join_nonstar(b: &Base, h: &HSizes) -> i64 {
    let (n, m, n1, n2) = (b.n(), b.m(), h.n1, h.n2);
    3 * (n + n2 - 1) * (n + n2) + 3 * (m + n1 - 1) * (m + n1) - 6 * (h.m1 + h.m2)
}

// Double coronas.

/// Terms shared by all bounds for the `S` corona.
fn s_corona_common(b: &Base, h: &HSizes) -> i64 {
    2 * (h.n1 + h.n2 + 1) * b.g.xi_c + 2 * h.k1() * b.g.theta + 2 * b.l.xi_c + 2 * h.theta_l() * b.l.theta
}

pub fn s_corona_bounds(b: &Base, h: &HSizes) -> Bounds {
    let c = s_corona_common(b, h);
    let (n, m) = (b.n(), b.m());
    let lo = c
        + 2 * b.el()
        + 2 * m * (3 * h.n1 + h.n2 * h.n2 + 2 * h.n2 - 2 * h.m2 + 1)
        + 2 * n * h.k1();
    let hi = c
        + 4 * b.el()
        + m * (10 * h.n1 + 3 * h.n2 * h.n2 + 7 * h.n2 - 6 * h.m2 + 4)
        + 3 * n * h.k1();
    (lo, hi)
}

pub fn s_corona_bounds_bipartite(b: &Base, h: &HSizes) -> Bounds {
    let (lo, _) = s_corona_bounds(b, h);
    let hi = s_corona_common(b, h)
        + 4 * b.el()
        + b.m() * (8 * h.n1 + 3 * h.n2 * h.n2 + 5 * h.n2 - 6 * h.m2 + 2)
        + 2 * b.n() * h.k1();
    (lo, hi)
}

pub fn q_corona_bounds(b: &Base, h: &HSizes) -> Bounds {
    let c = b.g.lxi_c
        + (h.n1 + h.n2 + 1) * b.g.xi_c
        + h.k1() * b.g.theta
        + 2 * b.g.m1
        + b.l.lxi_c
        + (2 * h.n2 + 1) * b.l.xi_c
        + h.theta_l() * b.l.theta;
    let (n, m) = (b.n(), b.m());
    let lo = c
        + b.l.m1
        + 6 * h.n2 * b.el()
        + 2 * m * (4 * h.n1 + h.n2 * h.n2 + 3 * h.n2 - 2 * h.m2)
        + 3 * n * h.k1();
    let hi = c
        + 2 * b.l.m1
        + 10 * h.n2 * b.el()
        + m * (10 * h.n1 + 3 * h.n2 * h.n2 + 7 * h.n2 - 6 * h.m2)
        + 3 * n * h.k1();
    (lo, hi)
}

pub fn r_corona_bounds(b: &Base, h: &HSizes) -> Bounds {
    let c = 2 * b.g.lxi_c
        + (3 * h.n1 + h.n2) * b.g.xi_c
        + h.k1() * b.g.theta
        + 2 * b.l.xi_c
        + h.theta_l() * b.l.theta
        + 8 * b.el();
    let (n, m) = (b.n(), b.m());
    let lo = c
        + 2 * b.g.m1
        + m * (14 * h.n1 + 3 * h.n2 * h.n2 + 5 * h.n2 - 6 * h.m2 - 4)
        + 2 * n * h.k1();
    let hi = c
        + 4 * b.g.m1
        + m * (20 * h.n1 + 3 * h.n2 * h.n2 + 7 * h.n2 - 6 * h.m2 - 8)
        + 3 * n * h.k1();
    (lo, hi)
}

fn t_corona_common(b: &Base, h: &HSizes) -> i64 {
    2 * b.g.lxi_c
        + (3 * h.n1 + h.n2) * b.g.xi_c
        + h.k1() * b.g.theta
        + b.l.lxi_c
        + (2 * h.n2 + 1) * b.l.xi_c
        + h.theta_l() * b.l.theta
}

pub fn t_corona_bounds(b: &Base, h: &HSizes) -> Bounds {
    let c = t_corona_common(b, h);
    let (n, m) = (b.n(), b.m());
    let lo = c
        + 2 * b.g.m1
        + b.l.m1
        + 6 * h.n2 * b.el()
        + 2 * m * (6 * h.n1 + h.n2 * h.n2 + 2 * h.n2 - 2 * h.m2 - 2)
        + 2 * n * h.k1();
    let hi = c
        + 4 * b.g.m1
        + 2 * b.l.m1
        + 10 * h.n2 * b.el()
        + m * (20 * h.n1 + 3 * h.n2 * h.n2 + 7 * h.n2 - 6 * h.m2 - 8)
        + 3 * n * h.k1();
    (lo, hi)
}

pub fn t_corona_bounds_bipartite(b: &Base, h: &HSizes) -> Bounds {
    let (lo, _) = t_corona_bounds(b, h);
    let hi = t_corona_common(b, h)
        + 2 * b.g.m1
        + 2 * b.l.m1
        + 10 * h.n2 * b.el()
        + b.m() * (14 * h.n1 + 3 * h.n2 * h.n2 + 5 * h.n2 - 6 * h.m2 - 4)
        + 2 * b.n() * h.k1();
    (lo, hi)
}
