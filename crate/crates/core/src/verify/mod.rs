//! Executable catalog of structural properties.
//!
//! Each [`CheckName`] maps to a computable statement about the cohomology
//! or the chromatic polynomials of a graph. Isomorphism of graded groups is
//! tested as equality of free rank and torsion in every bidegree after the
//! stated degree shift.

mod corpus;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{cone_decomposition, StateComplex, Variant};
use crate::error::Result;
use crate::graph::{named, SignedGraph};
use crate::homology::{cohomology_of, graded_cohomology, AbelianGroup, GradedCohomology};
use crate::poly::{chromatic_at_one_plus, euler_polynomial, EulerSource};

pub use corpus::{
    check_case, exhaustive_graphs, random_graph, run_suite, CheckTally, CorpusSpec, SuiteCase, SuiteFailure,
    SuiteReport,
};

const SIGNED: [Variant; 2] = [Variant::Chromatic, Variant::Balanced];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    DSquared,
    OrderIndependence,
    SwitchInvariance,
    EulerMatch,
    Cone,
    LesRanks,
    PendantShift,
    PosLoopZero,
    NegLoopBalanced,
    ParallelSameSign,
    Kunneth,
    LowDegreeUnsigned,
    KnightMoveFails,
}

impl CheckName {
    pub const ALL: [CheckName; 13] = [
        CheckName::DSquared,
        CheckName::OrderIndependence,
        CheckName::SwitchInvariance,
        CheckName::EulerMatch,
        CheckName::Cone,
        CheckName::LesRanks,
        CheckName::PendantShift,
        CheckName::PosLoopZero,
        CheckName::NegLoopBalanced,
        CheckName::ParallelSameSign,
        CheckName::Kunneth,
        CheckName::LowDegreeUnsigned,
        CheckName::KnightMoveFails,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::DSquared => "D_SQUARED",
            CheckName::OrderIndependence => "ORDER_INDEPENDENCE",
            CheckName::SwitchInvariance => "SWITCH_INVARIANCE",
            CheckName::EulerMatch => "EULER_MATCH",
            CheckName::Cone => "CONE",
            CheckName::LesRanks => "LES_RANKS",
            CheckName::PendantShift => "PENDANT_SHIFT",
            CheckName::PosLoopZero => "POS_LOOP_ZERO",
            CheckName::NegLoopBalanced => "NEG_LOOP_BALANCED",
            CheckName::ParallelSameSign => "PARALLEL_SAME_SIGN",
            CheckName::Kunneth => "KUNNETH",
            CheckName::LowDegreeUnsigned => "LOW_DEGREE_UNSIGNED",
            CheckName::KnightMoveFails => "KNIGHT_MOVE_FAILS",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl core::str::FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == wanted)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail(_) => "FAIL",
            Outcome::NotApplicable(_) => "NOT_APPLICABLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: CheckName,
    pub outcome: Outcome,
    /// What was compared; for failures, the first offending bidegree or
    /// coefficient is in the outcome itself.
    pub detail: String,
}

impl fmt::Display for PropertyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.outcome.label())?;
        match &self.outcome {
            Outcome::Fail(msg) | Outcome::NotApplicable(msg) => write!(f, " ({msg})")?,
            Outcome::Pass => {}
        }
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        Ok(())
    }
}

/// Inputs for a check. Missing optional inputs fall back to a default
/// choice documented on each check.
#[derive(Debug, Clone, Default)]
pub struct CheckInputs {
    pub graph: SignedGraph,
    /// Second graph for `KUNNETH`; defaults to the unbalanced triangle.
    pub partner: Option<SignedGraph>,
    /// Edge for `CONE`, `LES_RANKS`, `PENDANT_SHIFT`, `NEG_LOOP_BALANCED`.
    pub edge: Option<usize>,
    /// Vertex for `SWITCH_INVARIANCE`; defaults to every vertex.
    pub vertex: Option<usize>,
    /// Edge order for `ORDER_INDEPENDENCE`; defaults to the reversed order.
    pub permutation: Option<Vec<usize>>,
}

impl CheckInputs {
    pub fn new(graph: SignedGraph) -> Self {
        CheckInputs {
            graph,
            ..Default::default()
        }
    }
}

/// Runs one catalog entry.
pub fn check(name: CheckName, inputs: &CheckInputs) -> PropertyCheck {
    let result = match name {
        CheckName::DSquared => d_squared(inputs),
        CheckName::OrderIndependence => order_independence(inputs),
        CheckName::SwitchInvariance => switch_invariance(inputs),
        CheckName::EulerMatch => euler_match(inputs),
        CheckName::Cone => cone(inputs),
        CheckName::LesRanks => les_ranks(inputs),
        CheckName::PendantShift => pendant_shift(inputs),
        CheckName::PosLoopZero => pos_loop_zero(inputs),
        CheckName::NegLoopBalanced => neg_loop_balanced(inputs),
        CheckName::ParallelSameSign => parallel_same_sign(inputs),
        CheckName::Kunneth => kunneth(inputs),
        CheckName::LowDegreeUnsigned => low_degree_unsigned(inputs),
        CheckName::KnightMoveFails => knight_move_fails(inputs),
    };
    let (outcome, detail) = match result {
        Ok(pair) => pair,
        Err(e) => (Outcome::Fail(format!("error: {e}")), String::new()),
    };
    PropertyCheck { name, outcome, detail }
}

type Checked = Result<(Outcome, String)>;

fn pass(detail: impl Into<String>) -> Checked {
    Ok((Outcome::Pass, detail.into()))
}

fn fail(msg: String) -> Checked {
    Ok((Outcome::Fail(msg), String::new()))
}

fn not_applicable(msg: &str) -> Checked {
    Ok((Outcome::NotApplicable(msg.into()), String::new()))
}

/// First bidegree where `a` and `b` differ, rendered for a diagnostic.
fn first_difference(a: &GradedCohomology, b: &GradedCohomology) -> Option<String> {
    let mut keys: Vec<(usize, usize)> = a
        .groups()
        .into_iter()
        .chain(b.groups())
        .map(|(i, j, _)| (i, j))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().find_map(|(i, j)| {
        let (x, y) = (a.group(i, j), b.group(i, j));
        (x != y).then(|| format!("H^{{{i},{j}}}: {x} vs {y}"))
    })
}

fn compare(variant: Variant, what: &str, a: &GradedCohomology, b: &GradedCohomology) -> Option<String> {
    first_difference(a, b).map(|d| format!("{variant} {what}: {d}"))
}

fn d_squared(inputs: &CheckInputs) -> Checked {
    for variant in Variant::ALL {
        let complex = StateComplex::new(&inputs.graph, variant)?;
        for j in 0..=complex.max_j() {
            for i in 1..=complex.max_i() {
                let (_, _, first) = complex.differential_entries(i - 1, j);
                let (_, _, second) = complex.differential_entries(i, j);
                let product = crate::complex::sparse_product(&second, &first);
                if let Some(&(r, c, v)) = product.first() {
                    return fail(format!(
                        "{variant}: d^{i} d^{} has entry {v} at ({r}, {c}) in bidegree ({}, {j})",
                        i - 1,
                        i - 1
                    ));
                }
            }
        }
    }
    pass("")
}

fn order_independence(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let order: Vec<usize> = match &inputs.permutation {
        Some(p) => p.clone(),
        None => (0..g.edge_count()).rev().collect(),
    };
    let permuted = g.permute_edges(&order)?;
    for variant in Variant::ALL {
        let a = graded_cohomology(g, variant)?;
        let b = graded_cohomology(&permuted, variant)?;
        if let Some(d) = compare(variant, "after reordering", &a, &b) {
            return fail(d);
        }
    }
    pass(format!("order {order:?}"))
}

fn switch_invariance(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let vertices: Vec<usize> = match inputs.vertex {
        Some(v) => alloc::vec![v],
        None => (0..g.vertex_count()).collect(),
    };
    for variant in SIGNED {
        let base = graded_cohomology(g, variant)?;
        for &v in &vertices {
            let switched = graded_cohomology(&g.vertex_switch(v)?, variant)?;
            if let Some(d) = compare(variant, &format!("switching vertex {v}"), &base, &switched) {
                return fail(d);
            }
        }
    }
    pass(format!("vertices {vertices:?}"))
}

fn euler_match(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let mut detail = Vec::new();
    for variant in Variant::ALL {
        let expected = chromatic_at_one_plus(g, variant);
        let chain = euler_polynomial(g, variant, EulerSource::Chain)?;
        let homology = euler_polynomial(g, variant, EulerSource::Cohomology)?;
        for (label, got) in [("chain", &chain), ("cohomology", &homology)] {
            if let Some(k) = got.first_difference(&expected) {
                return fail(format!(
                    "{variant} {label}: coefficient of q^{k} is {} but the chromatic branch at 1+q gives {} ({} vs {})",
                    got.coeff(k),
                    expected.coeff(k),
                    got.display_with("q"),
                    expected.display_with("q")
                ));
            }
        }
        detail.push(format!("{variant}: {}", chain.display_with("q")));
    }
    pass(detail.join("; "))
}

/// A positive non-loop edge usable for deletion-contraction, moved to the
/// front. When only negative non-loop edges exist an endpoint is switched
/// first, which changes nothing up to isomorphism.
fn split_edge(inputs: &CheckInputs) -> Result<Option<(SignedGraph, usize)>> {
    let g = &inputs.graph;
    let candidate = match inputs.edge {
        Some(e) => Some(e),
        None => g
            .edges()
            .iter()
            .position(|e| !e.is_loop() && e.sign.is_positive())
            .or_else(|| g.edges().iter().position(|e| !e.is_loop())),
    };
    let Some(e) = candidate else { return Ok(None) };
    let edge = g.edge(e)?;
    if edge.is_loop() {
        return Ok(None);
    }
    let prepared = if edge.sign.is_positive() {
        g.clone()
    } else {
        g.vertex_switch(edge.tail)?
    };
    Ok(Some((prepared.with_edge_first(e)?, e)))
}

fn cone(inputs: &CheckInputs) -> Checked {
    let Some((g, original)) = split_edge(inputs)? else {
        return not_applicable("no non-loop edge");
    };
    for variant in Variant::ALL {
        let report = cone_decomposition(&g, 0, variant)?;
        if !report.holds() {
            return fail(format!(
                "{variant}, edge {original}: {}",
                report.failure.unwrap_or_default()
            ));
        }
    }
    pass(format!("edge {original}"))
}

fn rank(h: &GradedCohomology, i: isize, j: usize) -> i64 {
    if i < 0 {
        0
    } else {
        h.group(i as usize, j).free_rank() as i64
    }
}

fn les_ranks(inputs: &CheckInputs) -> Checked {
    let Some((g, original)) = split_edge(inputs)? else {
        return not_applicable("no non-loop edge");
    };
    let deleted = g.delete_edge(0)?;
    let contracted = g.contract_edge(0)?;
    for variant in Variant::ALL {
        let whole = graded_cohomology(&g, variant)?;
        let del = graded_cohomology(&deleted, variant)?;
        let con = graded_cohomology(&contracted, variant)?;
        let top = g.edge_count() as isize + 1;
        for j in 0..=g.vertex_count() {
            // ... -> H^{i-1}(G/e) -> H^i(G) -> H^i(G-e) -> H^i(G/e) -> H^{i+1}(G) -> ...
            let mut alternating = 0i64;
            for i in 0..=top {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                alternating += sign * (rank(&whole, i, j) - rank(&del, i, j) + rank(&con, i, j));
                let exact_at = [
                    ("H(G)", rank(&whole, i, j), rank(&con, i - 1, j) + rank(&del, i, j)),
                    ("H(G-e)", rank(&del, i, j), rank(&whole, i, j) + rank(&con, i, j)),
                    ("H(G/e)", rank(&con, i, j), rank(&del, i, j) + rank(&whole, i + 1, j)),
                ];
                for (at, middle, outer) in exact_at {
                    if middle > outer {
                        return fail(format!(
                            "{variant}, edge {original}: rank of {at} at ({i}, {j}) is {middle}, exceeding its neighbours' {outer}"
                        ));
                    }
                }
            }
            if alternating != 0 {
                return fail(format!(
                    "{variant}, edge {original}: alternating rank sum is {alternating} at j = {j}"
                ));
            }
        }
    }
    pass(format!("edge {original}"))
}

fn is_pendant(g: &SignedGraph, e: usize) -> bool {
    let edge = g.edges()[e];
    !edge.is_loop() && (g.degree(edge.tail) == 1 || g.degree(edge.head) == 1)
}

fn pendant_shift(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let e = match inputs.edge {
        Some(e) => {
            g.edge(e)?;
            if !is_pendant(g, e) {
                return not_applicable("edge is not pendant");
            }
            e
        }
        None => match (0..g.edge_count()).find(|&e| is_pendant(g, e)) {
            Some(e) => e,
            None => return not_applicable("no pendant edge"),
        },
    };
    let contracted = g.contract_edge(e)?;
    for variant in SIGNED {
        let whole = graded_cohomology(g, variant)?;
        let shifted = graded_cohomology(&contracted, variant)?.shifted(1);
        if let Some(d) = compare(variant, &format!("H(G) vs H(G/e){{1}}, edge {e}"), &whole, &shifted) {
            return fail(d);
        }
    }
    pass(format!("edge {e}"))
}

fn pos_loop_zero(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    if !g.edges().iter().any(|e| e.is_loop() && e.sign.is_positive()) {
        return not_applicable("no positive loop");
    }
    for variant in Variant::ALL {
        let h = graded_cohomology(g, variant)?;
        if let Some((i, j, group)) = h.groups().into_iter().next() {
            return fail(format!("{variant}: H^{{{i},{j}}} = {group}"));
        }
    }
    pass("")
}

fn neg_loop_balanced(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let is_neg_loop = |e: usize| {
        let edge = g.edges()[e];
        edge.is_loop() && !edge.sign.is_positive()
    };
    let e = match inputs.edge {
        Some(e) if e < g.edge_count() && is_neg_loop(e) => e,
        Some(_) => return not_applicable("edge is not a negative loop"),
        None => match (0..g.edge_count()).find(|&e| is_neg_loop(e)) {
            Some(e) => e,
            None => return not_applicable("no negative loop"),
        },
    };
    let a = graded_cohomology(g, Variant::Balanced)?;
    let b = graded_cohomology(&g.delete_edge(e)?, Variant::Balanced)?;
    match compare(Variant::Balanced, &format!("deleting loop {e}"), &a, &b) {
        Some(d) => fail(d),
        None => pass(format!("edge {e}")),
    }
}

fn parallel_same_sign(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let edges = g.edges();
    let pair = (0..edges.len()).find_map(|b| {
        (0..b)
            .find(|&a| {
                !edges[a].is_loop()
                    && edges[a].endpoints() == edges[b].endpoints()
                    && edges[a].sign == edges[b].sign
            })
            .map(|a| (a, b))
    });
    let Some((a, b)) = pair else {
        return not_applicable("no same-sign parallel pair");
    };
    let reduced = g.delete_edge(b)?;
    for variant in Variant::ALL {
        let x = graded_cohomology(g, variant)?;
        let y = graded_cohomology(&reduced, variant)?;
        if let Some(d) = compare(variant, &format!("deleting edge {b} parallel to {a}"), &x, &y) {
            return fail(d);
        }
    }
    pass(format!("edges {a}, {b}"))
}

/// `H^{n,j}(A ⊗ B) = sum H^{p,j1}(A) ⊗ H^{q,j2}(B) over p+q = n, j1+j2 = j,
/// plus Tor(H^{p,j1}(A), H^{q,j2}(B)) over p+q = n+1, j1+j2 = j`.
pub fn kunneth_prediction(a: &GradedCohomology, b: &GradedCohomology) -> Result<GradedCohomology> {
    let mut parts: alloc::collections::BTreeMap<(usize, usize), AbelianGroup> = Default::default();
    for (p, j1, x) in a.groups() {
        for (q, j2, y) in b.groups() {
            let key = (p + q, j1 + j2);
            let entry = parts.entry(key).or_default();
            *entry = entry.direct_sum(&x.tensor(&y)?)?;
            let tor = x.tor(&y)?;
            if !tor.is_zero() && p + q >= 1 {
                let entry = parts.entry((p + q - 1, j1 + j2)).or_default();
                *entry = entry.direct_sum(&tor)?;
            }
        }
    }
    let mut out = GradedCohomology::new();
    for ((i, j), g) in parts {
        out.insert(i, j, g);
    }
    Ok(out)
}

fn kunneth(inputs: &CheckInputs) -> Checked {
    let partner = inputs.partner.clone().unwrap_or_else(named::sp3);
    let union = inputs.graph.disjoint_union(&partner);
    for variant in Variant::ALL {
        let a = graded_cohomology(&inputs.graph, variant)?;
        let b = graded_cohomology(&partner, variant)?;
        let predicted = kunneth_prediction(&a, &b)?;
        let actual = cohomology_of(&StateComplex::new(&union, variant)?)?;
        if let Some(d) = compare(variant, "union vs Künneth", &actual, &predicted) {
            return fail(d);
        }
    }
    pass(format!("partner {partner}"))
}

fn low_degree_unsigned(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let limit = match g.unbalanced_girth() {
        None => None,
        Some(girth) if girth >= 2 => Some(girth - 2),
        Some(_) => return not_applicable("unbalanced girth below 2"),
    };
    let cut = |h: GradedCohomology| match limit {
        Some(l) => h.truncated(l),
        None => h,
    };
    let unsigned = cut(graded_cohomology(g, Variant::Unsigned)?);
    for variant in SIGNED {
        let signed = cut(graded_cohomology(g, variant)?);
        if let Some(d) = compare(variant, "vs unsigned", &signed, &unsigned) {
            return fail(d);
        }
    }
    pass(match limit {
        Some(l) => format!("degrees 0..={l}"),
        None => String::from("balanced, all degrees"),
    })
}

/// First place where the rational pairing
/// `H^{i,n-i} ≅ H^{i+1,n-i-2}` (`n = |V|`) breaks: either the two ranks
/// differ or a nontrivial rational group lies off both diagonals.
pub fn knight_move_violation(h: &GradedCohomology, vertex_count: usize) -> Option<String> {
    let n = vertex_count as isize;
    let rank_at = |i: isize, j: isize| -> i64 {
        if i < 0 || j < 0 {
            0
        } else {
            h.group(i as usize, j as usize).free_rank() as i64
        }
    };
    let top = h.max_degree().map_or(0, |d| d as isize);
    for i in -1..=top {
        let (upper, lower) = ((i, n - i), (i + 1, n - i - 2));
        let (a, b) = (rank_at(upper.0, upper.1), rank_at(lower.0, lower.1));
        if a != b {
            return Some(format!(
                "rank H^{{{},{}}} = {a} but rank H^{{{},{}}} = {b}",
                upper.0, upper.1, lower.0, lower.1
            ));
        }
    }
    h.groups().into_iter().find_map(|(i, j, g)| {
        let (i, j) = (i as isize, j as isize);
        (g.free_rank() > 0 && j != n - i && j != n - i - 1)
            .then(|| format!("H^{{{i},{j}}} = {g} has no partner"))
    })
}

fn knight_move_fails(inputs: &CheckInputs) -> Checked {
    let g = &inputs.graph;
    let h = graded_cohomology(g, Variant::Balanced)?;
    match knight_move_violation(&h, g.vertex_count()) {
        Some(v) => pass(format!("balanced pairing fails: {v}")),
        None => fail(String::from("balanced cohomology satisfies the knight-move pairing")),
    }
}
