use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check, CheckInputs, CheckName, Outcome, PropertyCheck};
use crate::graph::{named, Edge, Sign, SignedGraph};

/// Largest `KUNNETH` union the suite builds; partners are drawn from the
/// named graphs that keep the union within this size.
const MAX_UNION_EDGES: usize = 9;

/// Which graphs a suite run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Every signed multigraph with `1..=V` vertices and at most `E` edges.
    pub exhaustive: Option<(usize, usize)>,
    pub random_count: usize,
    pub random_max_vertices: usize,
    pub random_max_edges: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            exhaustive: Some((3, 4)),
            random_count: 200,
            random_max_vertices: 5,
            random_max_edges: 8,
        }
    }
}

impl CorpusSpec {
    pub fn empty() -> Self {
        CorpusSpec {
            exhaustive: None,
            random_count: 0,
            random_max_vertices: 0,
            random_max_edges: 0,
        }
    }

    /// All graphs of the corpus, exhaustive part first.
    pub fn graphs(&self, seed: u64) -> Vec<SignedGraph> {
        self.cases(seed).into_iter().map(|c| c.graph).collect()
    }

    /// Graphs together with the per-graph choices the checks need. All
    /// randomness comes from one ChaCha stream seeded by `seed`.
    pub fn cases(&self, seed: u64) -> Vec<SuiteCase> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut graphs = match self.exhaustive {
            Some((v, e)) => exhaustive_graphs(v, e),
            None => Vec::new(),
        };
        if self.random_max_vertices > 0 {
            for _ in 0..self.random_count {
                graphs.push(random_graph(&mut rng, self.random_max_vertices, self.random_max_edges));
            }
        }
        let partners = [named::sn(1, 1), named::sp2(), named::sp3()];
        graphs
            .into_iter()
            .enumerate()
            .map(|(index, graph)| {
                let mut permutation: Vec<usize> = (0..graph.edge_count()).collect();
                permutation.shuffle(&mut rng);
                let vertex = rng.gen_range(0..graph.vertex_count());
                let fitting: Vec<&SignedGraph> = partners
                    .iter()
                    .filter(|p| graph.edge_count() + p.edge_count() <= MAX_UNION_EDGES)
                    .collect();
                let partner = fitting[rng.gen_range(0..fitting.len())].clone();
                SuiteCase {
                    index,
                    graph,
                    permutation,
                    vertex,
                    partner,
                }
            })
            .collect()
    }
}

/// Every signed multigraph on `1..=max_vertices` vertices with at most
/// `max_edges` edges, one representative per multiset of edges.
pub fn exhaustive_graphs(max_vertices: usize, max_edges: usize) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let mut kinds = Vec::new();
        for u in 0..n {
            for w in u..n {
                for sign in [Sign::Positive, Sign::Negative] {
                    kinds.push(Edge::new(u, w, sign));
                }
            }
        }
        let mut chosen = Vec::new();
        multisets(&kinds, 0, max_edges, &mut chosen, &mut |edges| {
            out.push(SignedGraph::new(n, edges.iter().copied()).expect("endpoints in range"));
        });
    }
    out
}

fn multisets(kinds: &[Edge], from: usize, budget: usize, chosen: &mut Vec<Edge>, emit: &mut impl FnMut(&[Edge])) {
    emit(chosen);
    if budget == 0 {
        return;
    }
    for k in from..kinds.len() {
        chosen.push(kinds[k]);
        multisets(kinds, k, budget - 1, chosen, emit);
        chosen.pop();
    }
}

/// A random signed multigraph with `1..=max_vertices` vertices and
/// `0..=max_edges` edges; loops and parallel edges may occur.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<Edge> = (0..m)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            Edge::new(rng.gen_range(0..n), rng.gen_range(0..n), sign)
        })
        .collect();
    SignedGraph::new(n, edges).expect("endpoints in range")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteCase {
    pub index: usize,
    pub graph: SignedGraph,
    pub permutation: Vec<usize>,
    pub vertex: usize,
    pub partner: SignedGraph,
}

/// Every catalog entry except `KNIGHT_MOVE_FAILS` on one corpus graph.
pub fn check_case(case: &SuiteCase) -> Vec<PropertyCheck> {
    let inputs = CheckInputs {
        graph: case.graph.clone(),
        partner: Some(case.partner.clone()),
        edge: None,
        vertex: Some(case.vertex),
        permutation: Some(case.permutation.clone()),
    };
    CheckName::ALL
        .into_iter()
        .filter(|&n| n != CheckName::KnightMoveFails)
        .map(|n| check(n, &inputs))
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteFailure {
    pub index: usize,
    pub graph: SignedGraph,
    pub check: PropertyCheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub seed: u64,
    pub graph_count: usize,
    pub tallies: Vec<(CheckName, CheckTally)>,
    pub failures: Vec<SuiteFailure>,
    /// The documented counterexample, present whenever the corpus is not
    /// empty.
    pub knight_move: Option<PropertyCheck>,
}

impl SuiteReport {
    /// Joins per-case results, given in case order.
    pub fn assemble(seed: u64, cases: &[SuiteCase], results: Vec<Vec<PropertyCheck>>) -> Self {
        let mut tallies: Vec<(CheckName, CheckTally)> = Vec::new();
        let mut failures = Vec::new();
        for (case, checks) in cases.iter().zip(results) {
            for c in checks {
                let slot = match tallies.iter().position(|(n, _)| *n == c.name) {
                    Some(k) => k,
                    None => {
                        tallies.push((c.name, CheckTally::default()));
                        tallies.len() - 1
                    }
                };
                let tally = &mut tallies[slot].1;
                match &c.outcome {
                    Outcome::Pass => tally.pass += 1,
                    Outcome::Fail(_) => {
                        tally.fail += 1;
                        failures.push(SuiteFailure {
                            index: case.index,
                            graph: case.graph.clone(),
                            check: c,
                        });
                    }
                    Outcome::NotApplicable(_) => tally.not_applicable += 1,
                }
            }
        }
        tallies.sort_by_key(|(n, _)| *n);
        let knight_move = (!cases.is_empty())
            .then(|| check(CheckName::KnightMoveFails, &CheckInputs::new(named::sp2())));
        SuiteReport {
            seed,
            graph_count: cases.len(),
            tallies,
            failures,
            knight_move,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.graph_count == 0
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.knight_move.as_ref().is_none_or(|k| k.outcome.is_pass())
    }

    pub fn tally(&self, name: CheckName) -> CheckTally {
        self.tallies
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
            .unwrap_or_default()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}: {} graphs", self.seed, self.graph_count)?;
        for (name, t) in &self.tallies {
            let status = if t.fail == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{name:<20} {status}  pass {} fail {} not_applicable {}",
                t.pass, t.fail, t.not_applicable
            )?;
        }
        if let Some(k) = &self.knight_move {
            let status = if k.outcome.is_pass() { "EXPECTED_FAILURE" } else { "FAIL" };
            let what = match &k.outcome {
                Outcome::Pass => k.detail.clone(),
                Outcome::Fail(m) | Outcome::NotApplicable(m) => m.clone(),
            };
            writeln!(f, "{:<20} {status}  SP_2: {what}", CheckName::KnightMoveFails)?;
        }
        for failure in &self.failures {
            writeln!(f, "failure #{} {}: {}", failure.index, failure.graph, failure.check)?;
        }
        let verdict: String = if self.all_passed() {
            "all checks passed".into()
        } else {
            format!("{} failures", self.failures.len())
        };
        write!(f, "{verdict}")
    }
}

/// Sequential suite run; see [`CorpusSpec::cases`] and
/// [`SuiteReport::assemble`] to spread the work over threads.
pub fn run_suite(spec: &CorpusSpec, seed: u64) -> SuiteReport {
    let cases = spec.cases(seed);
    let results = cases.iter().map(check_case).collect();
    SuiteReport::assemble(seed, &cases, results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        // Multisets of size <= k over t kinds: C(t + k, k).
        assert_eq!(exhaustive_graphs(1, 4).len(), 15);
        assert_eq!(exhaustive_graphs(2, 2).len() - exhaustive_graphs(1, 2).len(), 28);
        assert_eq!(exhaustive_graphs(3, 4).len(), 15 + 210 + 1820);
    }

    #[test]
    fn cases_are_reproducible() {
        let spec = CorpusSpec {
            exhaustive: Some((2, 2)),
            random_count: 5,
            ..CorpusSpec::default()
        };
        assert_eq!(spec.cases(7), spec.cases(7));
        assert_ne!(spec.cases(7), spec.cases(8));
        assert_eq!(spec.cases(7).len(), 6 + 28 + 5);
    }

    #[test]
    fn empty_corpus_gives_empty_report() {
        let report = run_suite(&CorpusSpec::empty(), 42);
        assert!(report.is_empty());
        assert!(report.tallies.is_empty());
        assert!(report.knight_move.is_none());
        assert!(report.all_passed());
    }

    #[test]
    fn small_suite_passes() {
        let spec = CorpusSpec {
            exhaustive: Some((2, 2)),
            random_count: 3,
            random_max_vertices: 3,
            random_max_edges: 3,
        };
        let report = run_suite(&spec, 42);
        assert!(report.all_passed(), "{report}");
    }
}
