//! Stable JSON shapes. Field order follows declaration order; every list
//! is produced in a deterministic order by the caller.

use serde::Serialize;

use schrom_core::{GradedCohomology, IntPolynomial, ParityPolynomial, SignedGraph, Variant};

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Serialize)]
pub struct EdgeJson {
    pub tail: usize,
    pub head: usize,
    pub sign: String,
}

impl From<&SignedGraph> for GraphJson {
    fn from(g: &SignedGraph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    tail: e.tail,
                    head: e.head,
                    sign: e.sign.symbol().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GroupJson {
    pub i: usize,
    pub j: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct CohomologyJson {
    pub graph: GraphJson,
    pub variant: String,
    pub groups: Vec<GroupJson>,
}

impl CohomologyJson {
    pub fn new(g: &SignedGraph, variant: Variant, h: &GradedCohomology) -> Self {
        CohomologyJson {
            graph: g.into(),
            variant: variant.name().to_string(),
            groups: h
                .groups()
                .into_iter()
                .map(|(i, j, a)| GroupJson {
                    i,
                    j,
                    free_rank: a.free_rank(),
                    torsion: a.torsion().to_vec(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PolynomialJson {
    pub odd: Vec<i64>,
    pub even: Vec<i64>,
}

impl From<&ParityPolynomial> for PolynomialJson {
    fn from(p: &ParityPolynomial) -> Self {
        PolynomialJson {
            odd: p.odd.coeffs().to_vec(),
            even: p.even.coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CountJson {
    pub lambda: u32,
    pub count: u128,
}

#[derive(Debug, Serialize)]
pub struct OracleJson {
    pub counts: Vec<CountJson>,
}

#[derive(Debug, Serialize)]
pub struct EulerJson {
    pub variant: String,
    pub chain: Vec<i64>,
    pub cohomology: Vec<i64>,
    pub chromatic: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl EulerJson {
    pub fn new(
        variant: Variant,
        chain: &IntPolynomial,
        cohomology: &IntPolynomial,
        chromatic: &IntPolynomial,
    ) -> Self {
        EulerJson {
            variant: variant.name().to_string(),
            chain: chain.coeffs().to_vec(),
            cohomology: cohomology.coeffs().to_vec(),
            chromatic: chromatic.coeffs().to_vec(),
            matches: chain == cohomology && cohomology == chromatic,
        }
    }
}
