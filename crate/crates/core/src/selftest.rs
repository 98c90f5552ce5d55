//! A fixed battery of small matroids of every shipped kind, checked against
//! the independence axioms.

use crate::error::Result;
use crate::matroid::{
    verify_axioms, AnyMatroid, AxiomReport, GraphicMatroid, LinearMatroid, Oracle,
    PartitionMatroid, UniformMatroid,
};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub matroid: AnyMatroid,
}

fn fixture(name: &str, matroid: AnyMatroid) -> Fixture {
    Fixture {
        name: name.to_string(),
        matroid,
    }
}

fn complete_graph(v: usize) -> Vec<(usize, usize)> {
    (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .collect()
}

fn linear(p: u64, dim: usize, vectors: &[&[u64]]) -> AnyMatroid {
    let vectors = vectors.iter().map(|v| v.to_vec()).collect();
    AnyMatroid::Linear(
        LinearMatroid::new(p, dim, vectors).expect("fixture vectors are well formed"),
    )
}

/// Ground sets of at most 12 elements.
pub fn fixture_battery() -> Vec<Fixture> {
    use AnyMatroid::*;
    vec![
        fixture(
            "partition 6/3",
            Partition(PartitionMatroid::new(vec![0, 0, 1, 1, 2, 2])),
        ),
        fixture(
            "partition 12/4",
            Partition(PartitionMatroid::new((0..12).map(|i| i % 4).collect())),
        ),
        fixture("free 8", Partition(PartitionMatroid::free(8))),
        fixture("uniform U(0,3)", Uniform(UniformMatroid::new(0, 3))),
        fixture("uniform U(1,3)", Uniform(UniformMatroid::new(1, 3))),
        fixture("uniform U(2,5)", Uniform(UniformMatroid::new(2, 5))),
        fixture("uniform U(3,12)", Uniform(UniformMatroid::new(3, 12))),
        fixture("uniform U(12,12)", Uniform(UniformMatroid::new(12, 12))),
        fixture(
            "linear Fano GF(2)^3",
            linear(
                2,
                3,
                &[
                    &[1, 0, 0],
                    &[0, 1, 0],
                    &[0, 0, 1],
                    &[1, 1, 0],
                    &[1, 0, 1],
                    &[0, 1, 1],
                    &[1, 1, 1],
                ],
            ),
        ),
        fixture(
            "linear GF(3)^2 with zero",
            linear(
                3,
                2,
                &[&[1, 0], &[0, 1], &[1, 1], &[1, 2], &[0, 0], &[2, 2]],
            ),
        ),
        fixture(
            "linear GF(5)^3",
            linear(
                5,
                3,
                &[
                    &[1, 2, 3],
                    &[2, 4, 1],
                    &[0, 1, 4],
                    &[3, 3, 3],
                    &[4, 0, 2],
                    &[1, 1, 0],
                    &[2, 2, 0],
                    &[0, 0, 1],
                    &[1, 0, 0],
                    &[3, 1, 4],
                ],
            ),
        ),
        fixture(
            "linear GF(7)^4",
            linear(
                7,
                4,
                &[
                    &[1, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[1, 1, 0, 0],
                    &[0, 0, 1, 6],
                    &[2, 3, 4, 5],
                    &[6, 5, 4, 3],
                    &[1, 6, 1, 6],
                    &[0, 0, 0, 1],
                    &[3, 3, 0, 0],
                    &[5, 1, 2, 2],
                    &[0, 2, 0, 0],
                    &[4, 4, 4, 4],
                ],
            ),
        ),
        fixture(
            "graphic K4",
            Graphic(GraphicMatroid::new(4, complete_graph(4))),
        ),
        fixture(
            "graphic K5",
            Graphic(GraphicMatroid::new(5, complete_graph(5))),
        ),
        fixture(
            "graphic multigraph",
            Graphic(GraphicMatroid::new(
                5,
                vec![
                    (0, 1),
                    (0, 1),
                    (1, 2),
                    (2, 2),
                    (2, 3),
                    (3, 0),
                    (3, 4),
                    (4, 4),
                    (1, 3),
                    (2, 0),
                    (4, 1),
                ],
            )),
        ),
        fixture(
            "graphic two components",
            Graphic(GraphicMatroid::new(
                8,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 3),
                    (3, 5),
                    (4, 6),
                ],
            )),
        ),
    ]
}

#[derive(Debug, Clone)]
pub struct SelfTestResult {
    pub name: String,
    pub kind: &'static str,
    pub report: AxiomReport,
}

pub fn run_self_test() -> Result<Vec<SelfTestResult>> {
    fixture_battery()
        .into_iter()
        .map(|f| {
            let report = verify_axioms(&Oracle::new(&f.matroid))?;
            Ok(SelfTestResult {
                kind: f.matroid.kind(),
                name: f.name,
                report,
            })
        })
        .collect()
}
