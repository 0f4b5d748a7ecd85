//! Hardcoded Tits diagrams with known minimal angles.
//!
//! Polygon entries are indices whose relative root system is of rank two
//! (generalized triangles, quadrangles and hexagons). The boundary group
//! holds the two exceptional quadrangles whose minimal angle is exactly π/3.

use crate::angle::{Angle, Verdict};
use crate::diagram::{AutGroup, CoxeterDiagram, Permutation};
use crate::tits::TitsDiagram;
use crate::{Node, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogGroup {
    /// Small examples illustrating the definition of the minimal angle.
    WorkedExample,
    /// Relative-rank-one diagrams with an explicitly computed angle.
    AngleExample,
    /// Residues met when reducing to smaller rank.
    Residue,
    /// Exceptional Moufang polygons with minimal angle above π/3.
    Polygon,
    /// Exceptional quadrangles sitting exactly on π/3.
    Boundary,
}

impl CatalogGroup {
    pub fn code(&self) -> &'static str {
        match self {
            CatalogGroup::WorkedExample => "worked_example",
            CatalogGroup::AngleExample => "angle_example",
            CatalogGroup::Residue => "residue",
            CatalogGroup::Polygon => "polygon",
            CatalogGroup::Boundary => "boundary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub group: CatalogGroup,
    pub tits: TitsDiagram,
    pub expected_angle: Angle,
    pub expected_verdict: Verdict,
}

fn entry(
    name: impl Into<String>,
    group: CatalogGroup,
    diagram: &str,
    cycles: &str,
    anisotropic: &[Node],
    expected_angle: Angle,
) -> CatalogEntry {
    let d = CoxeterDiagram::builtin(diagram).expect("catalog diagrams are builtin");
    let gamma = if cycles.is_empty() {
        AutGroup::trivial()
    } else {
        AutGroup::new(vec![cycles
            .parse::<Permutation>()
            .expect("catalog cycles parse")])
    };
    let tits = TitsDiagram::new(d, gamma, anisotropic.iter().copied())
        .expect("catalog kernels name existing nodes");
    let expected_verdict = expected_angle.verdict();
    CatalogEntry {
        name: name.into(),
        group,
        tits,
        expected_angle,
        expected_verdict,
    }
}

fn cos(n: i64, d: i64) -> Angle {
    Angle::from_cos(Q::new(n.into(), d.into())).expect("valid cosine")
}

/// Every catalogued diagram with its expected minimal angle.
pub fn paper_catalog() -> Vec<CatalogEntry> {
    use CatalogGroup::*;
    let right = || cos(0, 1);
    let third = || cos(1, 3);

    let mut out = vec![
        entry(
            "swapped-pair-quasi-split",
            WorkedExample,
            "A2",
            "(1 2)",
            &[],
            Angle::pi(),
        ),
        entry(
            "a5-outer-end-orbit",
            WorkedExample,
            "A5",
            "(1 5)(2 4)",
            &[2, 3, 4],
            right(),
        ),
        entry(
            "a7-alternating-kernel",
            WorkedExample,
            "A7",
            "",
            &[1, 3, 5, 7],
            right(),
        ),
        entry("a1-quasi-split", AngleExample, "A1", "", &[], Angle::pi()),
    ];
    for n in 2..=8 {
        let kernel: Vec<Node> = (2..=n).collect();
        out.push(entry(
            format!("b{n}-first-node"),
            AngleExample,
            &format!("B{n}"),
            "",
            &kernel,
            right(),
        ));
    }
    for n in 4..=8 {
        let kernel: Vec<Node> = (2..=n).collect();
        out.push(entry(
            format!("d{n}-first-node"),
            AngleExample,
            &format!("D{n}"),
            "",
            &kernel,
            right(),
        ));
    }
    out.extend([
        entry("a3-middle-node", AngleExample, "A3", "", &[1, 3], right()),
        entry(
            "a5-middle-node",
            AngleExample,
            "A5",
            "",
            &[1, 2, 4, 5],
            third(),
        ),
        entry(
            "e7-end-node",
            AngleExample,
            "E7",
            "",
            &[1, 2, 3, 4, 5, 6],
            third(),
        ),
        entry(
            "b3-short-end-node",
            AngleExample,
            "B3",
            "",
            &[1, 2],
            third(),
        ),
        entry(
            "a5-outer-middle-node",
            AngleExample,
            "A5",
            "(1 5)(2 4)",
            &[1, 2, 4, 5],
            third(),
        ),
        entry("e7-d4-kernel", Residue, "E7", "", &[2, 3, 4, 5], right()),
        entry(
            "triangle-e6-inner",
            Polygon,
            "E6",
            "",
            &[2, 3, 4, 5],
            right(),
        ),
        entry("quadrangle-f4", Polygon, "F4", "", &[2, 3], right()),
        entry(
            "quadrangle-e6-outer",
            Polygon,
            "E6",
            "(1 6)(3 5)",
            &[3, 4, 5],
            right(),
        ),
        entry(
            "hexagon-e6-outer",
            Polygon,
            "E6",
            "(1 6)(3 5)",
            &[1, 3, 5, 6],
            third(),
        ),
        entry(
            "hexagon-e6-inner",
            Polygon,
            "E6",
            "",
            &[1, 3, 5, 6],
            third(),
        ),
        entry(
            "hexagon-e8",
            Polygon,
            "E8",
            "",
            &[1, 2, 3, 4, 5, 6],
            third(),
        ),
        entry(
            "quadrangle-e7-boundary",
            Boundary,
            "E7",
            "",
            &[2, 3, 4, 5, 7],
            Angle::pi_over(3),
        ),
        entry(
            "quadrangle-e8-boundary",
            Boundary,
            "E8",
            "",
            &[2, 3, 4, 5, 6, 7],
            Angle::pi_over(3),
        ),
    ]);
    out
}
