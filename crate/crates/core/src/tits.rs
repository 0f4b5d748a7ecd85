//! Tits diagrams and their minimal angles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::angle::{Angle, Verdict};
use crate::diagram::{AutGroup, CartanType, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::fold::fold_tits;
use crate::geometry::realize;
use crate::weyl::{dynkin_orbit, opposition, DEFAULT_ORBIT_BUDGET};
use crate::{Node, Q};

/// Resource limits for orbit enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub orbit_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_budget: DEFAULT_ORBIT_BUDGET,
        }
    }
}

/// A triple `(M, Γ, A)`. Construction only checks that the labels exist;
/// see [`validate`] for the structural conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TitsDiagram {
    diagram: CoxeterDiagram,
    gamma: AutGroup,
    anisotropic: BTreeSet<Node>,
}

impl TitsDiagram {
    pub fn new(
        diagram: CoxeterDiagram,
        gamma: AutGroup,
        anisotropic: impl IntoIterator<Item = Node>,
    ) -> Result<Self> {
        let anisotropic: BTreeSet<Node> = anisotropic.into_iter().collect();
        if let Some(&n) = anisotropic.iter().find(|n| !diagram.contains(**n)) {
            return Err(Error::UnknownNode(n));
        }
        Ok(TitsDiagram {
            diagram,
            gamma,
            anisotropic,
        })
    }

    /// Quasi-split diagram: empty anisotropic kernel.
    pub fn quasi_split(diagram: CoxeterDiagram, gamma: AutGroup) -> Self {
        TitsDiagram {
            diagram,
            gamma,
            anisotropic: BTreeSet::new(),
        }
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn gamma(&self) -> &AutGroup {
        &self.gamma
    }

    pub fn anisotropic(&self) -> &BTreeSet<Node> {
        &self.anisotropic
    }

    /// Γ-orbits not contained in the anisotropic kernel.
    pub fn isotropic_orbits(&self) -> Result<Vec<BTreeSet<Node>>> {
        Ok(self
            .diagram
            .orbits(&self.gamma)?
            .into_iter()
            .filter(|o| !o.is_subset(&self.anisotropic))
            .collect())
    }
}

impl fmt::Display for TitsDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.anisotropic.iter().map(|n| n.to_string()).collect();
        write!(
            f,
            "{} gamma {} anisotropic {{{}}}",
            self.diagram.type_name(),
            self.gamma,
            a.join(",")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    GammaNotAutomorphism,
    AnisotropicNotInvariant,
    OppositionViolated,
}

impl ViolationKind {
    pub fn code(&self) -> &'static str {
        match self {
            ViolationKind::GammaNotAutomorphism => "gamma_not_automorphism",
            ViolationKind::AnisotropicNotInvariant => "anisotropic_not_invariant",
            ViolationKind::OppositionViolated => "opposition_violated",
        }
    }
}

/// One failed validity clause. `nodes` is the offending orbit, or the
/// support of the offending permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub nodes: BTreeSet<Node>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.nodes.iter().map(|n| n.to_string()).collect();
        write!(
            f,
            "{} on {{{}}}: {}",
            self.kind.code(),
            nodes.join(","),
            self.detail
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three conditions on a Tits diagram. Violations are reported
/// as data.
pub fn validate(t: &TitsDiagram) -> ValidationReport {
    let mut violations = Vec::new();
    for p in t.gamma.generators() {
        if let Err(e) = t.diagram.check_automorphism(p) {
            violations.push(Violation {
                kind: ViolationKind::GammaNotAutomorphism,
                nodes: p.support().collect(),
                detail: e.to_string(),
            });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }

    let orbits = t.diagram.orbits(&t.gamma).expect("generators were checked");
    for orbit in &orbits {
        let inside = orbit.intersection(&t.anisotropic).count();
        if inside != 0 && inside != orbit.len() {
            violations.push(Violation {
                kind: ViolationKind::AnisotropicNotInvariant,
                nodes: orbit.clone(),
                detail: "orbit meets the anisotropic kernel without being contained in it"
                    .to_string(),
            });
        }
    }
    for orbit in orbits.iter().filter(|o| o.is_disjoint(&t.anisotropic)) {
        let sub = t
            .diagram
            .restrict(t.anisotropic.union(orbit).copied())
            .expect("subsets of a spherical diagram are spherical");
        let sigma = opposition(&sub).expect("opposition exists for every spherical diagram");
        let image: BTreeSet<Node> = orbit.iter().map(|&n| sigma.apply(n)).collect();
        if &image != orbit {
            violations.push(Violation {
                kind: ViolationKind::OppositionViolated,
                nodes: orbit.clone(),
                detail: format!("opposition {sigma} of the restricted diagram moves the orbit"),
            });
        }
    }
    ValidationReport { violations }
}

pub(crate) fn ensure_valid(t: &TitsDiagram) -> Result<()> {
    let report = validate(t);
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::InvalidTitsDiagram(report.violations))
    }
}

/// Number of isotropic Γ-orbits.
pub fn relative_rank(t: &TitsDiagram) -> Result<usize> {
    ensure_valid(t)?;
    Ok(t.isotropic_orbits()?.len())
}

/// The relative-rank-one diagrams obtained by keeping one isotropic node.
/// Requires trivial Γ; fold first otherwise.
pub fn rank_one_subdiagrams(t: &TitsDiagram) -> Result<Vec<TitsDiagram>> {
    ensure_valid(t)?;
    if !t.gamma.is_trivial() {
        return Err(Error::NontrivialGamma);
    }
    t.isotropic_orbits()?
        .into_iter()
        .map(|orbit| {
            let keep = t.anisotropic.union(&orbit).copied();
            Ok(TitsDiagram {
                diagram: t.diagram.restrict(keep)?,
                gamma: AutGroup::trivial(),
                anisotropic: t.anisotropic.clone(),
            })
        })
        .collect()
}

type AngleCache = Mutex<HashMap<(CartanType, usize), Angle>>;

fn angle_cache() -> &'static AngleCache {
    static CACHE: OnceLock<AngleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Minimal angle between distinct type-`i` vertices of the Coxeter complex.
pub fn angular_distance(d: &CoxeterDiagram, i: Node) -> Result<Angle> {
    angular_distance_with(d, i, Limits::default())
}

/// [`angular_distance`] with an explicit orbit budget.
pub fn angular_distance_with(d: &CoxeterDiagram, i: Node, limits: Limits) -> Result<Angle> {
    // W acts componentwise and ω_i lies in the span of its own component.
    let c = d.component_of(i).ok_or(Error::UnknownNode(i))?;
    match c.kind.rank() {
        1 => return Ok(Angle::pi()),
        2 => {
            let m = d.m(c.positions[0], c.positions[1]);
            return Angle::pi_fraction(2, m);
        }
        _ => {}
    }
    if !c.kind.is_crystallographic() {
        return Err(Error::NonCrystallographic(c.kind.to_string()));
    }
    let key = (
        c.kind,
        c.position_of(i).expect("node lies in its component"),
    );
    if let Some(a) = angle_cache().lock().expect("cache lock").get(&key) {
        return Ok(a.clone());
    }
    let angle = orbit_angle(key.0, key.1, limits.orbit_budget)?;
    angle_cache()
        .lock()
        .expect("cache lock")
        .insert(key, angle.clone());
    Ok(angle)
}

/// `max <ω, x> / <ω, ω>` over the orbit of ω = ω_position, x ≠ ω.
fn orbit_angle(kind: CartanType, position: usize, budget: usize) -> Result<Angle> {
    let d = CoxeterDiagram::standard(kind);
    let r = realize(&d)?;
    let p = position - 1;
    let omega = r.fundamental_weight(d.nodes()[p])?;
    let gram: Vec<Q> = d
        .nodes()
        .iter()
        .map(|&j| omega.dot(r.fundamental_weight(j).expect("node of d")))
        .collect();
    // integer pairing against Dynkin labels
    let denom = gram.iter().fold(BigInt::one(), |acc, g| acc.lcm(g.denom()));
    let pairing: Vec<i128> = gram
        .iter()
        .map(|g| {
            (g * Q::from_integer(denom.clone()))
                .to_integer()
                .to_i128()
                .ok_or(Error::Overflow)
        })
        .collect::<Result<_>>()?;

    let mut start = vec![0i64; d.rank()];
    start[p] = 1;
    let orbit = dynkin_orbit(r.cartan(), &start, budget)?;
    let best = orbit
        .iter()
        .filter(|x| **x != start)
        .map(|x| {
            x.iter()
                .zip(&pairing)
                .map(|(&a, &b)| a as i128 * b)
                .sum::<i128>()
        })
        .max()
        .expect("a fundamental weight is moved by its reflection");
    let cos = Q::new(BigInt::from(best), denom) / &gram[p];
    Angle::from_cos(cos)
}

/// Minimal angle with the isotropic orbits attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalAngle {
    pub angle: Angle,
    /// Isotropic Γ-orbits of the original diagram whose rank-one
    /// subdiagram attains the minimum.
    pub witnesses: Vec<BTreeSet<Node>>,
}

/// Minimal angle of a valid Tits diagram of positive relative rank.
pub fn minimal_angle(t: &TitsDiagram) -> Result<MinimalAngle> {
    minimal_angle_with(t, Limits::default())
}

pub fn minimal_angle_with(t: &TitsDiagram, limits: Limits) -> Result<MinimalAngle> {
    let (folded, kernel) = fold_tits(t)?;
    let mut best: Option<MinimalAngle> = None;
    for &i in folded.folded.nodes() {
        if kernel.contains(&i) {
            continue;
        }
        let sub = folded.folded.restrict(kernel.iter().copied().chain([i]))?;
        let angle = angular_distance_with(&sub, i, limits)?;
        let orbit = folded.orbits[&i].clone();
        match &mut best {
            Some(b) if b.angle == angle => b.witnesses.push(orbit),
            Some(b) if b.angle < angle => {}
            _ => {
                best = Some(MinimalAngle {
                    angle,
                    witnesses: vec![orbit],
                })
            }
        }
    }
    best.ok_or(Error::ZeroRelativeRank)
}

/// Exact position of the minimal angle relative to π/3.
pub fn admissibility(t: &TitsDiagram) -> Result<Verdict> {
    Ok(minimal_angle(t)?.angle.verdict())
}

/// A valid Tits index found by [`enumerate_indices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRow {
    pub tits: TitsDiagram,
    pub minimal: MinimalAngle,
    pub verdict: Verdict,
}

/// Largest number of candidate kernels [`enumerate_indices`] will try.
pub const MAX_CANDIDATES: u64 = 1 << 22;

/// Every Γ-invariant kernel `A` making `(d, g, A)` a valid Tits diagram of
/// positive relative rank, optionally of one fixed relative rank, sorted by
/// `A` as a node list. Validity is combinatorial only; it does not decide
/// whether an algebraic group with that index exists.
pub fn enumerate_indices(
    d: &CoxeterDiagram,
    g: &AutGroup,
    rel_rank: Option<usize>,
    limits: Limits,
) -> Result<Vec<IndexRow>> {
    let orbits = d.orbits(g)?;
    let n = orbits.len();
    let ranks: Vec<usize> = match rel_rank {
        Some(k) if k == 0 || k > n => Vec::new(),
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let candidates: u64 = ranks.iter().map(|&k| binomial(n as u64, k as u64)).sum();
    if candidates > MAX_CANDIDATES {
        return Err(Error::RankOutOfRange(format!(
            "{candidates} candidate kernels exceed the enumeration cap of {MAX_CANDIDATES}"
        )));
    }

    let mut rows = Vec::new();
    for k in ranks {
        for isotropic in combinations(n, k) {
            let anisotropic: BTreeSet<Node> = (0..n)
                .filter(|x| !isotropic.contains(x))
                .flat_map(|x| orbits[x].iter().copied())
                .collect();
            let t = TitsDiagram {
                diagram: d.clone(),
                gamma: g.clone(),
                anisotropic,
            };
            if !validate(&t).is_ok() {
                continue;
            }
            let minimal = minimal_angle_with(&t, limits)?;
            let verdict = minimal.angle.verdict();
            rows.push(IndexRow {
                tits: t,
                minimal,
                verdict,
            });
        }
    }
    rows.sort_by(|a, b| a.tits.anisotropic.iter().cmp(b.tits.anisotropic.iter()));
    Ok(rows)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Permutation;

    fn diagram(name: &str) -> CoxeterDiagram {
        CoxeterDiagram::builtin(name).unwrap()
    }

    fn tits(name: &str, cycles: &str, a: &[Node]) -> TitsDiagram {
        let g = if cycles.is_empty() {
            AutGroup::trivial()
        } else {
            AutGroup::new(vec![cycles.parse::<Permutation>().unwrap()])
        };
        TitsDiagram::new(diagram(name), g, a.iter().copied()).unwrap()
    }

    fn cos(n: i64, d: i64) -> Angle {
        Angle::from_cos(Q::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate(&tits("A3", "", &[1, 3])).is_ok());
        let report = validate(&tits("A3", "", &[2, 3]));
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].kind, ViolationKind::OppositionViolated);
        assert_eq!(report.violations[0].nodes, BTreeSet::from([1]));
        assert!(validate(&tits("E8", "", &[1, 2, 3, 4, 5, 6, 7, 8])).is_ok());
    }

    #[test]
    fn validation_reports_each_clause() {
        let bad_gamma = tits("B3", "(1 3)", &[]);
        assert_eq!(
            validate(&bad_gamma).violations[0].kind,
            ViolationKind::GammaNotAutomorphism
        );
        let not_invariant = tits("A5", "(1 5)(2 4)", &[1, 2, 4]);
        assert!(validate(&not_invariant)
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::AnisotropicNotInvariant
                && v.nodes == BTreeSet::from([1, 5])));
    }

    #[test]
    fn relative_ranks() {
        assert_eq!(relative_rank(&tits("A7", "", &[1, 3, 5, 7])).unwrap(), 3);
        assert_eq!(relative_rank(&tits("E7", "", &[])).unwrap(), 7);
        assert_eq!(
            relative_rank(&tits("A5", "(1 5)(2 4)", &[1, 2, 4, 5])).unwrap(),
            1
        );
        assert!(matches!(
            relative_rank(&tits("A3", "", &[2, 3])),
            Err(Error::InvalidTitsDiagram(_))
        ));
    }

    #[test]
    fn rank_one_subdiagram_examples() {
        let subs = rank_one_subdiagrams(&tits("E7", "", &[2, 3, 4, 5])).unwrap();
        let node_sets: Vec<Vec<Node>> = subs.iter().map(|s| s.diagram().nodes().to_vec()).collect();
        assert_eq!(
            node_sets,
            vec![
                vec![1, 2, 3, 4, 5],
                vec![2, 3, 4, 5, 6],
                vec![2, 3, 4, 5, 7]
            ]
        );
        for s in &subs {
            assert!(validate(s).is_ok());
        }
        let one = tits("E7", "", &[2, 3, 4, 5, 6, 7]);
        assert_eq!(rank_one_subdiagrams(&one).unwrap(), vec![one.clone()]);
        assert!(matches!(
            rank_one_subdiagrams(&tits("A3", "(1 3)", &[])),
            Err(Error::NontrivialGamma)
        ));
    }

    #[test]
    fn angular_distance_examples() {
        assert_eq!(angular_distance(&diagram("A1"), 1).unwrap(), Angle::pi());
        for m in 3..=12 {
            let d = diagram(&format!("I2({m})"));
            for i in [1, 2] {
                assert_eq!(
                    angular_distance(&d, i).unwrap(),
                    Angle::pi_fraction(2, m).unwrap()
                );
            }
        }
        assert_eq!(angular_distance(&diagram("A3"), 1).unwrap(), cos(-1, 3));
        assert_eq!(angular_distance(&diagram("A3"), 3).unwrap(), cos(-1, 3));
        assert_eq!(angular_distance(&diagram("A3"), 2).unwrap(), cos(0, 1));
        for n in 2..=8 {
            assert_eq!(
                angular_distance(&diagram(&format!("B{n}")), 1).unwrap(),
                cos(0, 1)
            );
        }
        assert_eq!(angular_distance(&diagram("A5"), 3).unwrap(), cos(1, 3));
        assert_eq!(angular_distance(&diagram("B3"), 3).unwrap(), cos(1, 3));
        assert_eq!(angular_distance(&diagram("E7"), 7).unwrap(), cos(1, 3));
        assert_eq!(angular_distance(&diagram("E7"), 1).unwrap(), cos(1, 2));
    }

    #[test]
    fn angular_distance_errors() {
        assert!(matches!(
            angular_distance(&diagram("H3"), 1),
            Err(Error::NonCrystallographic(_))
        ));
        assert!(matches!(
            angular_distance(&diagram("A3"), 9),
            Err(Error::UnknownNode(9))
        ));
        let d = diagram("A4+A1");
        assert_eq!(angular_distance(&d, 5).unwrap(), Angle::pi());
        assert_eq!(angular_distance(&diagram("H3+A1"), 4).unwrap(), Angle::pi());
    }

    #[test]
    fn orbit_budget_is_enforced() {
        let d = diagram("D7");
        let err = angular_distance_with(&d, 4, Limits { orbit_budget: 10 });
        assert!(matches!(err, Err(Error::OrbitBudgetExceeded(10))));
    }

    #[test]
    fn minimal_angle_examples() {
        let a7 = tits("A7", "", &[1, 3, 5, 7]);
        assert_eq!(minimal_angle(&a7).unwrap().angle, cos(0, 1));
        let a5 = tits("A5", "(1 5)(2 4)", &[1, 2, 4, 5]);
        let m = minimal_angle(&a5).unwrap();
        assert_eq!(m.angle, cos(1, 3));
        assert_eq!(m.witnesses, vec![BTreeSet::from([3])]);
        assert_eq!(admissibility(&a5).unwrap(), Verdict::GreaterThanPiOver3);
        let e7 = tits("E7", "", &[2, 3, 4, 5]);
        assert_eq!(minimal_angle(&e7).unwrap().angle, cos(0, 1));
        assert!(matches!(
            minimal_angle(&tits("A3", "", &[1, 2, 3])),
            Err(Error::ZeroRelativeRank)
        ));
    }

    #[test]
    fn ties_list_every_witness() {
        let m = minimal_angle(&tits("A7", "", &[1, 3, 5, 7])).unwrap();
        assert_eq!(
            m.witnesses,
            vec![
                BTreeSet::from([2]),
                BTreeSet::from([4]),
                BTreeSet::from([6])
            ]
        );
    }

    #[test]
    fn quasi_split_law() {
        for name in [
            "A1", "A4", "B3", "D4", "D5", "E6", "F4", "G2", "H3", "H4", "I2(7)", "A2+A2",
        ] {
            let d = diagram(name);
            for g in d.automorphisms().elements() {
                let t = TitsDiagram::quasi_split(d.clone(), AutGroup::new(vec![g]));
                assert_eq!(minimal_angle(&t).unwrap().angle, Angle::pi(), "{name}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let rows = enumerate_indices(
            &diagram("A3"),
            &AutGroup::trivial(),
            Some(1),
            Limits::default(),
        )
        .unwrap();
        let kernels: Vec<Vec<Node>> = rows
            .iter()
            .map(|r| r.tits.anisotropic().iter().copied().collect())
            .collect();
        assert!(kernels.contains(&vec![1, 3]));
        assert!(!kernels.contains(&vec![2, 3]));
        let row = rows
            .iter()
            .find(|r| r.tits.anisotropic() == &BTreeSet::from([1, 3]))
            .unwrap();
        assert_eq!(row.minimal.angle, cos(0, 1));

        let rows = enumerate_indices(
            &diagram("B2"),
            &AutGroup::trivial(),
            Some(1),
            Limits::default(),
        )
        .unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.minimal.angle == cos(0, 1)));
    }

    #[test]
    fn enumeration_rows_are_valid_and_sorted() {
        let d = diagram("D5");
        let rows = enumerate_indices(&d, &AutGroup::trivial(), None, Limits::default()).unwrap();
        for w in rows.windows(2) {
            assert!(w[0]
                .tits
                .anisotropic()
                .iter()
                .lt(w[1].tits.anisotropic().iter()));
        }
        for r in &rows {
            assert!(validate(&r.tits).is_ok());
            assert_eq!(minimal_angle(&r.tits).unwrap(), r.minimal);
        }
        assert_eq!(
            rows.iter()
                .filter(|r| r.tits.anisotropic().is_empty())
                .count(),
            1
        );
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(8, 2), 28);
    }
}
