//! Exact realizations of crystallographic Coxeter diagrams as reflection
//! groups, in Bourbaki ambient coordinates.
//!
//! Each component gets its own block of coordinates: A_n uses `n + 1`,
//! B_n and D_n use `n`, E_6, E_7 and E_8 all use 8, F_4 uses 4 and G_2
//! uses 3. Fundamental weights are solved from the Cartan matrix, so they
//! always lie in the span of the simple roots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::{CartanType, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::{Node, Q};

/// Vector with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Q>);

impl Vector {
    pub fn new(coords: Vec<Q>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_fractions(coords: &[(i64, i64)]) -> Self {
        Vector(
            coords
                .iter()
                .map(|&(n, d)| Q::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> Q {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, k: &Q) -> Vector {
        Vector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// True when every coordinate is at least zero.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", cells.join(", "))
    }
}

/// Root-system data for a crystallographic diagram.
#[derive(Clone, Debug)]
pub struct Realization {
    diagram: CoxeterDiagram,
    ambient_dim: usize,
    simple_roots: BTreeMap<Node, Vector>,
    coroots: BTreeMap<Node, Vector>,
    weights: BTreeMap<Node, Vector>,
    // cartan[i][j] = <alpha_i, alpha_j^vee>, indexed like diagram.nodes()
    cartan: Vec<Vec<i64>>,
}

/// Realizes `d` in Bourbaki coordinates. Every component must be
/// crystallographic.
pub fn realize(d: &CoxeterDiagram) -> Result<Realization> {
    Realization::new(d)
}

impl Realization {
    pub fn new(d: &CoxeterDiagram) -> Result<Self> {
        if let Some(c) = d
            .component_types()
            .iter()
            .find(|c| !c.kind.is_crystallographic())
        {
            return Err(Error::NonCrystallographic(c.kind.to_string()));
        }
        let blocks: Vec<(usize, Vec<Vector>)> = d
            .component_types()
            .iter()
            .map(|c| bourbaki_roots(c.kind))
            .collect();
        let ambient_dim = blocks.iter().map(|(dim, _)| dim).sum();

        let mut simple_roots = BTreeMap::new();
        let mut offset = 0;
        for (c, (dim, roots)) in d.component_types().iter().zip(&blocks) {
            for (node, root) in c.positions.iter().zip(roots) {
                let mut coords = vec![Q::zero(); ambient_dim];
                coords[offset..offset + dim].clone_from_slice(root.coords());
                simple_roots.insert(*node, Vector::new(coords));
            }
            offset += dim;
        }

        let two = Q::from_integer(2.into());
        let coroots: BTreeMap<Node, Vector> = simple_roots
            .iter()
            .map(|(&n, a)| (n, a.scale(&(&two / a.norm_squared()))))
            .collect();

        let nodes = d.nodes();
        let cartan_q: Vec<Vec<Q>> = nodes
            .iter()
            .map(|i| {
                nodes
                    .iter()
                    .map(|j| simple_roots[i].dot(&coroots[j]))
                    .collect()
            })
            .collect();
        let cartan = cartan_q
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        debug_assert!(x.is_integer());
                        x.to_integer().to_i64().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();

        // omega_i = sum_k (A^-1)_{ik} alpha_k
        let inverse = Matrix::from_rows(cartan_q)
            .inverse()
            .expect("Cartan matrices of finite type are invertible");
        let weights = nodes
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let w = nodes
                    .iter()
                    .enumerate()
                    .fold(Vector::zero(ambient_dim), |acc, (k, m)| {
                        acc.add(&simple_roots[m].scale(inverse.get(i, k)))
                    });
                (n, w)
            })
            .collect();

        Ok(Realization {
            diagram: d.clone(),
            ambient_dim,
            simple_roots,
            coroots,
            weights,
            cartan,
        })
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_root(&self, i: Node) -> Result<&Vector> {
        self.simple_roots.get(&i).ok_or(Error::UnknownNode(i))
    }

    pub fn coroot(&self, i: Node) -> Result<&Vector> {
        self.coroots.get(&i).ok_or(Error::UnknownNode(i))
    }

    pub fn fundamental_weight(&self, i: Node) -> Result<&Vector> {
        self.weights.get(&i).ok_or(Error::UnknownNode(i))
    }

    pub fn simple_roots(&self) -> &BTreeMap<Node, Vector> {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &BTreeMap<Node, Vector> {
        &self.weights
    }

    /// Cartan matrix `<alpha_i, alpha_j^vee>` indexed like `diagram().nodes()`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Sum of the fundamental weights.
    pub fn rho(&self) -> Vector {
        self.weights
            .values()
            .fold(Vector::zero(self.ambient_dim), |acc, w| acc.add(w))
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Euclidean inner product in the ambient space.
    pub fn inner(&self, u: &Vector, v: &Vector) -> Result<Q> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(u.dot(v))
    }

    /// `s_i(v) = v - <v, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: Node, v: &Vector) -> Result<Vector> {
        self.check_dim(v)?;
        let alpha = self.simple_root(i)?;
        let k = v.dot(self.coroot(i)?);
        Ok(v.sub(&alpha.scale(&k)))
    }

    /// Matrix of `s_i` in the ambient basis.
    pub fn reflection_matrix(&self, i: Node) -> Result<Matrix> {
        let alpha = self.simple_root(i)?;
        let coroot = self.coroot(i)?;
        let mut m = Matrix::identity(self.ambient_dim);
        for a in 0..self.ambient_dim {
            for b in 0..self.ambient_dim {
                let x = &alpha.coords()[a] * &coroot.coords()[b];
                if !x.is_zero() {
                    let y = m.get(a, b) - x;
                    m.set(a, b, y);
                }
            }
        }
        Ok(m)
    }

    /// Coordinates `<v, alpha_j^vee>` in the fundamental-weight basis,
    /// ordered like `diagram().nodes()`. Fails when `v` is outside the span
    /// of the simple roots.
    pub fn weight_coordinates(&self, v: &Vector) -> Result<Vec<Q>> {
        self.check_dim(v)?;
        let coords: Vec<Q> = self
            .diagram
            .nodes()
            .iter()
            .map(|j| v.dot(&self.coroots[j]))
            .collect();
        if self.from_weight_coordinates(&coords) != *v {
            return Err(Error::NotInRootSpan);
        }
        Ok(coords)
    }

    pub fn from_weight_coordinates(&self, coords: &[Q]) -> Vector {
        self.diagram
            .nodes()
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(Vector::zero(self.ambient_dim), |acc, (n, c)| {
                acc.add(&self.weights[n].scale(c))
            })
    }
}

/// Ambient dimension and simple roots (Bourbaki order) of one type.
fn bourbaki_roots(kind: CartanType) -> (usize, Vec<Vector>) {
    let unit = |dim: usize, i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v[j] = -1;
        v
    };
    let ints = |rows: Vec<Vec<i64>>| rows.iter().map(|r| Vector::from_ints(r)).collect();
    match kind {
        CartanType::A(n) => {
            let n = n as usize;
            (n + 1, ints((0..n).map(|i| diff(n + 1, i, i + 1)).collect()))
        }
        CartanType::B(n) => {
            let n = n as usize;
            let mut rows: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            rows.push(unit(n, n - 1));
            (n, ints(rows))
        }
        CartanType::D(n) => {
            let n = n as usize;
            let mut rows: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            rows.push(last);
            (n, ints(rows))
        }
        CartanType::E(n) => {
            let h = (1, 2);
            let mh = (-1, 2);
            let mut roots = vec![Vector::from_fractions(&[h, mh, mh, mh, mh, mh, mh, h])];
            roots.push(Vector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]));
            for k in 3..=n as usize {
                // alpha_k = e_{k-1} - e_{k-2}
                roots.push(Vector::from_ints(&diff(8, k - 2, k - 3)));
            }
            (8, roots)
        }
        CartanType::F4 => {
            let roots = vec![
                Vector::from_ints(&[0, 1, -1, 0]),
                Vector::from_ints(&[0, 0, 1, -1]),
                Vector::from_ints(&[0, 0, 0, 1]),
                Vector::from_fractions(&[(1, 2), (-1, 2), (-1, 2), (-1, 2)]),
            ];
            (4, roots)
        }
        CartanType::G2 => (
            3,
            vec![
                Vector::from_ints(&[1, -1, 0]),
                Vector::from_ints(&[-2, 1, 1]),
            ],
        ),
        CartanType::H(_) | CartanType::I2(_) => unreachable!("checked by caller"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use std::collections::BTreeSet;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn builtin(name: &str) -> Realization {
        realize(&CoxeterDiagram::builtin(name).unwrap()).unwrap()
    }

    const CRYSTALLOGRAPHIC: &[&str] = &[
        "A1", "A2", "A3", "A4", "A5", "A7", "B2", "B3", "B4", "B6", "B8", "D4", "D5", "D6", "D8",
        "E6", "E7", "E8", "F4", "G2", "A2+B3", "A1+A1",
    ];

    #[test]
    fn a3_first_weight() {
        let r = builtin("A3");
        assert_eq!(
            r.fundamental_weight(1).unwrap(),
            &Vector::from_fractions(&[(3, 4), (-1, 4), (-1, 4), (-1, 4)])
        );
    }

    #[test]
    fn b3_weights() {
        let r = builtin("B3");
        assert_eq!(
            r.fundamental_weight(1).unwrap(),
            &Vector::from_ints(&[1, 0, 0])
        );
        assert_eq!(
            r.fundamental_weight(3).unwrap(),
            &Vector::from_fractions(&[(1, 2), (1, 2), (1, 2)])
        );
    }

    #[test]
    fn non_crystallographic_rejected() {
        let d = CoxeterDiagram::builtin("I2(5)").unwrap();
        assert!(matches!(realize(&d), Err(Error::NonCrystallographic(_))));
        let d = CoxeterDiagram::builtin("H3").unwrap();
        assert!(matches!(realize(&d), Err(Error::NonCrystallographic(_))));
    }

    #[test]
    fn inner_examples() {
        let r = builtin("B3");
        let e1 = Vector::from_ints(&[1, 0, 0]);
        let e2 = Vector::from_ints(&[0, 1, 0]);
        assert_eq!(r.inner(&e1, &e2).unwrap(), q(0, 1));
        let a = Vector::from_fractions(&[(1, 2), (1, 2), (1, 2)]);
        let b = Vector::from_fractions(&[(1, 2), (1, 2), (-1, 2)]);
        assert_eq!(r.inner(&a, &b).unwrap(), q(1, 4));

        let e7 = builtin("E7");
        let u = Vector::from_ints(&[2, 0, 0, 0, 0, 0, 1, -1]);
        let v = Vector::from_ints(&[1, 1, 1, 1, 1, 1, 0, 0]);
        assert_eq!(e7.inner(&u, &v).unwrap(), q(2, 1));
        assert_eq!(
            e7.inner(&u, &e1),
            Err(Error::DimensionMismatch {
                expected: 8,
                found: 3
            })
        );
    }

    #[test]
    fn reflect_examples() {
        let r = builtin("A2");
        let a1 = r.simple_root(1).unwrap().clone();
        assert_eq!(r.reflect(1, &a1).unwrap(), a1.neg());
        let w1 = r.fundamental_weight(1).unwrap().clone();
        assert_eq!(r.reflect(1, &w1).unwrap(), w1.sub(&a1));

        let b3 = builtin("B3");
        let v = Vector::from_fractions(&[(1, 2), (1, 2), (1, 2)]);
        assert_eq!(
            b3.reflect(3, &v).unwrap(),
            Vector::from_fractions(&[(1, 2), (1, 2), (-1, 2)])
        );
        assert_eq!(b3.reflect(4, &v), Err(Error::UnknownNode(4)));
    }

    #[test]
    fn weight_duality() {
        for name in CRYSTALLOGRAPHIC {
            let r = builtin(name);
            for (&i, w) in r.fundamental_weights() {
                for (&j, c) in &r.coroots {
                    let expected = if i == j { q(1, 1) } else { q(0, 1) };
                    assert_eq!(w.dot(c), expected, "{name}: <w{i}, a{j}^>");
                }
                // in the root span
                assert!(r.weight_coordinates(w).is_ok());
            }
        }
    }

    #[test]
    fn gram_matches_coxeter_matrix() {
        for name in CRYSTALLOGRAPHIC {
            let r = builtin(name);
            let d = r.diagram();
            for &i in d.nodes() {
                for &j in d.nodes() {
                    if i == j {
                        continue;
                    }
                    let ai = r.simple_root(i).unwrap();
                    let aj = r.simple_root(j).unwrap();
                    let lhs = q(4, 1) * ai.dot(aj) * ai.dot(aj);
                    // (2 cos(pi/m))^2
                    let c = match d.m(i, j) {
                        2 => 0,
                        3 => 1,
                        4 => 2,
                        6 => 3,
                        m => panic!("unexpected label {m}"),
                    };
                    let rhs = ai.norm_squared() * aj.norm_squared() * q(c, 1);
                    assert_eq!(lhs, rhs, "{name}: ({i},{j})");
                    assert!(!ai.dot(aj).is_positive(), "obtuse simple roots");
                }
            }
        }
    }

    #[test]
    fn root_counts() {
        let expected = [
            ("A1", 2),
            ("A3", 12),
            ("A5", 30),
            ("B2", 8),
            ("B3", 18),
            ("B5", 50),
            ("D4", 24),
            ("D6", 60),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
            ("F4", 48),
            ("G2", 12),
        ];
        for (name, count) in expected {
            let r = builtin(name);
            let mut roots: BTreeSet<Vector> = r.simple_roots().values().cloned().collect();
            let mut frontier: Vec<Vector> = roots.iter().cloned().collect();
            while let Some(v) = frontier.pop() {
                for &i in r.diagram().nodes() {
                    let w = r.reflect(i, &v).unwrap();
                    if roots.insert(w.clone()) {
                        frontier.push(w);
                    }
                }
            }
            assert_eq!(roots.len(), count, "{name}");
        }
    }

    #[test]
    fn relabelled_diagram_uses_its_own_positions() {
        // B3 drawn backwards: node 1 is the short end
        let d = CoxeterDiagram::new([1, 2, 3], [(1, 2, 4), (2, 3, 3)]).unwrap();
        let r = realize(&d).unwrap();
        assert_eq!(r.simple_root(1).unwrap(), &Vector::from_ints(&[0, 0, 1]));
        assert_eq!(
            r.fundamental_weight(3).unwrap(),
            &Vector::from_ints(&[1, 0, 0])
        );
    }

    #[test]
    fn outside_root_span_is_rejected() {
        let r = builtin("A2");
        let v = Vector::from_ints(&[1, 1, 1]);
        assert_eq!(r.weight_coordinates(&v), Err(Error::NotInRootSpan));
    }

    proptest::proptest! {
        #[test]
        fn reflections_are_involutions(
            coords in proptest::collection::vec((-20i64..20, 1i64..7), 8),
            node in 1u32..=8,
        ) {
            let r = builtin("E8");
            let v = Vector::from_fractions(&coords);
            let once = r.reflect(node, &v).unwrap();
            proptest::prop_assert_eq!(r.reflect(node, &once).unwrap(), v.clone());
            // isometry
            proptest::prop_assert_eq!(once.norm_squared(), v.norm_squared());
        }

        #[test]
        fn reflection_matrix_agrees_with_reflect(
            coords in proptest::collection::vec((-9i64..9, 1i64..5), 4),
            node in 1u32..=4,
        ) {
            let r = builtin("F4");
            let v = Vector::from_fractions(&coords);
            let m = r.reflection_matrix(node).unwrap();
            proptest::prop_assert_eq!(m.apply(&v), r.reflect(node, &v).unwrap());
        }
    }
}
