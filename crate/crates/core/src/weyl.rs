//! Weyl group computations on a realization.
//!
//! Orbits are enumerated in fundamental-weight coordinates, where every
//! simple reflection acts by an integer matrix (a row of the Cartan matrix).
//! Inputs with rational weight coordinates are scaled by a common
//! denominator first, so the search itself only touches small integers.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::{CoxeterDiagram, Permutation};
use crate::error::{Error, Result};
use crate::geometry::{realize, Realization, Vector};
use crate::linalg::Matrix;
use crate::{Node, Q};

/// Default cap on the number of vectors an orbit enumeration may produce.
pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

/// Cap used by [`element_order`].
pub const ORDER_BUDGET: u32 = 1000;

/// Element of W in the ambient orthogonal representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalElement {
    matrix: Matrix,
    /// Simple reflections whose left-to-right product is `matrix`.
    word: Option<Vec<Node>>,
}

impl OrthogonalElement {
    pub fn identity(dim: usize) -> Self {
        OrthogonalElement {
            matrix: Matrix::identity(dim),
            word: Some(Vec::new()),
        }
    }

    pub fn from_matrix(matrix: Matrix) -> Self {
        OrthogonalElement { matrix, word: None }
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections.
    pub fn from_word(r: &Realization, word: &[Node]) -> Result<Self> {
        let mut matrix = Matrix::identity(r.ambient_dim());
        for &i in word {
            matrix = &matrix * &r.reflection_matrix(i)?;
        }
        Ok(OrthogonalElement {
            matrix,
            word: Some(word.to_vec()),
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn word(&self) -> Option<&[Node]> {
        self.word.as_deref()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    /// `self · other`.
    pub fn compose(&self, other: &OrthogonalElement) -> OrthogonalElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        OrthogonalElement {
            matrix: &self.matrix * &other.matrix,
            word,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `MᵀM = 1`, checked exactly.
    pub fn is_orthogonal(&self) -> bool {
        (&self.matrix.transpose() * &self.matrix).is_identity()
    }
}

/// Orbit `W·v`, sorted. `v` must lie in the span of the simple roots.
pub fn weyl_orbit(r: &Realization, v: &Vector, budget: usize) -> Result<Vec<Vector>> {
    let coords = r.weight_coordinates(v)?;
    let denom = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<i64> = coords
        .iter()
        .map(|c| (c * Q::from_integer(denom.clone())).to_integer().to_i64())
        .collect::<Option<_>>()
        .ok_or(Error::Overflow)?;
    let orbit = dynkin_orbit(r.cartan(), &scaled, budget)?;
    let denom = Q::from_integer(denom);
    let mut out: Vec<Vector> = orbit
        .into_iter()
        .map(|labels| {
            let coords: Vec<Q> = labels
                .iter()
                .map(|&x| Q::from_integer(x.into()) / &denom)
                .collect();
            r.from_weight_coordinates(&coords)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Size of the orbit `W·ω_node`, without materializing ambient vectors.
pub fn fundamental_orbit_size(r: &Realization, node: Node, budget: usize) -> Result<usize> {
    let p = r.diagram().index_of(node).ok_or(Error::UnknownNode(node))?;
    let mut start = vec![0i64; r.cartan().len()];
    start[p] = 1;
    Ok(dynkin_orbit(r.cartan(), &start, budget)?.len())
}

/// Orbit of an integral point given in fundamental-weight coordinates, by
/// breadth-first closure under the simple reflections. Order of the result
/// is the discovery order, which is deterministic.
pub(crate) fn dynkin_orbit(
    cartan: &[Vec<i64>],
    start: &[i64],
    budget: usize,
) -> Result<Vec<Vec<i64>>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = vec![start.to_vec()];
    seen.insert(start.to_vec());
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        head += 1;
        for (i, row) in cartan.iter().enumerate() {
            let k = current[i];
            if k == 0 {
                continue;
            }
            let next = reflect_labels(&current, k, row)?;
            if !seen.contains(&next) {
                if out.len() >= budget {
                    return Err(Error::OrbitBudgetExceeded(budget));
                }
                seen.insert(next.clone());
                out.push(next);
            }
        }
    }
    Ok(out)
}

fn reflect_labels(labels: &[i64], k: i64, cartan_row: &[i64]) -> Result<Vec<i64>> {
    labels
        .iter()
        .zip(cartan_row)
        .map(|(&x, &a)| k.checked_mul(a).and_then(|ka| x.checked_sub(ka)))
        .collect::<Option<_>>()
        .ok_or(Error::Overflow)
}

/// Reduced word (as indices into the Cartan matrix) of the longest element
/// of the parabolic subgroup on `subset`, by greedy descent from the sum of
/// the corresponding fundamental weights. The word is returned in
/// application order.
pub(crate) fn greedy_longest_word(cartan: &[Vec<i64>], subset: &[usize]) -> Vec<usize> {
    let n = cartan.len();
    let mut labels = vec![0i64; n];
    for &i in subset {
        labels[i] = 1;
    }
    let mut word = Vec::new();
    while let Some(&i) = subset.iter().find(|&&i| labels[i] > 0) {
        let k = labels[i];
        for (j, x) in labels.iter_mut().enumerate() {
            *x -= k * cartan[i][j];
        }
        word.push(i);
    }
    word
}

/// Order of W(d), from the classical formulas per component.
pub fn group_order(d: &CoxeterDiagram) -> BigUint {
    d.component_types()
        .iter()
        .fold(BigUint::one(), |acc, c| acc * c.kind.group_order())
}

/// Longest element w_0, found by greedy descent from ρ.
pub fn longest_element(r: &Realization) -> OrthogonalElement {
    let all: Vec<Node> = r.diagram().nodes().to_vec();
    parabolic_longest_element(r, &all).expect("nodes come from the realization")
}

/// Longest element of the standard parabolic subgroup on `subset`, in the
/// ambient representation of `r`.
pub fn parabolic_longest_element(r: &Realization, subset: &[Node]) -> Result<OrthogonalElement> {
    let nodes = r.diagram().nodes();
    let indices: Vec<usize> = subset
        .iter()
        .map(|&n| r.diagram().index_of(n).ok_or(Error::UnknownNode(n)))
        .collect::<Result<_>>()?;
    let applied = greedy_longest_word(r.cartan(), &indices);
    // w = s_last ... s_first; as a left-to-right product the word is reversed
    let word: Vec<Node> = applied.iter().rev().map(|&i| nodes[i]).collect();
    OrthogonalElement::from_word(r, &word)
}

/// Opposition involution σ of `d`: `w_0(α_i) = -α_σ(i)`.
///
/// Crystallographic components are handled through their realization. For
/// the remaining types −1 ∈ W except for I2(m) with m odd, where σ swaps the
/// two nodes.
pub fn opposition(d: &CoxeterDiagram) -> Result<Permutation> {
    let mut pairs = Vec::new();
    for c in d.component_types() {
        if c.kind.is_crystallographic() {
            let sub = d.restrict(c.positions.iter().copied())?;
            let r = realize(&sub)?;
            let w0 = longest_element(&r);
            for (&i, alpha) in r.simple_roots() {
                let image = w0.apply(alpha).neg();
                let j = r
                    .simple_roots()
                    .iter()
                    .find(|(_, beta)| **beta == image)
                    .map(|(&j, _)| j)
                    .expect("w0 permutes the negated simple roots");
                pairs.push((i, j));
            }
        } else if let crate::diagram::CartanType::I2(m) = c.kind {
            if m % 2 == 1 {
                let (a, b) = (c.positions[0], c.positions[1]);
                pairs.extend([(a, b), (b, a)]);
            }
        }
    }
    Permutation::from_pairs(pairs)
}

/// Least `k >= 1` with `g^k = 1`.
pub fn element_order(g: &OrthogonalElement) -> Result<u32> {
    let mut power = g.matrix.clone();
    for k in 1..=ORDER_BUDGET {
        if power.is_identity() {
            return Ok(k);
        }
        power = &power * &g.matrix;
    }
    Err(Error::OrderBudgetExceeded(ORDER_BUDGET))
}

/// True when `g` maps every positive root to a negative one. Positive roots
/// are those with nonnegative coefficients on the simple roots.
pub fn reverses_positive_roots(r: &Realization, g: &OrthogonalElement) -> bool {
    positive_roots(r)
        .iter()
        .all(|beta| !is_positive(r, &g.apply(beta)))
}

/// All positive roots, by closure of the simple roots under reflection.
pub fn positive_roots(r: &Realization) -> Vec<Vector> {
    let mut roots: BTreeSet<Vector> = r.simple_roots().values().cloned().collect();
    let mut frontier: Vec<Vector> = roots.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for &i in r.diagram().nodes() {
            let w = r.reflect(i, &v).expect("node of the realization");
            if roots.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    roots.into_iter().filter(|v| is_positive(r, v)).collect()
}

fn is_positive(r: &Realization, v: &Vector) -> bool {
    let coeffs = root_coefficients(r, v);
    coeffs.iter().all(|c| !c.is_negative()) && coeffs.iter().any(|c| !c.is_zero())
}

pub(crate) fn root_coefficients(r: &Realization, v: &Vector) -> Vec<Q> {
    // <omega_k, alpha_j^vee> = delta, so the alpha_k coefficient of v is
    // <v, omega_k> scaled by 2/|alpha_k|^2.
    let two = Q::from_integer(2.into());
    r.diagram()
        .nodes()
        .iter()
        .map(|k| {
            let alpha = r.simple_root(*k).unwrap();
            v.dot(r.fundamental_weight(*k).unwrap()) * &two / alpha.norm_squared()
        })
        .collect()
}
