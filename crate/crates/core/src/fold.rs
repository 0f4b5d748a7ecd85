//! Folding a diagram by a group of diagram automorphisms.
//!
//! The centralizer W_Γ of Γ in W is a Coxeter group generated by the
//! longest elements w_J of the parabolics on the Γ-orbits J. The folded
//! label between orbits J and K is the order of w_J w_K.
//!
//! W is the direct product of its components, so that order is the lcm of
//! the orders of the component parts. Per component C the part is computed
//! from `J ∩ C` and `K ∩ C`: an empty side contributes an involution or the
//! identity, two singletons give the original label, and anything else is
//! measured by matrix iteration in the realization of C. The last case only
//! arises for A, D and E6 components, because the other types have no
//! nontrivial automorphism that moves more than a rank-two pair.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::Integer;

use crate::diagram::{AutGroup, CoxeterDiagram};
use crate::error::Result;
use crate::geometry::{realize, Realization};
use crate::tits::{ensure_valid, TitsDiagram};
use crate::weyl::{element_order, parabolic_longest_element, OrthogonalElement};
use crate::Node;

#[derive(Clone, Debug)]
pub struct FoldResult {
    /// One node per Γ-orbit, labelled by the orbit's smallest member.
    pub folded: CoxeterDiagram,
    /// Original node to folded node.
    pub node_map: BTreeMap<Node, Node>,
    /// Folded node to the orbit it stands for.
    pub orbits: BTreeMap<Node, BTreeSet<Node>>,
    /// w_J for each folded node, in the realization of the input diagram.
    /// `None` when the input has a non-crystallographic component.
    pub generators: Option<BTreeMap<Node, OrthogonalElement>>,
}

impl FoldResult {
    /// Orbit of original nodes behind a folded node.
    pub fn preimage(&self, folded_node: Node) -> Option<&BTreeSet<Node>> {
        self.orbits.get(&folded_node)
    }
}

/// Folded diagram `M_Γ` with its node map and canonical generators.
pub fn fold(d: &CoxeterDiagram, g: &AutGroup) -> Result<FoldResult> {
    let orbits = d.orbits(g)?;
    let labels: Vec<Node> = orbits
        .iter()
        .map(|o| *o.first().expect("orbits are nonempty"))
        .collect();

    let mut realizations = HashMap::new();
    let mut entries = Vec::new();
    for a in 0..orbits.len() {
        for b in a + 1..orbits.len() {
            let m = orbit_label(d, &orbits[a], &orbits[b], &mut realizations)?;
            if m != 2 {
                entries.push((labels[a], labels[b], m));
            }
        }
    }
    let folded = CoxeterDiagram::new(labels.iter().copied(), entries)?;

    let node_map = orbits
        .iter()
        .zip(&labels)
        .flat_map(|(o, &l)| o.iter().map(move |&n| (n, l)))
        .collect();

    let generators = if d.is_crystallographic() {
        let r = realize(d)?;
        let mut map = BTreeMap::new();
        for (o, &l) in orbits.iter().zip(&labels) {
            let subset: Vec<Node> = o.iter().copied().collect();
            map.insert(l, parabolic_longest_element(&r, &subset)?);
        }
        Some(map)
    } else {
        None
    };

    Ok(FoldResult {
        folded,
        node_map,
        orbits: labels.into_iter().zip(orbits).collect(),
        generators,
    })
}

/// Folds a valid Tits diagram and pushes the anisotropic kernel forward.
pub fn fold_tits(t: &TitsDiagram) -> Result<(FoldResult, BTreeSet<Node>)> {
    ensure_valid(t)?;
    let result = fold(t.diagram(), t.gamma())?;
    let kernel = t.anisotropic().iter().map(|n| result.node_map[n]).collect();
    Ok((result, kernel))
}

fn orbit_label(
    d: &CoxeterDiagram,
    j: &BTreeSet<Node>,
    k: &BTreeSet<Node>,
    realizations: &mut HashMap<usize, Realization>,
) -> Result<u32> {
    let mut order = 1u32;
    for (index, c) in d.component_types().iter().enumerate() {
        let jc: Vec<Node> = c
            .positions
            .iter()
            .copied()
            .filter(|n| j.contains(n))
            .collect();
        let kc: Vec<Node> = c
            .positions
            .iter()
            .copied()
            .filter(|n| k.contains(n))
            .collect();
        let part = match (jc.len(), kc.len()) {
            (0, 0) => 1,
            (0, _) | (_, 0) => 2,
            (1, 1) => d.m(jc[0], kc[0]),
            _ => {
                let r = match realizations.entry(index) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => {
                        e.insert(realize(&d.restrict(c.positions.iter().copied())?)?)
                    }
                };
                let wj = parabolic_longest_element(r, &jc)?;
                let wk = parabolic_longest_element(r, &kc)?;
                element_order(&wj.compose(&wk))?
            }
        };
        order = order.lcm(&part);
    }
    Ok(order)
}
