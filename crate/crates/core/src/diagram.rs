//! Coxeter diagrams of finite type, builtin families and diagram
//! automorphisms.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::Node;

/// Largest rank accepted for a single builtin summand.
pub const MAX_BUILTIN_RANK: u32 = 64;

/// Finite irreducible Coxeter type.
///
/// `B` stands for both B_n and C_n, which share a Coxeter diagram. Rank-two
/// types are normalized: label 3 is `A(2)`, 4 is `B(2)`, 6 is `G2`, anything
/// else is `I2(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(u32),
    B(u32),
    D(u32),
    E(u32),
    F4,
    G2,
    H(u32),
    I2(u32),
}

impl CartanType {
    pub fn rank(&self) -> u32 {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::D(n) => n,
            CartanType::E(n) | CartanType::H(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 | CartanType::I2(_) => 2,
        }
    }

    /// Rank-two type with edge label `m`.
    pub fn dihedral(m: u32) -> CartanType {
        match m {
            3 => CartanType::A(2),
            4 => CartanType::B(2),
            6 => CartanType::G2,
            m => CartanType::I2(m),
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self, CartanType::H(_) | CartanType::I2(_))
    }

    /// Edges `(p, q, m)` between Bourbaki positions `1..=rank` with `m >= 3`.
    pub fn standard_edges(&self) -> Vec<(u32, u32, u32)> {
        let path = |n: u32| (1..n).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
        match *self {
            CartanType::A(n) => path(n),
            CartanType::B(n) => {
                let mut e = path(n);
                if let Some(last) = e.last_mut() {
                    last.2 = 4;
                }
                e
            }
            CartanType::D(n) => {
                let mut e = path(n - 1);
                e.push((n - 2, n, 3));
                e
            }
            CartanType::E(n) => {
                let mut e = vec![(1, 3, 3), (2, 4, 3)];
                e.extend((3..n).map(|i| (i, i + 1, 3)));
                e
            }
            CartanType::F4 => vec![(1, 2, 3), (2, 3, 4), (3, 4, 3)],
            CartanType::G2 => vec![(1, 2, 6)],
            CartanType::H(n) => {
                let mut e = path(n);
                e[0].2 = 5;
                e
            }
            CartanType::I2(m) if m >= 3 => vec![(1, 2, m)],
            CartanType::I2(_) => vec![],
        }
    }

    /// Order of the Coxeter group.
    pub fn group_order(&self) -> BigUint {
        let fact = |n: u32| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
        match *self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) => (BigUint::one() << n) * fact(n),
            CartanType::D(n) => (BigUint::one() << (n - 1)) * fact(n),
            CartanType::E(6) => BigUint::from(51_840u32),
            CartanType::E(7) => BigUint::from(2_903_040u32),
            CartanType::E(_) => BigUint::from(696_729_600u32),
            CartanType::F4 => BigUint::from(1_152u32),
            CartanType::G2 => BigUint::from(12u32),
            CartanType::H(3) => BigUint::from(120u32),
            CartanType::H(_) => BigUint::from(14_400u32),
            CartanType::I2(m) => BigUint::from(2 * m),
        }
    }

    /// Number of reflections, which is also the length of the longest element.
    pub fn reflection_count(&self) -> u32 {
        match *self {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::B(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::E(6) => 36,
            CartanType::E(7) => 63,
            CartanType::E(_) => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
            CartanType::H(3) => 15,
            CartanType::H(_) => 60,
            CartanType::I2(m) => m,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::H(n) => write!(f, "H{n}"),
            CartanType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A connected component together with an isomorphism to its standard
/// diagram: `positions[k]` is the node sitting at Bourbaki position `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentType {
    pub kind: CartanType,
    pub positions: Vec<Node>,
}

impl ComponentType {
    /// 1-based Bourbaki position of `node`.
    pub fn position_of(&self, node: Node) -> Option<usize> {
        self.positions
            .iter()
            .position(|&n| n == node)
            .map(|p| p + 1)
    }
}

/// Spherical Coxeter diagram over an arbitrary set of positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    nodes: Vec<Node>,
    // (i, j) with i < j and m >= 3; every other off-diagonal entry is 2.
    edges: BTreeMap<(Node, Node), u32>,
    components: Vec<ComponentType>,
}

impl CoxeterDiagram {
    /// Builds and validates a diagram. Unlisted off-diagonal pairs get `m = 2`.
    pub fn new(
        nodes: impl IntoIterator<Item = Node>,
        entries: impl IntoIterator<Item = (Node, Node, u32)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for n in nodes {
            if n == 0 {
                return Err(Error::InvalidLabel(n));
            }
            if !set.insert(n) {
                return Err(Error::DuplicateLabel(n));
            }
        }
        let mut edges = BTreeMap::new();
        for (i, j, m) in entries {
            if i == j || m < 2 {
                return Err(Error::InvalidEntry { i, j, m });
            }
            for n in [i, j] {
                if !set.contains(&n) {
                    return Err(Error::UnknownNode(n));
                }
            }
            let key = (i.min(j), i.max(j));
            let previous = edges.get(&key).copied().unwrap_or(2);
            let explicit = edges.contains_key(&key);
            if explicit && previous != m {
                return Err(Error::InvalidEntry { i, j, m });
            }
            if m > 2 {
                edges.insert(key, m);
            }
        }
        let nodes: Vec<Node> = set.into_iter().collect();
        let mut diagram = CoxeterDiagram {
            nodes,
            edges,
            components: Vec::new(),
        };
        diagram.components = diagram
            .component_node_sets()
            .into_iter()
            .map(|c| diagram.classify(&c))
            .collect::<Result<_>>()?;
        Ok(diagram)
    }

    /// Builtin diagram by name, e.g. `"E7"`, `"I2(5)"` or `"A2+A2"`.
    pub fn builtin(name: &str) -> Result<Self> {
        let mut nodes = Vec::new();
        let mut entries = Vec::new();
        let mut offset = 0;
        for summand in name.split('+') {
            let kind = parse_builtin_summand(summand.trim())?;
            let rank = kind.rank();
            nodes.extend(offset + 1..=offset + rank);
            entries.extend(
                kind.standard_edges()
                    .into_iter()
                    .map(|(p, q, m)| (p + offset, q + offset, m)),
            );
            offset += rank;
        }
        CoxeterDiagram::new(nodes, entries)
    }

    /// Standard diagram of a single type on labels `1..=rank`.
    pub fn standard(kind: CartanType) -> Self {
        CoxeterDiagram::new(1..=kind.rank(), kind.standard_edges())
            .expect("standard diagrams are spherical")
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains(&self, node: Node) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    /// Index of `node` in [`nodes`](Self::nodes).
    pub fn index_of(&self, node: Node) -> Option<usize> {
        self.nodes.binary_search(&node).ok()
    }

    /// Coxeter matrix entry. Both nodes are assumed to belong to the diagram.
    pub fn m(&self, i: Node, j: Node) -> u32 {
        if i == j {
            1
        } else {
            self.edges.get(&(i.min(j), i.max(j))).copied().unwrap_or(2)
        }
    }

    /// Entries with `m >= 3`, as `(i, j, m)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node, u32)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    /// Classified components, ordered by smallest label.
    pub fn component_types(&self) -> &[ComponentType] {
        &self.components
    }

    pub fn component_of(&self, node: Node) -> Option<&ComponentType> {
        self.components.iter().find(|c| c.positions.contains(&node))
    }

    pub fn is_crystallographic(&self) -> bool {
        self.components.iter().all(|c| c.kind.is_crystallographic())
    }

    /// Type string such as `A3+B2`, components ordered by smallest label.
    pub fn type_name(&self) -> String {
        if self.components.is_empty() {
            return "empty".to_string();
        }
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn connected_components(&self) -> Vec<CoxeterDiagram> {
        self.components
            .iter()
            .map(|c| {
                self.restrict(c.positions.iter().copied())
                    .expect("component nodes belong to the diagram")
            })
            .collect()
    }

    /// Induced subdiagram on `keep`, labels preserved.
    pub fn restrict(&self, keep: impl IntoIterator<Item = Node>) -> Result<Self> {
        let keep: BTreeSet<Node> = keep.into_iter().collect();
        if let Some(&bad) = keep.iter().find(|n| !self.contains(**n)) {
            return Err(Error::UnknownNode(bad));
        }
        let entries = self
            .edges()
            .filter(|(i, j, _)| keep.contains(i) && keep.contains(j))
            .collect::<Vec<_>>();
        CoxeterDiagram::new(keep, entries)
    }

    /// Full automorphism group, listed element by element with the identity
    /// first.
    pub fn automorphisms(&self) -> AutGroup {
        let matrix = self.dense();
        let maps = isomorphisms(&matrix, &matrix, false);
        let mut elements: Vec<Permutation> = maps
            .into_iter()
            .map(|f| {
                Permutation::from_pairs(
                    f.iter()
                        .enumerate()
                        .map(|(p, &q)| (self.nodes[p], self.nodes[q])),
                )
                .expect("isomorphisms are bijections")
            })
            .collect();
        elements.sort();
        elements.dedup();
        AutGroup::new(elements)
    }

    /// Checks that `p` moves only nodes of the diagram and preserves `m`.
    pub fn check_automorphism(&self, p: &Permutation) -> Result<()> {
        for n in p.support() {
            if !self.contains(n) {
                return Err(Error::UnknownNode(n));
            }
        }
        let preserved = self.nodes.iter().all(|&i| {
            self.nodes
                .iter()
                .all(|&j| self.m(p.apply(i), p.apply(j)) == self.m(i, j))
        });
        if preserved {
            Ok(())
        } else {
            Err(Error::NotAnAutomorphism(p.to_string()))
        }
    }

    /// Orbits of the group generated by `g`, ordered by smallest member.
    pub fn orbits(&self, g: &AutGroup) -> Result<Vec<BTreeSet<Node>>> {
        for p in g.generators() {
            self.check_automorphism(p)?;
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut orbit = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(n) = queue.pop_front() {
                for p in g.generators() {
                    let image = p.apply(n);
                    if orbit.insert(image) {
                        queue.push_back(image);
                    }
                }
            }
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
        Ok(out)
    }

    fn neighbours(&self, n: Node) -> impl Iterator<Item = Node> + '_ {
        self.edges.keys().filter_map(move |&(i, j)| {
            if i == n {
                Some(j)
            } else if j == n {
                Some(i)
            } else {
                None
            }
        })
    }

    fn component_node_sets(&self) -> Vec<Vec<Node>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(n) = queue.pop_front() {
                for k in self.neighbours(n) {
                    if seen.insert(k) {
                        comp.push(k);
                        queue.push_back(k);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn dense(&self) -> Vec<Vec<u32>> {
        self.nodes
            .iter()
            .map(|&i| self.nodes.iter().map(|&j| self.m(i, j)).collect())
            .collect()
    }

    /// Matches a connected node set against the finite-type list.
    fn classify(&self, comp: &[Node]) -> Result<ComponentType> {
        let k = comp.len() as u32;
        let candidates: Vec<CartanType> = match k {
            1 => vec![CartanType::A(1)],
            2 => vec![CartanType::dihedral(self.m(comp[0], comp[1]))],
            _ => {
                let mut c = vec![CartanType::A(k), CartanType::B(k)];
                if k >= 4 {
                    c.push(CartanType::D(k));
                }
                if (6..=8).contains(&k) {
                    c.push(CartanType::E(k));
                }
                if k == 4 {
                    c.extend([CartanType::F4, CartanType::H(4)]);
                }
                if k == 3 {
                    c.push(CartanType::H(3));
                }
                c
            }
        };
        let target: Vec<Vec<u32>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| self.m(i, j)).collect())
            .collect();
        for kind in candidates {
            let standard = standard_dense(kind);
            if let Some(f) = isomorphisms(&standard, &target, true).pop() {
                return Ok(ComponentType {
                    kind,
                    positions: f.into_iter().map(|q| comp[q]).collect(),
                });
            }
        }
        Err(Error::NotSpherical {
            nodes: comp.to_vec(),
        })
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {:?}", self.type_name(), self.nodes)
    }
}

fn standard_dense(kind: CartanType) -> Vec<Vec<u32>> {
    let n = kind.rank() as usize;
    let mut m = vec![vec![2; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (p, q, label) in kind.standard_edges() {
        m[p as usize - 1][q as usize - 1] = label;
        m[q as usize - 1][p as usize - 1] = label;
    }
    m
}

/// All bijections `f` with `a[p][q] == b[f(p)][f(q)]`, found by
/// backtracking in breadth-first order over `a`'s edges. With `first_only`
/// the search stops at the first hit.
fn isomorphisms(a: &[Vec<u32>], b: &[Vec<u32>], first_only: bool) -> Vec<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return Vec::new();
    }
    let signature = |m: &[Vec<u32>], p: usize| {
        let mut s: Vec<u32> = m[p].iter().copied().filter(|&x| x > 2).collect();
        s.sort_unstable();
        s
    };
    let sig_a: Vec<_> = (0..n).map(|p| signature(a, p)).collect();
    let sig_b: Vec<_> = (0..n).map(|p| signature(b, p)).collect();

    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for q in 0..n {
                if !placed[q] && a[p][q] > 2 {
                    placed[q] = true;
                    queue.push_back(q);
                }
            }
        }
    }

    struct Search<'a> {
        order: &'a [usize],
        a: &'a [Vec<u32>],
        b: &'a [Vec<u32>],
        sig_a: &'a [Vec<u32>],
        sig_b: &'a [Vec<u32>],
        first_only: bool,
        map: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) {
            if depth == self.order.len() {
                self.out.push(self.map.clone());
                return;
            }
            let p = self.order[depth];
            for q in 0..self.b.len() {
                if self.used[q] || self.sig_a[p] != self.sig_b[q] {
                    continue;
                }
                let consistent = self.order[..depth]
                    .iter()
                    .all(|&r| self.a[p][r] == self.b[q][self.map[r]]);
                if !consistent {
                    continue;
                }
                self.map[p] = q;
                self.used[q] = true;
                self.go(depth + 1);
                self.used[q] = false;
                self.map[p] = usize::MAX;
                if self.first_only && !self.out.is_empty() {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        order: &order,
        a,
        b,
        sig_a: &sig_a,
        sig_b: &sig_b,
        first_only,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        out: Vec::new(),
    };
    search.go(0);
    search.out
}

fn parse_builtin_summand(s: &str) -> Result<CartanType> {
    let unknown = || Error::UnknownType(s.to_string());
    let out_of_range = || Error::RankOutOfRange(s.to_string());
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str();
    if letter == 'I' {
        let inner = rest
            .strip_prefix("2(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(unknown)?;
        let m = parse_decimal(inner).ok_or_else(unknown)?;
        if m < 2 {
            return Err(out_of_range());
        }
        return Ok(match m {
            2 => CartanType::I2(2),
            m => CartanType::dihedral(m),
        });
    }
    let n = parse_decimal(rest).ok_or_else(unknown)?;
    let in_range = |lo: u32| (lo..=MAX_BUILTIN_RANK).contains(&n);
    let kind = match letter {
        'A' if in_range(1) => CartanType::A(n),
        'B' | 'C' if in_range(2) => CartanType::B(n),
        'D' if in_range(4) => CartanType::D(n),
        'E' if (6..=8).contains(&n) => CartanType::E(n),
        'F' if n == 4 => CartanType::F4,
        'G' if n == 2 => CartanType::G2,
        'H' if n == 3 || n == 4 => CartanType::H(n),
        'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' | 'H' => return Err(out_of_range()),
        _ => return Err(unknown()),
    };
    Ok(kind)
}

fn parse_decimal(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Permutation of node labels; nodes not stored are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<Node, Node>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a permutation from `(source, image)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Node, Node)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b) in pairs {
            if let Some(prev) = map.insert(a, b) {
                if prev != b {
                    return Err(Error::InvalidPermutation(format!(
                        "{a} is sent to both {prev} and {b}"
                    )));
                }
            }
        }
        let sources: BTreeSet<Node> = map.keys().copied().collect();
        let images: BTreeSet<Node> = map.values().copied().collect();
        if sources != images || images.len() != map.len() {
            return Err(Error::InvalidPermutation(
                "mapping is not a bijection of its support".to_string(),
            ));
        }
        map.retain(|a, b| a != b);
        Ok(Permutation { map })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<Node>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut pairs = Vec::new();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if !seen.insert(a) {
                    return Err(Error::InvalidPermutation(format!(
                        "node {a} appears in more than one place"
                    )));
                }
                pairs.push((a, cycle[(k + 1) % cycle.len()]));
            }
        }
        Self::from_pairs(pairs)
    }

    pub fn apply(&self, n: Node) -> Node {
        self.map.get(&n).copied().unwrap_or(n)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let support: BTreeSet<Node> = self.support().chain(other.support()).collect();
        Permutation::from_pairs(support.into_iter().map(|n| (n, self.apply(other.apply(n)))))
            .expect("composition of bijections")
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            map: self.map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Moved points.
    pub fn support(&self) -> impl Iterator<Item = Node> + '_ {
        self.map.keys().copied()
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// member, ordered by that member.
    pub fn cycles(&self) -> Vec<Vec<Node>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut n = self.apply(start);
            while n != start {
                seen.insert(n);
                cycle.push(n);
                n = self.apply(n);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(|n| n.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses disjoint-cycle notation such as `(1 5)(2 4)`; `()` and the
    /// empty string are the identity.
    fn from_str(s: &str) -> Result<Self> {
        let cycles =
            crate::dsl::parse_cycles(s).map_err(|(_, msg)| Error::InvalidPermutation(msg))?;
        Permutation::from_cycles(&cycles)
    }
}

/// Group of diagram automorphisms given by generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AutGroup {
    generators: Vec<Permutation>,
}

impl AutGroup {
    pub fn new(generators: Vec<Permutation>) -> Self {
        AutGroup { generators }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    /// Generators with identities dropped and duplicates removed.
    pub fn normalized(&self) -> AutGroup {
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        AutGroup { generators: gens }
    }

    /// Every element of the generated group, identity first.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut seen = BTreeSet::from([Permutation::identity()]);
        let mut out = vec![Permutation::identity()];
        let mut queue = VecDeque::from([Permutation::identity()]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }
}

impl fmt::Display for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.normalized();
        if gens.generators.is_empty() {
            return write!(f, "<>");
        }
        let body: Vec<String> = gens.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(nodes: &[Node]) -> BTreeSet<Node> {
        nodes.iter().copied().collect()
    }

    #[test]
    fn single_node_is_a1() {
        let d = CoxeterDiagram::new([1], []).unwrap();
        assert_eq!(d.type_name(), "A1");
    }

    #[test]
    fn custom_b3_and_dihedral() {
        let d = CoxeterDiagram::new([1, 2, 3], [(1, 2, 3), (2, 3, 4)]).unwrap();
        assert_eq!(d.component_types()[0].kind, CartanType::B(3));
        assert_eq!(d, CoxeterDiagram::builtin("B3").unwrap());
        let i7 = CoxeterDiagram::new([1, 2], [(1, 2, 7)]).unwrap();
        assert_eq!(i7.type_name(), "I2(7)");
        assert_eq!(i7, CoxeterDiagram::builtin("I2(7)").unwrap());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            CoxeterDiagram::new([1, 1], []),
            Err(Error::DuplicateLabel(1))
        );
        assert!(matches!(
            CoxeterDiagram::new([1, 2], [(1, 1, 3)]),
            Err(Error::InvalidEntry { .. })
        ));
        assert!(matches!(
            CoxeterDiagram::new([1, 2], [(1, 2, 1)]),
            Err(Error::InvalidEntry { .. })
        ));
        assert_eq!(
            CoxeterDiagram::new([1, 2], [(1, 3, 3)]),
            Err(Error::UnknownNode(3))
        );
        // triangle: affine A2
        assert!(matches!(
            CoxeterDiagram::new([1, 2, 3], [(1, 2, 3), (2, 3, 3), (1, 3, 3)]),
            Err(Error::NotSpherical { .. })
        ));
        // two double bonds: affine C2
        assert!(matches!(
            CoxeterDiagram::new([1, 2, 3], [(1, 2, 4), (2, 3, 4)]),
            Err(Error::NotSpherical { .. })
        ));
        // E9 is affine
        let mut e9 = CartanType::E(8).standard_edges();
        e9.push((8, 9, 3));
        assert!(matches!(
            CoxeterDiagram::new(1..=9, e9),
            Err(Error::NotSpherical { .. })
        ));
    }

    #[test]
    fn builtin_shapes() {
        let a3 = CoxeterDiagram::builtin("A3").unwrap();
        assert_eq!(a3.edges().collect::<Vec<_>>(), vec![(1, 2, 3), (2, 3, 3)]);

        let e7 = CoxeterDiagram::builtin("E7").unwrap();
        assert_eq!(e7.rank(), 7);
        let nbrs_of_2: Vec<Node> = e7.neighbours(2).collect();
        assert_eq!(nbrs_of_2, vec![4]);
        for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
            assert_eq!(e7.m(i, j), 3);
        }

        let sum = CoxeterDiagram::builtin("A2+A2").unwrap();
        assert_eq!(sum.edges().collect::<Vec<_>>(), vec![(1, 2, 3), (3, 4, 3)]);

        assert_eq!(
            CoxeterDiagram::builtin("C3").unwrap(),
            CoxeterDiagram::builtin("B3").unwrap()
        );
        let f4 = CoxeterDiagram::builtin("F4").unwrap();
        assert_eq!(f4.m(2, 3), 4);
        assert_eq!(CoxeterDiagram::builtin("G2").unwrap().m(1, 2), 6);
        let d5 = CoxeterDiagram::builtin("D5").unwrap();
        assert_eq!(d5.m(3, 4), 3);
        assert_eq!(d5.m(3, 5), 3);
        assert_eq!(d5.m(4, 5), 2);
    }

    #[test]
    fn builtin_errors() {
        assert!(matches!(
            CoxeterDiagram::builtin("X3"),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("A"),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("D3"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("E9"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("B1"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("I2(1)"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(
            CoxeterDiagram::builtin("A0"),
            Err(Error::RankOutOfRange(_))
        ));
    }

    #[test]
    fn components_and_restrict() {
        let a3 = CoxeterDiagram::builtin("A3").unwrap();
        assert_eq!(a3.connected_components(), vec![a3.clone()]);

        let sum = CoxeterDiagram::builtin("A2+A2").unwrap();
        let comps = sum.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].nodes(), &[1, 2]);
        assert_eq!(comps[1].nodes(), &[3, 4]);

        let e7 = CoxeterDiagram::builtin("E7").unwrap();
        let cut = e7.restrict([2, 4, 5, 6]).unwrap();
        let comps = cut.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].nodes(), &[2, 4, 5, 6]);
        assert_eq!(cut.type_name(), "A4");
        assert_eq!(
            cut.edges().collect::<Vec<_>>(),
            vec![(2, 4, 3), (4, 5, 3), (5, 6, 3)]
        );

        let a5 = CoxeterDiagram::builtin("A5").unwrap();
        let single = a5.restrict([3]).unwrap();
        assert_eq!(single.nodes(), &[3]);
        assert_eq!(single.type_name(), "A1");
        let a7 = CoxeterDiagram::builtin("A7").unwrap();
        let sub = a7.restrict(1..=5).unwrap();
        assert_eq!(sub, a5);
        assert_eq!(a5.restrict([9]), Err(Error::UnknownNode(9)));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(
            CoxeterDiagram::builtin("A1")
                .unwrap()
                .automorphisms()
                .order(),
            1
        );
        let a3 = CoxeterDiagram::builtin("A3").unwrap().automorphisms();
        assert_eq!(a3.generators(), &[Permutation::identity(), perm("(1 3)")]);
        let d4 = CoxeterDiagram::builtin("D4").unwrap().automorphisms();
        assert_eq!(d4.generators().len(), 6);
        for g in d4.generators() {
            assert_eq!(g.apply(2), 2);
        }
    }

    #[test]
    fn automorphism_group_orders() {
        let expected = [
            ("A1", 1),
            ("A2", 2),
            ("A5", 2),
            ("B2", 2),
            ("B3", 1),
            ("B6", 1),
            ("D4", 6),
            ("D5", 2),
            ("D7", 2),
            ("E6", 2),
            ("E7", 1),
            ("E8", 1),
            ("F4", 2),
            ("G2", 2),
            ("H3", 1),
            ("I2(5)", 2),
            ("A2+A2", 8),
        ];
        for (name, order) in expected {
            let d = CoxeterDiagram::builtin(name).unwrap();
            assert_eq!(d.automorphisms().generators().len(), order, "{name}");
        }
    }

    #[test]
    fn orbit_examples() {
        let a3 = CoxeterDiagram::builtin("A3").unwrap();
        assert_eq!(
            a3.orbits(&AutGroup::trivial()).unwrap(),
            vec![set(&[1]), set(&[2]), set(&[3])]
        );
        assert_eq!(
            a3.orbits(&AutGroup::new(vec![perm("(1 3)")])).unwrap(),
            vec![set(&[1, 3]), set(&[2])]
        );
        let a5 = CoxeterDiagram::builtin("A5").unwrap();
        assert_eq!(
            a5.orbits(&AutGroup::new(vec![perm("(1 5)(2 4)")])).unwrap(),
            vec![set(&[1, 5]), set(&[2, 4]), set(&[3])]
        );
        assert!(matches!(
            a3.orbits(&AutGroup::new(vec![perm("(1 2)")])),
            Err(Error::NotAnAutomorphism(_))
        ));
    }

    #[test]
    fn permutation_notation() {
        let p = perm("(2 4)(1 5)");
        assert_eq!(p.to_string(), "(1 5)(2 4)");
        assert_eq!(perm("()"), Permutation::identity());
        assert_eq!(perm("(1 3 4)").apply(4), 1);
        assert_eq!(perm("(1 3 4)").inverse().apply(1), 4);
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
        assert!("(1 2".parse::<Permutation>().is_err());
        let c = perm("(1 2)").compose(&perm("(2 3)"));
        assert_eq!(c.apply(2), 3);
        assert_eq!(c.apply(3), 1);
    }
}
