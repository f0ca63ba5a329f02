//! Irredundant bases: stabilizer-chain reports and the search for every
//! achievable irredundant-base length.
//!
//! The searches walk a tree whose children extend the current sequence by one
//! representative (the smallest point) of each nontrivial orbit of the current
//! stabilizer. Replacing a point by a conjugate under the current stabilizer
//! conjugates everything below it, so no length is lost.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::big_omega;
use crate::perm::{Domain, PermGroup};

/// An ordered sequence of points of a domain.
#[derive(Clone)]
pub struct BaseSequence {
    domain: Arc<Domain>,
    points: Vec<usize>,
}

impl BaseSequence {
    pub fn new(domain: &Arc<Domain>, points: Vec<usize>) -> Result<Self> {
        if let Some(&x) = points.iter().find(|&&x| x >= domain.size()) {
            return Err(Error::domain(format!("point {x} outside domain")));
        }
        Ok(BaseSequence {
            domain: Arc::clone(domain),
            points,
        })
    }

    pub fn from_labels<S: AsRef<str>>(domain: &Arc<Domain>, labels: &[S]) -> Result<Self> {
        let points = labels
            .iter()
            .map(|l| {
                domain
                    .index_of(l.as_ref())
                    .ok_or_else(|| Error::domain(format!("unknown point {:?}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, points)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|&x| self.domain.label(x).to_string())
            .collect()
    }
}

impl PartialEq for BaseSequence {
    fn eq(&self, other: &Self) -> bool {
        Domain::same(&self.domain, &other.domain) && self.points == other.points
    }
}

impl Eq for BaseSequence {}

impl std::fmt::Debug for BaseSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

/// Orders along `G >= G_{w1} >= G_{w1,w2} >= ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    #[serde(serialize_with = "decimal_strings")]
    pub orders: Vec<BigUint>,
    /// `strict[i]` is whether `orders[i] > orders[i + 1]`.
    pub strict: Vec<bool>,
    pub terminal_trivial: bool,
}

impl ChainReport {
    pub fn is_irredundant_base(&self) -> bool {
        self.terminal_trivial && self.strict.iter().all(|&s| s)
    }
}

fn decimal_strings<S: serde::Serializer>(
    v: &[BigUint],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// The set of irredundant-base lengths with one witness per length.
#[derive(Debug, Clone)]
pub struct IntervalReport {
    pub min_length: usize,
    pub max_length: usize,
    pub lengths: Vec<usize>,
    pub is_interval: bool,
    pub witnesses: BTreeMap<usize, BaseSequence>,
}

fn check_domain(group: &PermGroup, seq: &BaseSequence) -> Result<()> {
    if Domain::same(group.domain(), seq.domain()) {
        Ok(())
    } else {
        Err(Error::DomainMismatch)
    }
}

pub fn chain_report(group: &PermGroup, seq: &BaseSequence) -> Result<ChainReport> {
    check_domain(group, seq)?;
    let mut h = group.clone();
    let mut orders = vec![h.order().clone()];
    for &x in seq.points() {
        if !h.is_trivial() {
            h = h.stabilizer(x);
        }
        orders.push(h.order().clone());
    }
    let strict = orders.windows(2).map(|w| w[0] > w[1]).collect();
    Ok(ChainReport {
        terminal_trivial: h.is_trivial(),
        orders,
        strict,
    })
}

pub fn is_irredundant_base(group: &PermGroup, seq: &BaseSequence) -> Result<bool> {
    Ok(chain_report(group, seq)?.is_irredundant_base())
}

/// Bounds on the irredundant-chain lengths below `h`: at most the number of
/// prime factors of `|h|`, and at least the number of steps needed when each
/// step divides the order by at most the largest orbit length.
fn length_bounds(h: &PermGroup) -> (usize, usize) {
    if h.is_trivial() {
        return (0, 0);
    }
    let upper = h
        .fundamental_orbit_lengths()
        .iter()
        .map(|&l| big_omega(l as u64))
        .sum();
    let largest = h.orbits().iter().map(Vec::len).max().unwrap_or(1);
    let largest = BigUint::from(largest);
    let mut lower = 0;
    let mut reach = BigUint::one();
    while &reach < h.order() {
        reach *= &largest;
        lower += 1;
    }
    (lower, upper)
}

/// Smallest point of each orbit of `h` of length at least 2, increasing.
fn moved_orbit_reps(h: &PermGroup) -> Vec<usize> {
    h.orbits()
        .into_iter()
        .filter(|o| o.len() > 1)
        .map(|o| o[0])
        .collect()
}

struct Node {
    group: PermGroup,
    lower: usize,
    upper: usize,
}

impl Node {
    fn new(group: PermGroup) -> Node {
        let (lower, upper) = length_bounds(&group);
        Node {
            group,
            lower,
            upper,
        }
    }

    fn children(&self) -> impl Iterator<Item = (usize, Node)> + '_ {
        moved_orbit_reps(&self.group)
            .into_iter()
            .map(|x| (x, Node::new(self.group.stabilizer(x))))
    }
}

struct LengthSearch {
    found: BTreeMap<usize, Vec<usize>>,
}

impl LengthSearch {
    fn covered(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|l| self.found.contains_key(&l))
    }

    fn explore(&mut self, node: &Node, prefix: &mut Vec<usize>) {
        let k = prefix.len();
        if node.group.is_trivial() {
            self.found.entry(k).or_insert_with(|| prefix.clone());
            return;
        }
        if self.covered(k + node.lower, k + node.upper) {
            return;
        }
        for x in moved_orbit_reps(&node.group) {
            let child = Node::new(node.group.stabilizer(x));
            if !self.covered(k + 1 + child.lower, k + 1 + child.upper) {
                prefix.push(x);
                self.explore(&child, prefix);
                prefix.pop();
            }
            if self.covered(k + node.lower, k + node.upper) {
                return;
            }
        }
    }
}

/// Every achievable irredundant-base length, with the first witness found
/// for each in depth-first order. The trivial group yields `{0}`.
pub fn achievable_lengths(group: &PermGroup) -> IntervalReport {
    let mut search = LengthSearch {
        found: BTreeMap::new(),
    };
    search.explore(&Node::new(group.clone()), &mut Vec::new());
    report_from(group, search.found)
}

fn report_from(group: &PermGroup, found: BTreeMap<usize, Vec<usize>>) -> IntervalReport {
    let lengths: Vec<usize> = found.keys().copied().collect();
    let min_length = lengths[0];
    let max_length = *lengths.last().expect("at least one length");
    IntervalReport {
        min_length,
        max_length,
        is_interval: lengths.len() == max_length - min_length + 1,
        lengths,
        witnesses: found
            .into_iter()
            .map(|(l, pts)| {
                (
                    l,
                    BaseSequence::new(group.domain(), pts).expect("domain points"),
                )
            })
            .collect(),
    }
}

/// `b(G)`, with a witness, by iterative deepening.
pub fn min_base_length(group: &PermGroup) -> (usize, BaseSequence) {
    fn search(node: &Node, limit: usize, prefix: &mut Vec<usize>) -> bool {
        if node.group.is_trivial() {
            return true;
        }
        if prefix.len() + node.lower > limit {
            return false;
        }
        for (x, child) in node.children() {
            prefix.push(x);
            if search(&child, limit, prefix) {
                return true;
            }
            prefix.pop();
        }
        false
    }
    let root = Node::new(group.clone());
    let mut limit = root.lower;
    loop {
        let mut prefix = Vec::new();
        if search(&root, limit, &mut prefix) {
            let seq = BaseSequence::new(group.domain(), prefix).expect("domain points");
            return (seq.len(), seq);
        }
        limit += 1;
    }
}

/// `I(G)`, with a witness, by branch and bound.
pub fn max_irredundant_length(group: &PermGroup) -> (usize, BaseSequence) {
    fn search(node: &Node, prefix: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
        let k = prefix.len();
        if node.group.is_trivial() {
            if best.as_ref().is_none_or(|b| k > b.len()) {
                *best = Some(prefix.clone());
            }
            return;
        }
        for x in moved_orbit_reps(&node.group) {
            let bound = best.as_ref().map_or(0, Vec::len);
            if k + node.upper <= bound && best.is_some() {
                return;
            }
            let child = Node::new(node.group.stabilizer(x));
            if best.is_some() && k + 1 + child.upper <= bound {
                continue;
            }
            prefix.push(x);
            search(&child, prefix, best);
            prefix.pop();
        }
    }
    let mut best = None;
    search(&Node::new(group.clone()), &mut Vec::new(), &mut best);
    let pts = best.expect("some chain reaches the trivial group");
    (
        pts.len(),
        BaseSequence::new(group.domain(), pts).expect("domain points"),
    )
}

/// Irredundant-base lengths by trying every sequence of distinct points,
/// without orbit pruning. Exponential; for checking the pruned search on
/// small groups.
pub fn exhaustive_lengths(group: &PermGroup) -> IntervalReport {
    fn walk(h: &PermGroup, prefix: &mut Vec<usize>, found: &mut BTreeMap<usize, Vec<usize>>) {
        if h.is_trivial() {
            found.entry(prefix.len()).or_insert_with(|| prefix.clone());
            return;
        }
        for x in 0..h.degree() {
            if prefix.contains(&x) {
                continue;
            }
            let child = h.stabilizer(x);
            if child.order() == h.order() {
                continue;
            }
            prefix.push(x);
            walk(&child, prefix, found);
            prefix.pop();
        }
    }
    let mut found = BTreeMap::new();
    walk(group, &mut Vec::new(), &mut found);
    report_from(group, found)
}
