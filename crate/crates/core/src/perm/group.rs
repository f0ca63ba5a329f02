use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use super::chain::StabChain;
use super::domain::Domain;
use super::orbit::{orbit_partition, Orbit};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A permutation group with a complete stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    domain: Arc<Domain>,
    generators: Vec<Permutation>,
    chain: Arc<StabChain>,
    order: BigUint,
}

impl PermGroup {
    pub fn new(domain: &Arc<Domain>, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(domain, generators, &[])
    }

    /// Builds the chain with `prefix` as its first base points.
    pub fn with_base_prefix(
        domain: &Arc<Domain>,
        generators: Vec<Permutation>,
        prefix: &[usize],
    ) -> Result<Self> {
        if generators.iter().any(|g| !Domain::same(g.domain(), domain)) {
            return Err(Error::DomainMismatch);
        }
        if let Some(&x) = prefix.iter().find(|&&x| x >= domain.size()) {
            return Err(Error::domain(format!("base point {x} outside domain")));
        }
        let raw: Vec<&[u32]> = generators.iter().map(|g| g.images()).collect();
        let prefix: Vec<u32> = prefix.iter().map(|&x| x as u32).collect();
        let chain = StabChain::build(domain.size(), &raw, &prefix, None);
        Ok(Self::from_parts(domain, generators, chain))
    }

    pub fn trivial(domain: &Arc<Domain>) -> Self {
        Self::from_parts(domain, Vec::new(), StabChain::empty(domain.size()))
    }

    fn from_parts(domain: &Arc<Domain>, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let order = chain.order();
        PermGroup {
            domain: Arc::clone(domain),
            generators,
            chain: Arc::new(chain),
            order,
        }
    }

    /// A group whose generators are the strong generators of `chain`.
    fn from_chain(domain: &Arc<Domain>, chain: StabChain) -> Self {
        let generators = chain
            .strong_generators()
            .iter()
            .map(|g| Permutation::from_raw(domain, g.clone()))
            .collect();
        Self::from_parts(domain, generators, chain)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.domain.size()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base().into_iter().map(|x| x as usize).collect()
    }

    pub fn fundamental_orbit_lengths(&self) -> Vec<usize> {
        self.chain.orbit_lengths()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain
            .strong_generators()
            .iter()
            .map(|g| Permutation::from_raw(&self.domain, g.clone()))
            .collect()
    }

    fn raw_strong(&self) -> Vec<&[u32]> {
        self.chain
            .strong_generators()
            .iter()
            .map(|g| &g[..])
            .collect()
    }

    /// Membership by sifting. Permutations on other domains are never members.
    pub fn contains(&self, g: &Permutation) -> bool {
        Domain::same(g.domain(), &self.domain) && self.chain.contains(g.images())
    }

    /// The stabilizer of `point`.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        assert!(point < self.degree(), "point {point} outside domain");
        let gens = self.raw_strong();
        if gens.iter().all(|g| g[point] as usize == point) {
            return self.clone();
        }
        let base = self.chain.base();
        let chain = if base.first() == Some(&(point as u32)) {
            self.chain.tail(1)
        } else {
            StabChain::build(self.degree(), &gens, &[point as u32], Some(&self.order)).tail(1)
        };
        Self::from_chain(&self.domain, chain)
    }

    /// The subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        points.iter().fold(self.clone(), |h, &x| {
            if h.is_trivial() {
                h
            } else {
                h.stabilizer(x)
            }
        })
    }

    pub fn orbit(&self, point: usize) -> Orbit {
        let gens = if self.generators.is_empty() {
            vec![Permutation::identity(&self.domain)]
        } else {
            self.generators.clone()
        };
        super::orbit::orbit(&gens, point).expect("generators share the group domain")
    }

    /// Orbits on the domain, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbit_partition(self.degree(), &self.raw_strong())
            .into_iter()
            .map(|o| o.into_iter().map(|x| x as usize).collect())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() <= 1 || self.orbit(0).len() == self.degree()
    }

    /// Orbit sizes of the componentwise action on ordered pairs of distinct points.
    pub fn ordered_pair_orbit_sizes(&self) -> Vec<usize> {
        let n = self.degree();
        let gens = self.raw_strong();
        let mut seen = vec![false; n * n];
        let mut sizes = Vec::new();
        for start in 0..n * n {
            if seen[start] || start / n == start % n {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                let (a, b) = (x / n, x % n);
                for g in &gens {
                    let y = g[a] as usize * n + g[b] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn is_doubly_transitive(&self) -> bool {
        let n = self.degree();
        n < 2 || self.ordered_pair_orbit_sizes() == vec![n * (n - 1)]
    }

    /// Every element. Intended for small groups only.
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain
            .elements()
            .into_iter()
            .map(|g| Permutation::from_raw(&self.domain, g))
            .collect()
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("order", &self.order)
            .field("base", &self.base())
            .finish()
    }
}
