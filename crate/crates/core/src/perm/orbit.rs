use std::sync::Arc;

use super::domain::Domain;
use super::permutation::{compose_raw, Permutation};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Orbit of a point under a generator list, with a Schreier vector.
///
/// `via[x]` is the index of the generator whose application to the parent of
/// `x` first reached `x`; following those edges back leads to the root.
#[derive(Debug, Clone)]
pub struct Orbit {
    root: usize,
    points: Vec<usize>,
    via: Vec<u32>,
    generators: Vec<Permutation>,
}

impl Orbit {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Orbit points in breadth-first discovery order, starting with the root.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.via.len() && self.via[x] != NONE
    }

    /// Group element (as a generator word) carrying the root to `x`.
    pub fn transversal(&self, x: usize) -> Option<Permutation> {
        if !self.contains(x) {
            return None;
        }
        let mut word = Vec::new();
        let mut y = x;
        while y != self.root {
            let g = self.via[y] as usize;
            word.push(g);
            y = self.generators[g].inverse().act(y);
        }
        let domain = self.generators[0].domain();
        let mut acc: Box<[u32]> = (0..domain.size() as u32).collect();
        for &g in word.iter().rev() {
            acc = compose_raw(&acc, self.generators[g].images());
        }
        Some(Permutation::from_raw(domain, acc))
    }
}

/// Orbit of `point` under `gens`.
pub fn orbit(gens: &[Permutation], point: usize) -> Result<Orbit> {
    let n = match gens.first() {
        Some(g) => {
            if gens.iter().any(|h| !Domain::same(h.domain(), g.domain())) {
                return Err(Error::DomainMismatch);
            }
            g.degree()
        }
        None => {
            return Ok(Orbit {
                root: point,
                points: vec![point],
                via: Vec::new(),
                generators: Vec::new(),
            })
        }
    };
    if point >= n {
        return Err(Error::domain(format!(
            "point {point} outside domain of size {n}"
        )));
    }
    let mut via = vec![NONE; n];
    via[point] = 0;
    let mut points = vec![point];
    let mut head = 0;
    while head < points.len() {
        let x = points[head];
        head += 1;
        for (gi, g) in gens.iter().enumerate() {
            let y = g.act(x);
            if via[y] == NONE {
                via[y] = gi as u32;
                points.push(y);
            }
        }
    }
    Ok(Orbit {
        root: point,
        points,
        via,
        generators: gens.to_vec(),
    })
}

/// Orbit partition of `0..n` under raw image arrays, each orbit sorted,
/// orbits ordered by their smallest point.
pub(crate) fn orbit_partition(n: usize, gens: &[&[u32]]) -> Vec<Vec<u32>> {
    let mut label = vec![NONE; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != NONE {
            continue;
        }
        let id = out.len() as u32;
        label[start] = id;
        let mut orb = vec![start as u32];
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head] as usize;
            head += 1;
            for g in gens {
                let y = g[x] as usize;
                if label[y] == NONE {
                    label[y] = id;
                    orb.push(y as u32);
                }
            }
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

/// All orbits of `gens` on their domain (of size `n` when `gens` is empty).
pub fn orbits(domain: &Arc<Domain>, gens: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    if gens.iter().any(|g| !Domain::same(g.domain(), domain)) {
        return Err(Error::DomainMismatch);
    }
    let raw: Vec<&[u32]> = gens.iter().map(|g| g.images()).collect();
    Ok(orbit_partition(domain.size(), &raw)
        .into_iter()
        .map(|o| o.into_iter().map(|x| x as usize).collect())
        .collect())
}

/// The action `{a, b} -> {a^p, b^p}` on the 2-subsets domain `pairs`.
pub fn induced_pair_action(p: &Permutation, pairs: &Arc<Domain>) -> Result<Permutation> {
    match pairs.pair_base() {
        Some(base) if Domain::same(base, p.domain()) => {}
        _ => return Err(Error::DomainMismatch),
    }
    let n = p.degree();
    let mut image = Vec::with_capacity(pairs.size());
    for i in 0..n {
        let a = p.act(i);
        for j in i + 1..n {
            image.push(Domain::pair_index(n, a, p.act(j)) as u32);
        }
    }
    Ok(Permutation::from_raw(pairs, image.into_boxed_slice()))
}
