//! Stabilizer chains (base and strong generating set) built by a
//! deterministic Schreier–Sims procedure.
//!
//! Each level keeps its fundamental orbit with a Schreier vector. Inverse
//! transversal elements are reconstructed on demand and memoized up to a
//! global budget, so small domains get explicit transversals while large ones
//! fall back to walking the Schreier tree.

use std::borrow::Cow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use super::permutation::{invert_raw, is_identity_raw};

const NONE: u32 = u32::MAX;

/// Memoized transversal entries (u32 words) per chain.
const REP_CACHE_BUDGET: usize = 1 << 26;

pub(crate) struct StabChain {
    n: usize,
    gens: Vec<Box<[u32]>>,
    invs: Vec<Box<[u32]>>,
    levels: Vec<Level>,
    cached: AtomicUsize,
}

struct Level {
    point: u32,
    /// Indices into `StabChain::gens`.
    gens: Vec<u32>,
    /// Point -> orbit position, `NONE` outside the orbit.
    pos: Box<[u32]>,
    orbit: Vec<u32>,
    /// Per orbit position, the generator that reached it (`NONE` at the root).
    via: Vec<u32>,
    /// Per orbit position, how many of `gens` have had their Schreier
    /// generator verified.
    checked: Vec<u32>,
    /// Per orbit position, the inverse of the transversal element.
    reps: Vec<OnceLock<Box<[u32]>>>,
}

impl Level {
    fn new(n: usize, point: u32) -> Level {
        let mut pos = vec![NONE; n].into_boxed_slice();
        pos[point as usize] = 0;
        Level {
            point,
            gens: Vec::new(),
            pos,
            orbit: vec![point],
            via: vec![NONE],
            checked: vec![0],
            reps: vec![OnceLock::new()],
        }
    }

    fn push_point(&mut self, x: u32, via: u32) {
        self.pos[x as usize] = self.orbit.len() as u32;
        self.orbit.push(x);
        self.via.push(via);
        self.checked.push(0);
        self.reps.push(OnceLock::new());
    }
}

impl StabChain {
    pub(crate) fn empty(n: usize) -> StabChain {
        StabChain {
            n,
            gens: Vec::new(),
            invs: Vec::new(),
            levels: Vec::new(),
            cached: AtomicUsize::new(0),
        }
    }

    /// Chain for `<gens>` whose base starts with `prefix`.
    ///
    /// With `known_order`, construction stops as soon as the product of the
    /// fundamental orbit lengths reaches it; the caller must guarantee that
    /// it is the order of `<gens>`.
    pub(crate) fn build(
        n: usize,
        gens: &[&[u32]],
        prefix: &[u32],
        known_order: Option<&BigUint>,
    ) -> StabChain {
        let mut chain = StabChain::empty(n);
        for &b in prefix {
            chain.levels.push(Level::new(n, b));
        }
        for g in gens {
            if !is_identity_raw(g) {
                chain.insert_generator(g.to_vec().into_boxed_slice());
            }
        }
        match known_order {
            Some(order) => chain.complete_known(order),
            None => chain.complete(),
        }
        chain
    }

    pub(crate) fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub(crate) fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub(crate) fn strong_generators(&self) -> &[Box<[u32]>] {
        &self.gens
    }

    fn insert_generator(&mut self, g: Box<[u32]>) {
        let first_moved = self
            .levels
            .iter()
            .position(|l| g[l.point as usize] != l.point);
        let top = match first_moved {
            Some(t) => t,
            None => {
                let pt = smallest_moved(&g).expect("non-identity generator");
                self.levels.push(Level::new(self.n, pt));
                self.levels.len() - 1
            }
        };
        self.add_strong(g, 0, top);
    }

    /// Adds `g` to the generator lists of levels `lo..=hi`.
    fn add_strong(&mut self, g: Box<[u32]>, lo: usize, hi: usize) {
        let idx = self.gens.len() as u32;
        self.invs.push(invert_raw(&g));
        self.gens.push(g);
        for l in lo..=hi {
            self.levels[l].gens.push(idx);
            self.extend_orbit(l, idx);
        }
    }

    /// Restores orbit closure at level `l` after generator `new` was added.
    fn extend_orbit(&mut self, l: usize, new: u32) {
        let gens = &self.gens;
        let level = &mut self.levels[l];
        let old_len = level.orbit.len();
        let g = &gens[new as usize];
        for p in 0..old_len {
            let y = g[level.orbit[p] as usize];
            if level.pos[y as usize] == NONE {
                level.push_point(y, new);
            }
        }
        let mut head = old_len;
        while head < level.orbit.len() {
            let x = level.orbit[head] as usize;
            head += 1;
            for k in 0..level.gens.len() {
                let gi = level.gens[k];
                let y = gens[gi as usize][x];
                if level.pos[y as usize] == NONE {
                    level.push_point(y, gi);
                }
            }
        }
    }

    fn parent_pos(&self, l: usize, p: usize) -> usize {
        let level = &self.levels[l];
        let s = level.via[p] as usize;
        let parent = self.invs[s][level.orbit[p] as usize];
        level.pos[parent as usize] as usize
    }

    fn reserve_cache(&self) -> bool {
        self.cached.fetch_add(self.n, Ordering::Relaxed) + self.n <= REP_CACHE_BUDGET
    }

    /// Inverse of the transversal element for orbit position `p` of level `l`
    /// (position 0 is the identity and is never requested).
    fn rep_inv(&self, l: usize, p: usize) -> Cow<'_, [u32]> {
        let level = &self.levels[l];
        if let Some(r) = level.reps[p].get() {
            return Cow::Borrowed(r);
        }
        let mut path = Vec::new();
        let mut q = p;
        while q != 0 && level.reps[q].get().is_none() {
            path.push(q);
            q = self.parent_pos(l, q);
        }
        let mut cur: Cow<'_, [u32]> = if q == 0 {
            Cow::Owned((0..self.n as u32).collect())
        } else {
            Cow::Borrowed(level.reps[q].get().expect("checked above"))
        };
        for &q in path.iter().rev() {
            // u_q = u_parent * s, so u_q^-1 = s^-1 * u_parent^-1
            let sinv = &self.invs[level.via[q] as usize];
            let next: Box<[u32]> = sinv.iter().map(|&x| cur[x as usize]).collect();
            if self.reserve_cache() {
                let _ = level.reps[q].set(next);
                cur = Cow::Borrowed(level.reps[q].get().expect("just set"));
            } else {
                cur = Cow::Owned(next.into_vec());
            }
        }
        cur
    }

    /// Sifts `h` in place through levels `from..`; returns the level at
    /// which the base image left the fundamental orbit, or the number of
    /// levels if it passed them all.
    fn strip(&self, h: &mut [u32], from: usize) -> usize {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let b = h[level.point as usize];
            let p = level.pos[b as usize];
            if p == NONE {
                return l;
            }
            if p != 0 {
                let r = self.rep_inv(l, p as usize);
                for x in h.iter_mut() {
                    *x = r[*x as usize];
                }
            }
        }
        self.levels.len()
    }

    pub(crate) fn contains(&self, g: &[u32]) -> bool {
        if g.len() != self.n {
            return false;
        }
        let mut h = g.to_vec();
        self.strip(&mut h, 0) == self.levels.len() && is_identity_raw(&h)
    }

    /// `u_beta * s` for orbit position `p` at level `l`, or `None` when the
    /// Schreier generator `u_beta s u_{beta^s}^-1` is trivially the identity.
    fn schreier_product(&self, l: usize, p: usize, s: usize) -> Option<Vec<u32>> {
        let level = &self.levels[l];
        let beta = level.orbit[p];
        let target = self.gens[s][beta as usize];
        let tp = level.pos[target as usize] as usize;
        if level.via[tp] == s as u32 {
            return None;
        }
        let s_img = &self.gens[s];
        if p == 0 {
            return Some(s_img.to_vec());
        }
        let uinv = self.rep_inv(l, p);
        let mut t = vec![0u32; self.n];
        for (y, &sy) in s_img.iter().enumerate() {
            t[uinv[y] as usize] = sy;
        }
        Some(t)
    }

    /// Checks the next unverified Schreier generator of level `l`. Returns
    /// `Ok(Some(j))` if a new strong generator was added down to level `j`,
    /// `Ok(None)` if one was verified, `Err(())` when the level is exhausted.
    fn step_level(&mut self, l: usize, cursor: &mut usize) -> Result<Option<usize>, ()> {
        loop {
            let level = &self.levels[l];
            if *cursor >= level.orbit.len() {
                return Err(());
            }
            let p = *cursor;
            let gi = level.checked[p] as usize;
            if gi >= level.gens.len() {
                *cursor += 1;
                continue;
            }
            let s = level.gens[gi] as usize;
            self.levels[l].checked[p] += 1;
            let Some(mut h) = self.schreier_product(l, p, s) else {
                return Ok(None);
            };
            let j = self.strip(&mut h, l);
            if j == self.levels.len() && is_identity_raw(&h) {
                return Ok(None);
            }
            if j == self.levels.len() {
                let pt = smallest_moved(&h).expect("non-identity residue");
                self.levels.push(Level::new(self.n, pt));
            }
            self.add_strong(h.into_boxed_slice(), l + 1, j);
            return Ok(Some(j));
        }
    }

    /// Deterministic Schreier–Sims, processing levels bottom-up.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            let mut cursor = 0;
            loop {
                match self.step_level(l, &mut cursor) {
                    Ok(None) => continue,
                    Ok(Some(j)) => {
                        i = j + 1;
                        break;
                    }
                    Err(()) => {
                        i = l;
                        break;
                    }
                }
            }
        }
    }

    /// Top-down pass that stops once the orbit product reaches `order`.
    ///
    /// A single top-down pass is already complete on its own: every Schreier
    /// generator that sifts to the identity is a product of transversal
    /// elements of deeper levels, and no level gains generators after it has
    /// been scanned.
    fn complete_known(&mut self, order: &BigUint) {
        let mut l = 0;
        while l < self.levels.len() {
            if self.order() == *order {
                return;
            }
            let mut cursor = 0;
            loop {
                match self.step_level(l, &mut cursor) {
                    Ok(None) => {}
                    Ok(Some(_)) => {
                        if self.order() == *order {
                            return;
                        }
                    }
                    Err(()) => break,
                }
            }
            l += 1;
        }
        debug_assert!(self.order() == *order, "known order was wrong");
    }

    /// The chain of the stabilizer of the first `k` base points.
    pub(crate) fn tail(&self, k: usize) -> StabChain {
        let mut remap = vec![NONE; self.gens.len()];
        let mut gens = Vec::new();
        let mut invs = Vec::new();
        for level in &self.levels[k..] {
            for &g in &level.gens {
                if remap[g as usize] == NONE {
                    remap[g as usize] = gens.len() as u32;
                    gens.push(self.gens[g as usize].clone());
                    invs.push(self.invs[g as usize].clone());
                }
            }
        }
        let levels = self.levels[k..]
            .iter()
            .map(|level| Level {
                point: level.point,
                gens: level.gens.iter().map(|&g| remap[g as usize]).collect(),
                pos: level.pos.clone(),
                orbit: level.orbit.clone(),
                via: level
                    .via
                    .iter()
                    .map(|&v| if v == NONE { NONE } else { remap[v as usize] })
                    .collect(),
                checked: level.checked.clone(),
                reps: level.orbit.iter().map(|_| OnceLock::new()).collect(),
            })
            .collect();
        StabChain {
            n: self.n,
            gens,
            invs,
            levels,
            cached: AtomicUsize::new(0),
        }
    }

    /// Every group element, as image arrays. Only sensible for small groups.
    pub(crate) fn elements(&self) -> Vec<Box<[u32]>> {
        let mut out: Vec<Box<[u32]>> = vec![(0..self.n as u32).collect()];
        // g = u_{k-1} ... u_1 u_0 with u_l from level l
        for l in (0..self.levels.len()).rev() {
            let reps: Vec<Box<[u32]>> = (0..self.levels[l].orbit.len())
                .map(|p| {
                    if p == 0 {
                        (0..self.n as u32).collect()
                    } else {
                        invert_raw(&self.rep_inv(l, p))
                    }
                })
                .collect();
            out = out
                .iter()
                .flat_map(|e| {
                    reps.iter()
                        .map(move |u| e.iter().map(|&x| u[x as usize]).collect())
                })
                .collect();
        }
        out
    }
}

fn smallest_moved(g: &[u32]) -> Option<u32> {
    g.iter()
        .enumerate()
        .find(|&(i, &x)| i != x as usize)
        .map(|(i, _)| i as u32)
}
