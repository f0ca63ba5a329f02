use std::fmt;
use std::sync::Arc;

use super::domain::Domain;
use crate::error::{Error, Result};

/// A bijection of a [`Domain`], stored as its image array.
///
/// Permutations act on the right: `x^(pq) = (x^p)^q`, so `p.compose(q)`
/// applies `p` first.
#[derive(Clone)]
pub struct Permutation {
    domain: Arc<Domain>,
    image: Box<[u32]>,
}

impl Permutation {
    pub fn identity(domain: &Arc<Domain>) -> Self {
        Permutation {
            domain: Arc::clone(domain),
            image: (0..domain.size() as u32).collect(),
        }
    }

    pub fn from_images(domain: &Arc<Domain>, images: &[usize]) -> Result<Self> {
        let n = domain.size();
        if images.len() != n {
            return Err(Error::domain(format!(
                "expected {n} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::domain("image list is not a bijection"));
            }
        }
        Ok(Permutation {
            domain: Arc::clone(domain),
            image: images.iter().map(|&x| x as u32).collect(),
        })
    }

    /// Product of the given cycles (which need not be disjoint; applied left to right).
    pub fn from_cycles(domain: &Arc<Domain>, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(domain);
        for cycle in cycles {
            let mut img: Vec<usize> = (0..domain.size()).collect();
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= img.len() || y >= img.len() {
                    return Err(Error::domain(format!(
                        "point out of range in cycle {cycle:?}"
                    )));
                }
                img[x] = y;
            }
            acc = acc.compose(&Self::from_images(domain, &img)?)?;
        }
        Ok(acc)
    }

    pub(crate) fn from_raw(domain: &Arc<Domain>, image: Box<[u32]>) -> Self {
        debug_assert_eq!(image.len(), domain.size());
        Permutation {
            domain: Arc::clone(domain),
            image,
        }
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn act(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    fn check(&self, other: &Permutation) -> Result<()> {
        if Domain::same(&self.domain, &other.domain) {
            Ok(())
        } else {
            Err(Error::DomainMismatch)
        }
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check(other)?;
        Ok(Permutation {
            domain: Arc::clone(&self.domain),
            image: compose_raw(&self.image, &other.image),
        })
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            domain: Arc::clone(&self.domain),
            image: invert_raw(&self.image),
        }
    }

    pub fn is_identity(&self) -> bool {
        is_identity_raw(&self.image)
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut acc = Self::identity(&self.domain);
        for _ in 0..e {
            acc = acc.compose(self).expect("same domain");
        }
        acc
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.image[i] as usize == i
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut acc = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x] as usize;
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        Domain::same(&self.domain, &other.domain) && self.image == other.image
    }
}

impl Eq for Permutation {}

impl std::hash::Hash for Permutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.image.hash(state);
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation on point indices, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.image[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub(crate) fn compose_raw(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub(crate) fn invert_raw(a: &[u32]) -> Box<[u32]> {
    let mut inv = vec![0u32; a.len()].into_boxed_slice();
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

pub(crate) fn is_identity_raw(a: &[u32]) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let d = Domain::indexed(3);
        let t = Permutation::from_cycles(&d, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(&d, &[&[0, 1, 2]]).unwrap();
        // 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0
        let expected = Permutation::from_cycles(&d, &[&[0, 2]]).unwrap();
        assert_eq!(t.compose(&c).unwrap(), expected);
        assert_eq!(t.compose(&c).unwrap().to_string(), "(0 2)");
    }

    #[test]
    fn inverse_and_identity() {
        let d = Domain::indexed(5);
        let p = Permutation::from_cycles(&d, &[&[0, 3, 1], &[2, 4]]).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
        let id = Permutation::identity(&d);
        for i in 0..5 {
            assert_eq!(id.act(i), i);
        }
        assert_eq!(p.order(), 6);
        assert_eq!(id.to_string(), "()");
    }

    #[test]
    fn domain_mismatch() {
        let a = Permutation::identity(&Domain::indexed(3));
        let b = Permutation::identity(&Domain::indexed(3));
        assert_eq!(a.compose(&b).unwrap_err(), Error::DomainMismatch);
    }

    #[test]
    fn non_bijection_rejected() {
        let d = Domain::indexed(3);
        assert!(Permutation::from_images(&d, &[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&d, &[0, 1]).is_err());
        assert!(Permutation::from_images(&d, &[0, 1, 3]).is_err());
    }
}
