//! Witness groups for intervals of irredundant-base lengths, and a guard
//! that refuses to build groups that are too large.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::affine::{self, AffineParams};
use crate::error::{Error, Result};
use crate::numtheory::{big_omega, is_prime};
use crate::perm::{Domain, PermGroup, Permutation};
use crate::suzuki::{self, SuzukiAction, SuzukiParams};

/// Number of prime factors of `n`, counted with multiplicity.
pub fn pi(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::domain("π(0) is undefined"));
    }
    Ok(big_omega(n))
}

pub const DEFAULT_MAX_POINTS: u64 = 1_000_000;
pub const DEFAULT_MAX_ORDER_BITS: u64 = 128;
pub const MAX_POINTS_ENV: &str = "IRRBASE_MAX_POINTS";

/// Upper limits on the domain size and on the bit length of the group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceGuard {
    pub max_points: u64,
    pub max_order_bits: u64,
}

impl Default for ResourceGuard {
    fn default() -> Self {
        ResourceGuard {
            max_points: DEFAULT_MAX_POINTS,
            max_order_bits: DEFAULT_MAX_ORDER_BITS,
        }
    }
}

impl ResourceGuard {
    /// The default guard, with `max_points` taken from `IRRBASE_MAX_POINTS` if set.
    pub fn from_env() -> Result<Self> {
        let mut guard = Self::default();
        if let Ok(v) = std::env::var(MAX_POINTS_ENV) {
            guard.max_points = v.trim().parse().map_err(|_| {
                Error::domain(format!(
                    "{MAX_POINTS_ENV} must be a non-negative integer, got {v:?}"
                ))
            })?;
        }
        Ok(guard)
    }

    pub fn check(&self, points: &BigUint, order: &BigUint) -> Result<()> {
        self.check_estimate(&SizeEstimate::exact(points, order))
    }

    pub fn check_points(&self, points: &BigUint) -> Result<()> {
        self.check(points, &BigUint::one())
    }

    pub fn check_estimate(&self, est: &SizeEstimate) -> Result<()> {
        if est.points_log2 > (self.max_points as f64).log2() + 1e-9
            || est.order_bits > self.max_order_bits
        {
            return Err(Error::Guard {
                points: est.points.clone(),
                max_points: self.max_points,
                order_bits: est.order_bits,
                max_order_bits: self.max_order_bits,
            });
        }
        Ok(())
    }
}

/// Domain size and order size of a group, possibly far too large to build.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeEstimate {
    /// Exact decimal value when reasonably short, otherwise `2^x`.
    pub points: String,
    pub points_log2: f64,
    /// Bit length of the group order (exact or estimated).
    pub order_bits: u64,
}

fn log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("finite below 2^1000").log2()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().expect("64-bit mantissa").log2() + shift as f64
    }
}

impl SizeEstimate {
    pub fn exact(points: &BigUint, order: &BigUint) -> Self {
        SizeEstimate {
            points: if points.bits() <= 200 {
                points.to_string()
            } else {
                format!("2^{:.1}", log2(points))
            },
            points_log2: log2(points),
            order_bits: order.bits(),
        }
    }

    fn from_log2(points_log2: f64, order_log2: f64) -> Self {
        SizeEstimate {
            points: format!("2^{points_log2:.1}"),
            points_log2,
            order_bits: order_log2.ceil() as u64,
        }
    }
}

/// `X = {a, ..., b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalRequest {
    a: usize,
    b: usize,
}

impl IntervalRequest {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::UnsupportedInterval {
                a,
                b,
                reason: "intervals containing 0 or 1 are not realized by a primitive group".into(),
            });
        }
        if b < a {
            return Err(Error::UnsupportedInterval {
                a,
                b,
                reason: "the upper end is below the lower end".into(),
            });
        }
        Ok(IntervalRequest { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn lengths(&self) -> Vec<usize> {
        (self.a..=self.b).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "lowercase")]
pub enum Family {
    Symmetric {
        n: u64,
    },
    Suzuki {
        m: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
    },
    Affine {
        d: u32,
        p: u32,
        f: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    /// Sym(n) on n points.
    Natural,
    /// Suzuki group on the ovoid.
    Delta,
    /// Suzuki group on 2-subsets of the ovoid.
    Pairs,
    /// Affine group on vectors.
    Vectors,
}

/// Serializable description of a witness group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub extended: bool,
    pub action: Action,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_lengths: Option<Vec<usize>>,
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match (&self.family, self.action) {
            (Family::Symmetric { n }, Action::Natural) => {
                if *n == 0 {
                    return Err(Error::domain("Sym(n) needs n >= 1"));
                }
                if self.extended {
                    return Err(Error::domain("symmetric groups have no extension"));
                }
            }
            (Family::Suzuki { m, .. }, Action::Delta | Action::Pairs) => {
                if *m == 0 {
                    return Err(Error::domain("Suzuki groups need m >= 1"));
                }
            }
            (Family::Affine { d, p, f, .. }, Action::Vectors) => {
                if *d == 0 || *f == 0 {
                    return Err(Error::domain("affine groups need d >= 1 and f >= 1"));
                }
                if !is_prime(*p as u64) {
                    return Err(Error::domain(format!("characteristic {p} is not prime")));
                }
            }
            (_, action) => {
                return Err(Error::domain(format!(
                    "action {action:?} does not fit this family"
                )))
            }
        }
        Ok(())
    }

    /// The irredundant-base lengths the construction is known to have.
    pub fn predicted_lengths(&self) -> Result<Option<Vec<usize>>> {
        self.validate()?;
        Ok(match (&self.family, self.action) {
            (Family::Symmetric { n }, _) => Some(vec![(*n as usize).saturating_sub(1)]),
            (Family::Suzuki { m, .. }, Action::Pairs) => {
                let top = if self.extended { 3 + pi(2 * m + 1)? } else { 3 };
                Some((2..=top).collect())
            }
            (Family::Affine { d, f, .. }, _) => {
                Some(affine::expected_lengths(*d, *f, self.extended))
            }
            _ => None,
        })
    }

    pub fn estimate(&self) -> Result<SizeEstimate> {
        self.validate()?;
        Ok(match &self.family {
            Family::Symmetric { n } => {
                if *n > 100_000 {
                    let n = *n as f64;
                    // log2(n!) via Stirling
                    let order = (n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln())
                        / std::f64::consts::LN_2;
                    SizeEstimate::from_log2(n.log2(), order)
                } else {
                    let order = (1..=*n).fold(BigUint::one(), |acc, k| acc * k);
                    SizeEstimate::exact(&BigUint::from(*n), &order)
                }
            }
            Family::Suzuki { m, .. } => {
                let f = 2 * m + 1;
                if f <= 512 {
                    let q = BigUint::one() << f;
                    let delta = &q * &q + 1u32;
                    let points = match self.action {
                        Action::Pairs => &delta * (&delta - 1u32) / 2u32,
                        _ => delta,
                    };
                    let mut order = suzuki::suzuki_order_big(&q);
                    if self.extended {
                        order *= f;
                    }
                    SizeEstimate::exact(&points, &order)
                } else {
                    let f = f as f64;
                    let points = match self.action {
                        Action::Pairs => 4.0 * f - 1.0,
                        _ => 2.0 * f,
                    };
                    let ext = if self.extended { f.log2() } else { 0.0 };
                    SizeEstimate::from_log2(points, 5.0 * f + ext)
                }
            }
            Family::Affine { d, p, f, .. } => {
                let bits = *d as f64 * *f as f64 * (*p as f64).log2();
                if bits <= 4096.0 {
                    let q = BigUint::from(*p).pow(*f as u32);
                    let points = q.pow(*d);
                    let mut order = points.clone();
                    for i in 0..*d {
                        order *= &points - q.pow(i);
                    }
                    if self.extended {
                        order *= *f;
                    }
                    SizeEstimate::exact(&points, &order)
                } else {
                    let ext = if self.extended {
                        (*f as f64).log2()
                    } else {
                        0.0
                    };
                    SizeEstimate::from_log2(bits, bits * (*d as f64 + 1.0) + ext)
                }
            }
        })
    }
}

/// The witness construction for `X = {a..b}`:
///
/// - `a = b`: Sym(a+1) on a+1 points.
/// - `a = 2, b = 3`: Sz(8) on 2-subsets of the ovoid.
/// - `a = 2, b > 3`: Sz(2^f) ⋊ Aut(GF(2^f)) on 2-subsets, `f` the product of
///   the first `b-3` odd primes.
/// - `b > a >= 3`: AΓL_{a-2}(2^f) on vectors with `f = 2^(b-a+1)`, whose
///   lengths are `{(a-2)+2, ..., (a-2)+1+π(f)}`.
///
/// `explicit_f` replaces the default `f` in the last two cases; it must
/// have the right number of prime factors (and be odd for Suzuki groups).
pub fn witness_spec(x: IntervalRequest, explicit_f: Option<u64>) -> Result<GroupSpec> {
    let (a, b) = (x.a, x.b);
    let unsupported = |reason: String| Error::UnsupportedInterval { a, b, reason };
    let (family, extended, action) = if a == b {
        let n = a as u64 + 1;
        (Family::Symmetric { n }, false, Action::Natural)
    } else if a == 2 && b == 3 && explicit_f.is_none() {
        (
            Family::Suzuki {
                m: 1,
                modulus: None,
            },
            false,
            Action::Pairs,
        )
    } else if a == 2 {
        let f = match explicit_f {
            Some(f) => {
                if f % 2 == 0 || f < 3 {
                    return Err(unsupported(format!(
                        "Suzuki fields need an odd degree >= 3, got {f}"
                    )));
                }
                if b > 3 && pi(f)? != b - 3 {
                    return Err(unsupported(format!(
                        "f = {f} has {} prime factors, {} are needed",
                        pi(f)?,
                        b - 3
                    )));
                }
                f
            }
            None => crate::numtheory::primes()
                .filter(|&p| p % 2 == 1)
                .take(b - 3)
                .try_fold(1u64, |acc, p| acc.checked_mul(p))
                .ok_or_else(|| unsupported("the field degree overflows 64 bits".into()))?,
        };
        (
            Family::Suzuki {
                m: (f - 1) / 2,
                modulus: None,
            },
            b > 3,
            Action::Pairs,
        )
    } else {
        let needed = b - a + 1;
        let f = match explicit_f {
            Some(f) => {
                if f == 0 || pi(f)? != needed {
                    return Err(unsupported(format!(
                        "f = {f} must have exactly {needed} prime factors"
                    )));
                }
                f
            }
            None => u32::try_from(needed)
                .ok()
                .and_then(|k| 1u64.checked_shl(k).filter(|_| k < 64))
                .ok_or_else(|| unsupported("the field degree overflows 64 bits".into()))?,
        };
        let d = u32::try_from(a - 2).map_err(|_| unsupported("dimension too large".into()))?;
        (
            Family::Affine {
                d,
                p: 2,
                f,
                modulus: None,
            },
            true,
            Action::Vectors,
        )
    };
    Ok(GroupSpec {
        family,
        extended,
        action,
        expected_lengths: Some(x.lengths()),
    })
}

/// A built group together with the fully resolved spec (field modulus filled in).
pub struct Instance {
    pub spec: GroupSpec,
    pub group: PermGroup,
    /// The explicit irredundant sequence of the construction, when there is one.
    pub known_chain: Option<crate::chains::BaseSequence>,
}

pub fn symmetric_group(n: usize) -> PermGroup {
    let domain = Domain::indexed(n);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(&domain, &[&[0, 1]]).expect("points in range"));
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(&domain, &[&cycle]).expect("points in range"));
    }
    PermGroup::new(&domain, gens).expect("same domain")
}

pub fn instantiate(spec: &GroupSpec, guard: &ResourceGuard) -> Result<Instance> {
    guard.check_estimate(&spec.estimate()?)?;
    let mut resolved = spec.clone();
    let (group, known_chain) = match &spec.family {
        Family::Symmetric { n } => (symmetric_group(*n as usize), None),
        Family::Suzuki { m, modulus } => {
            let m = u32::try_from(*m).map_err(|_| Error::domain("m too large"))?;
            let params = match modulus {
                Some(c) => SuzukiParams::with_modulus(m, c.clone())?,
                None => SuzukiParams::new(m)?,
            };
            let action = if spec.action == Action::Pairs {
                SuzukiAction::Pairs
            } else {
                SuzukiAction::Delta
            };
            let built = suzuki::build_suzuki_group(&params, spec.extended, action, guard)?;
            resolved.family = Family::Suzuki {
                m: m as u64,
                modulus: Some(params.field().modulus().to_vec()),
            };
            let chain = match action {
                SuzukiAction::Pairs => Some(built.witness_chain()?),
                SuzukiAction::Delta => None,
            };
            (built.group, chain)
        }
        Family::Affine { d, p, f, modulus } => {
            let f = u32::try_from(*f).map_err(|_| Error::domain("f too large"))?;
            let params = match modulus {
                Some(c) => AffineParams::with_modulus(*d, *p, f, c.clone())?,
                None => AffineParams::new(*d, *p, f)?,
            };
            let built = affine::build_affine_group(&params, spec.extended, guard)?;
            resolved.family = Family::Affine {
                d: *d,
                p: *p,
                f: f as u64,
                modulus: Some(params.field().modulus().to_vec()),
            };
            let chain = if spec.extended {
                built.space.base_max()?
            } else {
                built.space.shortest_base(false)?
            };
            (built.group, Some(chain))
        }
    };
    Ok(Instance {
        spec: resolved,
        group,
        known_chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_counting() {
        assert_eq!(pi(1).unwrap(), 0);
        assert_eq!(pi(12).unwrap(), 3);
        assert_eq!(pi(15).unwrap(), 2);
        assert!(pi(0).is_err());
    }

    fn spec(a: usize, b: usize) -> GroupSpec {
        witness_spec(IntervalRequest::new(a, b).unwrap(), None).unwrap()
    }

    #[test]
    fn witness_families() {
        assert_eq!(spec(4, 4).family, Family::Symmetric { n: 5 });
        let s = spec(2, 3);
        assert_eq!(
            s.family,
            Family::Suzuki {
                m: 1,
                modulus: None
            }
        );
        assert!(!s.extended);
        let s = spec(2, 4);
        assert_eq!(
            s.family,
            Family::Suzuki {
                m: 1,
                modulus: None
            }
        );
        assert!(s.extended);
        assert_eq!(
            spec(2, 5).family,
            Family::Suzuki {
                m: 7,
                modulus: None
            }
        );
        assert_eq!(
            spec(3, 5).family,
            Family::Affine {
                d: 1,
                p: 2,
                f: 8,
                modulus: None
            }
        );
        assert_eq!(
            spec(4, 5).family,
            Family::Affine {
                d: 2,
                p: 2,
                f: 4,
                modulus: None
            }
        );
        assert!(IntervalRequest::new(1, 3).is_err());
        assert!(IntervalRequest::new(4, 3).is_err());
    }

    #[test]
    fn predictions_match_requests() {
        for a in 2..8 {
            for b in a..a + 5 {
                let s = spec(a, b);
                assert_eq!(s.expected_lengths, Some((a..=b).collect()));
                assert_eq!(
                    s.predicted_lengths().unwrap(),
                    s.expected_lengths,
                    "{a}..{b}"
                );
                if let Family::Suzuki { m, .. } = s.family {
                    assert!(m >= 1);
                }
            }
        }
    }

    #[test]
    fn explicit_degree() {
        let x = IntervalRequest::new(3, 4).unwrap();
        let s = witness_spec(x, Some(6)).unwrap();
        assert_eq!(
            s.family,
            Family::Affine {
                d: 1,
                p: 2,
                f: 6,
                modulus: None
            }
        );
        assert!(witness_spec(x, Some(8)).is_err());
        let x = IntervalRequest::new(2, 5).unwrap();
        assert!(witness_spec(x, Some(9)).is_ok());
        assert!(witness_spec(x, Some(6)).is_err());
    }

    #[test]
    fn guard_refuses_large_witnesses() {
        let guard = ResourceGuard::default();
        for (a, b) in [(2, 5), (2, 9), (3, 7)] {
            let err = instantiate(&spec(a, b), &guard).err().unwrap();
            assert!(matches!(err, Error::Guard { .. }), "{a}..{b}: {err}");
        }
        let inst = instantiate(&spec(4, 4), &guard).unwrap();
        assert_eq!(inst.group.order(), &BigUint::from(120u32));
    }

    #[test]
    fn json_shape() {
        let s = spec(3, 4);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"family":"affine","params":{"d":1,"p":2,"f":4},"extended":true,"action":"vectors","expected_lengths":[3,4]}"#
        );
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
